// Copyright 2026 The thaimisp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Thai character classes and grapheme clustering.
//
// A cluster is one base character followed by the combining marks that sit
// on it: above/below vowels, tone marks and the thanthakhat.  Leading and
// following vowels (เ, แ, า, ะ, ...) are bases in their own right, so they
// form standalone clusters.  Clusters are byte slices of the input, which
// makes the concatenation of a text's clusters equal to the text.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace thaimisp {

enum class CharKind : std::uint8_t {
  Consonant,
  VowelLeading,
  VowelFollowing,
  VowelAbove,
  VowelBelow,
  ToneMark,
  ThanthakhatMark,
  RepetitionMark,
  Digit,
  Other,
};

const char* to_string(CharKind kind);

CharKind classify_char(char32_t ch);

// True for marks that attach to the preceding base character.
bool is_combining(CharKind kind);
inline bool is_combining(char32_t ch) { return is_combining(classify_char(ch)); }

bool is_tone_mark(char32_t ch);
bool is_whitespace(char32_t ch);

constexpr char32_t kRepetitionMark = U'ๆ';
constexpr char32_t kThanthakhat = U'์';
constexpr char32_t kReplacementChar = U'�';

// One decoded scalar with its byte extent in the source string.  Malformed
// UTF-8 yields one-byte scalars carrying U+FFFD.
struct Scalar {
  char32_t value;
  std::size_t offset;
  std::size_t length;
};

std::vector<Scalar> decode_utf8(std::string_view text);
std::vector<char32_t> to_scalars(std::string_view text);
void append_utf8(std::string& out, char32_t ch);
std::string to_utf8(const std::vector<char32_t>& scalars);

// Byte offsets are valid iff they fall on scalar boundaries.
bool is_scalar_boundary(std::string_view text, std::size_t offset);

struct Cluster {
  std::string text;

  // First scalar of the cluster.
  char32_t base() const;
  CharKind base_kind() const { return classify_char(base()); }

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

std::vector<Cluster> grapheme_clusters(std::string_view text);

// Cluster texts only, convenient for sequence comparisons.
std::vector<std::string> cluster_texts(std::string_view text);

std::string join_clusters(const std::vector<Cluster>& clusters);

}  // namespace thaimisp
