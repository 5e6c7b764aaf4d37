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

// Dictionary longest-match word segmentation over grapheme clusters.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thaimisp/lexicon.hpp"

namespace thaimisp {

enum class Sentiment : std::uint8_t { Negative = 0, Neutral = 1, Positive = 2 };

inline constexpr std::size_t kNumSentiments = 3;

const char* to_string(Sentiment s);
std::optional<Sentiment> parse_sentiment(std::string_view text);

struct TokenizedSentence {
  std::vector<std::string> tokens;
  // gaps[i] is the whitespace preceding tokens[i]; gaps.back() trails the
  // last token.  Empty for pre-tokenized input.
  std::vector<std::string> gaps;
  std::optional<Sentiment> label;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }

  // Reproduces the segmented text when gaps are recorded, otherwise joins
  // the tokens with nothing in between.
  std::string detokenize() const;
};

class Segmenter {
 public:
  // Vocabulary is the wordlist together with every misspelt key.
  explicit Segmenter(const Lexicon& lex);
  Segmenter(const Segmenter&) = delete;
  Segmenter& operator=(const Segmenter&) = delete;
  Segmenter(Segmenter&&) noexcept;
  Segmenter& operator=(Segmenter&&) noexcept;
  ~Segmenter();

  TokenizedSentence segment(std::string_view text) const;

 private:
  struct Node;
  void insert(std::string_view word);
  std::size_t longest_match(const std::vector<std::string>& clusters, std::size_t start) const;

  std::unique_ptr<Node> root_;
};

// Builds a throwaway Segmenter; prefer the class when segmenting many lines.
TokenizedSentence segment(std::string_view text, const Lexicon& lex);

}  // namespace thaimisp
