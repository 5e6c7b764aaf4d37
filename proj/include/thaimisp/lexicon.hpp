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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace thaimisp {

enum class Intention : std::uint8_t { Intentional, Unintentional };

// The ten misspelling patterns.  A lexicon row may leave its pattern
// unlabeled, which is modelled as an empty optional.
enum class PatternLabel : std::uint8_t {
  CharacterRepetition,
  VowelSubstitution,
  ToneModification,
  ConsonantDeviation,
  Simplifying,
  AdHocAbbreviation,
  ToneConfusion,
  ConsonantConfusion,
  Typo,
  Others,
};

const char* to_string(Intention intention);
const char* to_string(PatternLabel label);
std::optional<Intention> parse_intention(std::string_view text);
std::optional<PatternLabel> parse_pattern(std::string_view text);

struct LexiconEntry {
  std::string misspelt;
  std::string corrected;
  Intention intention = Intention::Intentional;
  std::optional<PatternLabel> pattern;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

// Misspelling dictionary plus the standard wordlist.  Immutable once built.
class Lexicon {
 public:
  Lexicon() = default;

  // Validates key uniqueness, entry well-formedness and that every
  // corrected form is a wordlist word.  Throws ValidationError.
  Lexicon(std::vector<LexiconEntry> entries, std::set<std::string> wordlist);

  static Lexicon load(const std::filesystem::path& lexicon_path,
                      const std::filesystem::path& wordlist_path);
  static Lexicon parse(std::istream& lexicon_tsv, std::istream& wordlist,
                       std::string_view lexicon_name = "<lexicon>");

  const LexiconEntry* find(std::string_view misspelt) const;
  std::optional<LexiconEntry> lookup(std::string_view misspelt) const;

  bool is_key(std::string_view surface) const { return find(surface) != nullptr; }
  bool in_wordlist(std::string_view word) const;

  // In load order.
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  const std::set<std::string, std::less<>>& wordlist() const { return wordlist_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::set<std::string, std::less<>> wordlist_;
};

std::set<std::string> read_wordlist(std::istream& in);
std::set<std::string> read_wordlist(const std::filesystem::path& path);

}  // namespace thaimisp
