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

#include "thaimisp/lexicon.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <sstream>
#include <utility>

#include "thaimisp/error.hpp"
#include "thaimisp/thai_script.hpp"

namespace thaimisp {

namespace {

constexpr std::array<std::pair<PatternLabel, const char*>, 10> kPatternNames{{
    {PatternLabel::CharacterRepetition, "character_repetition"},
    {PatternLabel::VowelSubstitution, "vowel_substitution"},
    {PatternLabel::ToneModification, "tone_modification"},
    {PatternLabel::ConsonantDeviation, "consonant_deviation"},
    {PatternLabel::Simplifying, "simplifying"},
    {PatternLabel::AdHocAbbreviation, "ad_hoc_abbreviation"},
    {PatternLabel::ToneConfusion, "tone_confusion"},
    {PatternLabel::ConsonantConfusion, "consonant_confusion"},
    {PatternLabel::Typo, "typo"},
    {PatternLabel::Others, "others"},
}};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return cols;
}

bool has_whitespace(std::string_view s) {
  for (char32_t ch : to_scalars(s))
    if (is_whitespace(ch)) return true;
  return false;
}

// Per-entry checks that do not need the rest of the lexicon.
std::optional<std::string> entry_problem(const LexiconEntry& e) {
  if (e.misspelt.empty()) return "empty misspelt form";
  if (has_whitespace(e.misspelt)) return "misspelt form '" + e.misspelt + "' contains whitespace";
  if (e.corrected.empty()) return "empty corrected form for '" + e.misspelt + "'";
  if (e.misspelt == e.corrected) return "misspelt and corrected forms are both '" + e.misspelt + "'";
  return std::nullopt;
}

}  // namespace

const char* to_string(Intention intention) {
  return intention == Intention::Intentional ? "intentional" : "unintentional";
}

const char* to_string(PatternLabel label) {
  for (const auto& [l, name] : kPatternNames)
    if (l == label) return name;
  return "others";
}

std::optional<Intention> parse_intention(std::string_view text) {
  if (text == "intentional") return Intention::Intentional;
  if (text == "unintentional") return Intention::Unintentional;
  return std::nullopt;
}

std::optional<PatternLabel> parse_pattern(std::string_view text) {
  for (const auto& [l, name] : kPatternNames)
    if (text == name) return l;
  return std::nullopt;
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries, std::set<std::string> wordlist)
    : entries_(std::move(entries)), wordlist_(wordlist.begin(), wordlist.end()) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (auto problem = entry_problem(e))
      throw ValidationError("lexicon entry " + std::to_string(i + 1) + ": " + *problem);
    if (!wordlist_.contains(e.corrected))
      throw ValidationError("lexicon entry '" + e.misspelt + "': corrected form '" + e.corrected +
                            "' is not in the wordlist");
    auto [it, inserted] = index_.emplace(e.misspelt, i);
    if (!inserted) throw ValidationError("duplicate misspelt key '" + e.misspelt + "'");
  }
}

Lexicon Lexicon::parse(std::istream& lexicon_tsv, std::istream& wordlist, std::string_view lexicon_name) {
  auto words = read_wordlist(wordlist);

  std::vector<LexiconEntry> entries;
  std::unordered_map<std::string, std::size_t> first_line;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ValidationError(std::string(lexicon_name) + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(lexicon_tsv, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (trim(view).empty()) continue;

    const auto cols = split_tabs(view);
    if (cols.size() != 4) fail("expected 4 tab-separated columns, got " + std::to_string(cols.size()));

    LexiconEntry entry;
    entry.misspelt = std::string(cols[0]);
    entry.corrected = std::string(cols[1]);
    const auto intention = parse_intention(cols[2]);
    if (!intention) fail("unknown intention '" + std::string(cols[2]) + "'");
    entry.intention = *intention;
    if (!cols[3].empty() && cols[3] != "unlabeled") {
      entry.pattern = parse_pattern(cols[3]);
      if (!entry.pattern) fail("unknown pattern '" + std::string(cols[3]) + "'");
    }

    if (auto [it, inserted] = first_line.emplace(entry.misspelt, line_no); !inserted)
      fail("duplicate misspelt key '" + entry.misspelt + "' (first seen on line " + std::to_string(it->second) + ")");
    if (auto problem = entry_problem(entry)) fail(*problem);
    if (!words.contains(entry.corrected))
      fail("corrected form '" + entry.corrected + "' of '" + entry.misspelt + "' is not in the wordlist");
    entries.push_back(std::move(entry));
  }
  return Lexicon(std::move(entries), std::move(words));
}

Lexicon Lexicon::load(const std::filesystem::path& lexicon_path, const std::filesystem::path& wordlist_path) {
  std::ifstream lex(lexicon_path);
  if (!lex) throw IoError("cannot open lexicon '" + lexicon_path.string() + "'");
  std::ifstream words(wordlist_path);
  if (!words) throw IoError("cannot open wordlist '" + wordlist_path.string() + "'");
  return parse(lex, words, lexicon_path.string());
}

const LexiconEntry* Lexicon::find(std::string_view misspelt) const {
  const auto it = index_.find(std::string(misspelt));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::optional<LexiconEntry> Lexicon::lookup(std::string_view misspelt) const {
  if (const auto* e = find(misspelt)) return *e;
  return std::nullopt;
}

bool Lexicon::in_wordlist(std::string_view word) const { return wordlist_.find(word) != wordlist_.end(); }

std::set<std::string> read_wordlist(std::istream& in) {
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto word = trim(line);
    if (word.empty() || word.front() == '#') continue;
    words.emplace(word);
  }
  return words;
}

std::set<std::string> read_wordlist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open wordlist '" + path.string() + "'");
  return read_wordlist(in);
}

}  // namespace thaimisp
