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
#include <random>
#include <string>
#include <vector>

#include "thaimisp/lexicon.hpp"
#include "thaimisp/mae.hpp"
#include "thaimisp/segmenter.hpp"

namespace thaimisp::testing {

inline std::filesystem::path data_dir() { return THAIMISP_DATA_DIR; }
inline std::filesystem::path test_data_dir() { return THAIMISP_TEST_DATA_DIR; }

// The bundled lexicon under data/.
inline const Lexicon& fixture_lexicon() {
  static const Lexicon lex = Lexicon::load(data_dir() / "lexicon.tsv", data_dir() / "wordlist.txt");
  return lex;
}

inline Lexicon make_lexicon(std::vector<LexiconEntry> entries, std::set<std::string> words) {
  return Lexicon(std::move(entries), std::move(words));
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

// One row of tests/data/patterns.tsv.  `expected` differs from `section`
// only for documented mixed-edit pairs.
struct PatternCase {
  std::string misspelt;
  std::string corrected;
  Intention intention;
  PatternLabel section;
  PatternLabel expected;
};

std::vector<PatternCase> load_pattern_cases();

// A copy of `word` with its last character repeated `extra` more times.
// Only meaningful for words ending in a spacing (non-combining) letter.
std::string elongate(const std::string& word, std::size_t extra);

// Synthetic three-class corpus in which the class is carried by the
// spelling variant of one content word:
//   Positive  content word elongated (run of its final letter),
//   Negative  content word replaced by an intentional lexicon misspelling,
//   Neutral   content word in standard spelling.
// Filler words are uninformative.  A fraction of labels is flipped.
struct SyntheticCorpus {
  Lexicon lexicon;
  EmbeddingStore embeddings;
  std::vector<TokenizedSentence> sentences;
};

SyntheticCorpus make_synthetic_corpus(std::size_t size, std::uint64_t seed, Eigen::Index dim = 16,
                                      double label_noise = 0.05);

}  // namespace thaimisp::testing
