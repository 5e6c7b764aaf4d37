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

#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "thaimisp/thai_script.hpp"

namespace thaimisp::testing {

std::vector<PatternCase> load_pattern_cases() {
  std::ifstream in(test_data_dir() / "patterns.tsv");
  if (!in) throw std::runtime_error("cannot open patterns.tsv");
  std::vector<PatternCase> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string col; std::getline(ss, col, '\t');) cols.push_back(col);
    if (cols.size() != 5) throw std::runtime_error("bad patterns.tsv row: " + line);
    const auto intention = parse_intention(cols[2]);
    const auto section = parse_pattern(cols[3]);
    const auto expected = parse_pattern(cols[4]);
    if (!intention || !section || !expected) throw std::runtime_error("bad patterns.tsv labels: " + line);
    out.push_back({cols[0], cols[1], *intention, *section, *expected});
  }
  return out;
}

std::string elongate(const std::string& word, std::size_t extra) {
  const auto clusters = cluster_texts(word);
  std::string out = word;
  for (std::size_t i = 0; i < extra; ++i) out += clusters.back();
  return out;
}

SyntheticCorpus make_synthetic_corpus(std::size_t size, std::uint64_t seed, Eigen::Index dim, double label_noise) {
  // Content words end in a spacing consonant so that elongation makes a run.
  const std::vector<std::pair<std::string, std::string>> content = {
      {"ครับ", "คับ"}, {"กัน", "กาน"}, {"เลย", "เรย"}, {"มึง", "เมิง"}, {"ใจ", "จัย"},
      {"สวย", "สวบ"}, {"กิน", "กิล"}, {"นอน", "นอล"}, {"มาก", "มาด"}, {"ร้าน", "ร้าล"},
  };
  const std::vector<std::string> fillers = {"ไป", "มา", "วันนี้", "เรา", "เธอ", "ที่", "และ", "แต่",
                                            "หนัง", "เรื่อง", "นี้", "อาหาร", "ผม", "คุณ", "จริง"};

  std::set<std::string> words(fillers.begin(), fillers.end());
  std::vector<LexiconEntry> entries;
  for (const auto& [standard, misspelt] : content) {
    words.insert(standard);
    entries.push_back({misspelt, standard, Intention::Intentional, std::nullopt});
  }

  std::vector<std::string> vocab(words.begin(), words.end());
  for (const auto& e : entries) vocab.push_back(e.misspelt);

  SyntheticCorpus out{Lexicon(entries, words), generate_embeddings(vocab, dim, seed), {}};

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> filler_count(2, 5);
  std::uniform_int_distribution<std::size_t> run_extra(2, 6);
  std::uniform_int_distribution<int> label_dist(0, 2);
  std::bernoulli_distribution flip(label_noise);
  for (std::size_t i = 0; i < size; ++i) {
    const auto label = static_cast<Sentiment>(i % kNumSentiments);
    const auto& [standard, misspelt] = pick(rng, content);
    std::string key;
    switch (label) {
      case Sentiment::Positive: key = elongate(standard, run_extra(rng)); break;
      case Sentiment::Negative: key = misspelt; break;
      case Sentiment::Neutral: key = standard; break;
    }
    TokenizedSentence s;
    const std::size_t n = filler_count(rng);
    const std::size_t at = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    for (std::size_t k = 0; k <= n; ++k) s.tokens.push_back(k == at ? key : pick(rng, fillers));
    s.gaps.assign(s.tokens.size() + 1, "");
    s.label = flip(rng) ? static_cast<Sentiment>(label_dist(rng)) : label;
    out.sentences.push_back(std::move(s));
  }
  std::shuffle(out.sentences.begin(), out.sentences.end(), rng);
  return out;
}

}  // namespace thaimisp::testing
