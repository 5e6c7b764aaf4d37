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

#include "thaimisp/segmenter.hpp"

#include "thaimisp/thai_script.hpp"

namespace thaimisp {

const char* to_string(Sentiment s) {
  switch (s) {
    case Sentiment::Negative: return "negative";
    case Sentiment::Neutral: return "neutral";
    case Sentiment::Positive: return "positive";
  }
  return "neutral";
}

std::optional<Sentiment> parse_sentiment(std::string_view text) {
  if (text == "negative") return Sentiment::Negative;
  if (text == "neutral") return Sentiment::Neutral;
  if (text == "positive") return Sentiment::Positive;
  return std::nullopt;
}

std::string TokenizedSentence::detokenize() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i < gaps.size()) out += gaps[i];
    out += tokens[i];
  }
  if (gaps.size() > tokens.size()) out += gaps.back();
  return out;
}

struct Segmenter::Node {
  std::map<std::string, Node, std::less<>> children;
  bool terminal = false;
};

Segmenter::Segmenter(const Lexicon& lex) : root_(std::make_unique<Node>()) {
  for (const auto& word : lex.wordlist()) insert(word);
  for (const auto& entry : lex.entries()) insert(entry.misspelt);
}

Segmenter::Segmenter(Segmenter&&) noexcept = default;
Segmenter& Segmenter::operator=(Segmenter&&) noexcept = default;
Segmenter::~Segmenter() = default;

void Segmenter::insert(std::string_view word) {
  Node* node = root_.get();
  for (auto& cluster : cluster_texts(word)) node = &node->children[std::move(cluster)];
  node->terminal = true;
}

std::size_t Segmenter::longest_match(const std::vector<std::string>& clusters, std::size_t start) const {
  const Node* node = root_.get();
  std::size_t best = 0;
  for (std::size_t i = start; i < clusters.size(); ++i) {
    auto it = node->children.find(clusters[i]);
    if (it == node->children.end()) break;
    node = &it->second;
    if (node->terminal) best = i - start + 1;
  }
  return best;
}

TokenizedSentence Segmenter::segment(std::string_view text) const {
  std::vector<std::string> clusters = cluster_texts(text);
  std::vector<bool> space(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) space[i] = is_whitespace(to_scalars(clusters[i]).front());

  TokenizedSentence out;
  std::string gap;
  std::string oov;
  auto emit = [&](std::string token) {
    out.gaps.push_back(std::move(gap));
    out.tokens.push_back(std::move(token));
    gap.clear();
  };
  auto flush_oov = [&] {
    if (!oov.empty()) emit(std::move(oov));
    oov.clear();
  };

  std::size_t i = 0;
  while (i < clusters.size()) {
    if (space[i]) {
      flush_oov();
      gap += clusters[i++];
      continue;
    }
    std::size_t len = longest_match(clusters, i);
    // Whitespace is never part of a vocabulary match.
    for (std::size_t k = i; k < i + len; ++k) {
      if (space[k]) {
        len = k - i;
        break;
      }
    }
    if (len == 0) {
      oov += clusters[i++];
      continue;
    }
    flush_oov();
    std::string token;
    for (std::size_t k = i; k < i + len; ++k) token += clusters[k];
    i += len;
    // Absorb an elongation of the word's last cluster when it reaches a run
    // of three, e.g. กิน + นนนน.
    const std::string& last = clusters[i - 1];
    std::size_t copies = 0;
    while (i + copies < clusters.size() && clusters[i + copies] == last) ++copies;
    if (copies >= 2) {
      for (std::size_t k = 0; k < copies; ++k) token += last;
      i += copies;
    }
    emit(std::move(token));
  }
  flush_oov();
  out.gaps.push_back(std::move(gap));
  return out;
}

TokenizedSentence segment(std::string_view text, const Lexicon& lex) { return Segmenter(lex).segment(text); }

}  // namespace thaimisp
