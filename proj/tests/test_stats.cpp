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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "thaimisp/error.hpp"
#include "thaimisp/stats.hpp"

using namespace thaimisp;
constexpr auto I = Intention::Intentional;
constexpr auto U = Intention::Unintentional;
using Labels = std::vector<Intention>;

namespace {

// Cohen's kappa from an explicit 2x2 contingency table.
double kappa_oracle(const Labels& a, const Labels& b) {
  double table[2][2] = {{0, 0}, {0, 0}};
  for (std::size_t i = 0; i < a.size(); ++i) table[static_cast<int>(a[i])][static_cast<int>(b[i])] += 1;
  const double n = static_cast<double>(a.size());
  const double po = (table[0][0] + table[1][1]) / n;
  double pe = 0;
  for (int k = 0; k < 2; ++k) pe += ((table[k][0] + table[k][1]) / n) * ((table[0][k] + table[1][k]) / n);
  if (pe == 1.0) return po == 1.0 ? 1.0 : 0.0;
  return (po - pe) / (1 - pe);
}

std::vector<AnnotationRecord> parse_annotations(const std::string& text) {
  std::istringstream in(text);
  return read_annotations(in);
}

CorpusSummary summarize(const std::string& text, std::size_t top_k = 5) {
  std::istringstream in(text);
  return corpus_summary(in, top_k, "c.jsonl");
}

std::string summary_error(const std::string& text) {
  try {
    summarize(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("cohen_kappa examples") {
  const Labels x{I, U, I, U};
  CHECK(cohen_kappa(x, x) == 1.0);
  CHECK(cohen_kappa(Labels{I, I, U, U}, Labels{I, I, U, I}) == doctest::Approx(0.5));
  CHECK(cohen_kappa(Labels{I, I}, Labels{U, U}) <= 0.0);
  CHECK(cohen_kappa(Labels{I, U}, Labels{U, I}) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(cohen_kappa(Labels{}, Labels{}), ValidationError);
  CHECK_THROWS_AS(cohen_kappa(Labels{I}, Labels{I, U}), ValidationError);
}

TEST_CASE("cohen_kappa agrees with the contingency-table oracle") {
  std::mt19937_64 rng(12);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> len(1, 40);
  for (int iter = 0; iter < 500; ++iter) {
    Labels a(static_cast<std::size_t>(len(rng)));
    Labels b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = coin(rng) ? I : U;
      b[i] = coin(rng) ? a[i] : (coin(rng) ? I : U);
    }
    const double k = cohen_kappa(a, b);
    CHECK(std::abs(k - kappa_oracle(a, b)) <= 1e-12);
    CHECK(k >= -1.0);
    CHECK(k <= 1.0);
    if (std::count(a.begin(), a.end(), I) % static_cast<long>(a.size()) != 0) CHECK(cohen_kappa(a, a) == 1.0);
  }
}

TEST_CASE("pairwise kappa matrix") {
  const auto records = parse_annotations(
      R"({"item_id":"1","annotator_id":"a","label":"intentional"}
{"item_id":"1","annotator_id":"b","label":"intentional"}
{"item_id":"2","annotator_id":"a","label":"unintentional"}
{"item_id":"2","annotator_id":"b","label":"unintentional"}
{"item_id":"3","annotator_id":"c","label":"unintentional"}
)");
  const auto m = pairwise_kappa_matrix(records);
  REQUIRE(m.annotators == std::vector<std::string>{"a", "b", "c"});
  CHECK(m.at(0, 1) == 1.0);
  CHECK(m.at(1, 0) == 1.0);
  CHECK(m.at(0, 0) == 1.0);
  CHECK_FALSE(m.at(0, 2));
  CHECK_FALSE(m.at(2, 1));
}

TEST_CASE("five annotators match a brute-force pairwise oracle") {
  std::mt19937_64 rng(31);
  std::bernoulli_distribution coin(0.6);
  std::vector<AnnotationRecord> records;
  std::map<std::string, std::map<std::string, Intention>> by;
  const std::vector<std::string> names = {"a1", "a2", "a3", "a4", "a5"};
  for (int item = 0; item < 60; ++item) {
    // Three of five annotators per item.
    std::vector<std::string> who = names;
    std::shuffle(who.begin(), who.end(), rng);
    for (int k = 0; k < 3; ++k) {
      const auto label = coin(rng) ? I : U;
      records.push_back({std::to_string(item), who[static_cast<std::size_t>(k)], label, std::to_string(item)});
      by[who[static_cast<std::size_t>(k)]][std::to_string(item)] = label;
    }
  }
  const auto m = pairwise_kappa_matrix(records);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      if (i == j) continue;
      Labels a;
      Labels b;
      for (const auto& [item, label] : by[names[i]]) {
        if (auto it = by[names[j]].find(item); it != by[names[j]].end()) {
          a.push_back(label);
          b.push_back(it->second);
        }
      }
      REQUIRE(m.at(i, j));
      CHECK(std::abs(*m.at(i, j) - kappa_oracle(a, b)) <= 1e-12);
    }
  }
}

TEST_CASE("annotation input errors") {
  CHECK_THROWS_AS(parse_annotations(R"({"item_id":"1","annotator_id":"a","label":"intentional"}
{"item_id":"1","annotator_id":"a","label":"unintentional"}
)"),
                  ValidationError);
  CHECK_THROWS_AS(parse_annotations(R"({"item_id":"1","annotator_id":"a","label":"maybe"})"), ValidationError);
  CHECK_THROWS_AS(parse_annotations("nope\n"), ValidationError);
  const auto one = parse_annotations(R"({"item_id":"1","annotator_id":"a","label":"intentional"})");
  CHECK_THROWS_AS(pairwise_kappa_matrix(one), ValidationError);
}

TEST_CASE("label entropy examples") {
  CHECK(label_entropy({"t", Labels(6, I)}) == 0.0);
  CHECK(label_entropy({"t", Labels{I, I, I, U, U, U}}) == 1.0);
  CHECK_FALSE(label_entropy({"t", Labels(5, I)}));
  CHECK(label_entropy({"t", Labels(5, I)}, 5) == 0.0);
}

TEST_CASE("binary entropy is bounded and peaks at an even split") {
  for (std::size_t n = 6; n <= 30; ++n) {
    double best = -1;
    std::size_t best_k = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      Labels labels(k, I);
      labels.resize(n, U);
      const double h = *label_entropy({"t", labels});
      CHECK(h >= 0.0);
      CHECK(h <= 1.0);
      if (h > best) {
        best = h;
        best_k = k;
      }
    }
    CHECK((best_k == n / 2 || best_k == (n + 1) / 2));
    if (n % 2 == 0) CHECK(best == 1.0);
  }
}

TEST_CASE("observations group by term") {
  const auto records = parse_annotations(
      R"({"item_id":"1","annotator_id":"a","label":"intentional","term":"คับ"}
{"item_id":"1","annotator_id":"b","label":"unintentional","term":"คับ"}
{"item_id":"2","annotator_id":"a","label":"unintentional","term":"ค่ะ"}
)");
  const auto terms = group_by_term(records);
  REQUIRE(terms.size() == 2);
  // Byte order: U+0E31 sorts before U+0E48.
  CHECK(terms[0].term == "คับ");
  CHECK(terms[0].labels.size() == 2);
  CHECK(terms[1].term == "ค่ะ");
}

TEST_CASE("corpus summary counts") {
  const std::string text =
      "{\"text\":\"มากกก คับ\",\"label\":\"positive\",\"misspellings\":[{\"start\":0,\"end\":15,\"intention\":"
      "\"intentional\"},{\"start\":16,\"end\":25,\"intention\":\"intentional\"}]}\n"
      "{\"text\":\"ไป\"}\n"
      "{\"text\":\"ค่ะ\",\"label\":\"neutral\",\"misspellings\":[{\"start\":0,\"end\":9,\"intention\":"
      "\"unintentional\"}]}\n"
      "{\"text\":\"ดี\",\"misspellings\":[]}\n";
  const auto s = summarize(text);
  CHECK(s.sentences == 4);
  CHECK(s.sentences_with_misspelling == 2);
  CHECK(s.misspelling_sentence_percent == 50.0);
  CHECK(s.occurrences == 3);
  CHECK(s.unique_types == 3);
  CHECK(s.intentional_types == 2);
  CHECK(s.unintentional_types == 1);
  CHECK(s.class_counts.at("positive") == 1);
  CHECK(s.class_percent.at("neutral") == 50.0);
}

TEST_CASE("empty corpus summary is all zero") {
  const auto s = summarize("");
  CHECK(s.sentences == 0);
  CHECK(s.occurrences == 0);
  CHECK(s.misspelling_sentence_percent == 0.0);
  CHECK(s.top_intentional.empty());
}

TEST_CASE("top terms reproduce a constructed frequency table") {
  const std::vector<std::pair<std::string, int>> intentional = {
      {"แม่ง", 9}, {"คับ", 8}, {"กุ", 7}, {"สัส", 6}, {"มากกก", 5}, {"เรย", 1}};
  const std::vector<std::pair<std::string, int>> unintentional = {
      {"ค่ะ", 9}, {"คะ", 8}, {"จ่ะ", 7}, {"แล้ว", 6}, {"อ้ะ", 5}, {"ละ", 2}};
  std::ostringstream corpus;
  auto emit = [&](const std::string& term, const char* intention) {
    corpus << R"({"text":")" << term << R"(","misspellings":[{"start":0,"end":)" << term.size()
           << R"(,"intention":")" << intention << "\"}]}\n";
  };
  for (const auto& [t, n] : intentional)
    for (int k = 0; k < n; ++k) emit(t, "intentional");
  for (const auto& [t, n] : unintentional)
    for (int k = 0; k < n; ++k) emit(t, "unintentional");
  const auto s = summarize(corpus.str(), 5);
  REQUIRE(s.top_intentional.size() == 5);
  REQUIRE(s.top_unintentional.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(s.top_intentional[i].term == intentional[i].first);
    CHECK(s.top_intentional[i].count == static_cast<std::size_t>(intentional[i].second));
    CHECK(s.top_unintentional[i].term == unintentional[i].first);
  }
}

TEST_CASE("summary is invariant under sentence order") {
  std::vector<std::string> lines = {
      R"({"text":"คับ","label":"positive","misspellings":[{"start":0,"end":9,"intention":"intentional"}]})",
      R"({"text":"กุ","label":"negative","misspellings":[{"start":0,"end":6,"intention":"intentional"}]})",
      R"({"text":"ค่ะ","misspellings":[{"start":0,"end":9,"intention":"unintentional"}]})",
      R"({"text":"ไป"})",
      R"({"text":"คับ","label":"neutral","misspellings":[{"start":0,"end":9,"intention":"intentional"}]})"};
  auto join = [&] {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
  };
  const auto reference = to_json(summarize(join())).dump();
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(lines.begin(), lines.end(), rng);
    CHECK(to_json(summarize(join())).dump() == reference);
  }
}

TEST_CASE("malformed spans report their line") {
  CHECK(summary_error("{\"text\":\"ไป\"}\n{\"text\":\"ไป\",\"misspellings\":[{\"start\":0,\"end\":99,\"intention\":"
                      "\"intentional\"}]}\n")
            .find("c.jsonl:2:") != std::string::npos);
  CHECK_FALSE(summary_error(R"({"text":"ไป","misspellings":[{"start":1,"end":3,"intention":"intentional"}]})").empty());
  CHECK_FALSE(summary_error(R"({"text":"ไป","misspellings":[{"start":0,"end":3,"intention":"both"}]})").empty());
  CHECK_FALSE(summary_error(R"({"text":"ไป","misspellings":[{"start":3,"end":3,"intention":"intentional"}]})").empty());
  CHECK_FALSE(summary_error(R"({"misspellings":[]})").empty());
}

TEST_CASE("CSV writers quote awkward fields") {
  KappaMatrix m{{"a,1", "b"}, {1.0, 0.5, 0.5, 1.0}};
  std::ostringstream kappa;
  write_kappa_csv(m, kappa);
  CHECK(kappa.str() == "annotator,\"a,1\",b\n\"a,1\",1,0.5\nb,0.5,1\n");
  const std::vector<TermObservations> terms = {{"x\"y", Labels{I, I, I, U, U, U}}, {"z", Labels{I}}};
  std::ostringstream entropy;
  write_entropy_csv(terms, 6, entropy);
  CHECK(entropy.str() == "term,observations,entropy\n\"x\"\"y\",6,1\n");
}
