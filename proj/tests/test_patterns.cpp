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
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "thaimisp/error.hpp"
#include "thaimisp/patterns.hpp"
#include "thaimisp/thai_script.hpp"

using namespace thaimisp;

namespace {

// Plain Levenshtein distance over clusters, computed independently of
// cluster_diff's traceback.
std::size_t levenshtein(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

TEST_CASE("cluster_diff examples") {
  const auto d = cluster_diff("เมิง", "มึง");
  CHECK_FALSE(d.empty());
  CHECK_FALSE(d.substitutions.empty());
  CHECK(cluster_diff("กิน", "กิน").empty());
  const auto r = cluster_diff("มากกก", "มาก");
  CHECK(r.insertions == std::vector<std::string>{"ก", "ก"});
  CHECK(r.deletions.empty());
  CHECK(r.substitutions.empty());
}

TEST_CASE("cluster_diff is a minimal edit script") {
  const std::vector<std::string> alphabet = {"ก", "กิ", "ค่", "า", "ะ", "เ", "น", "ๆ", "ร์"};
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 1500; ++iter) {
    std::string m;
    std::string c;
    for (int k = 0; k < iter % 7; ++k) m += testing::pick(rng, alphabet);
    for (int k = 0; k < (iter / 7) % 7; ++k) c += testing::pick(rng, alphabet);
    const auto d = cluster_diff(m, c);
    CHECK(apply_diff(d, c) == m);
    CHECK(d.cost() == levenshtein(cluster_texts(m), cluster_texts(c)));
    CHECK(d.cost() == d.substitutions.size() + d.insertions.size() + d.deletions.size());
  }
}

TEST_CASE("normalisation helpers") {
  CHECK(strip_tones("ค่ะ") == "คะ");
  CHECK(strip_tones("ก๊๋") == "ก");
  CHECK(fold_vowels("กัน") == fold_vowels("กาน"));
  CHECK(fold_vowels("ใจ") == fold_vowels("จัย"));
  CHECK(fold_vowels("กรรม") == fold_vowels("กำ"));
  CHECK(fold_vowels("กุ") == fold_vowels("กู"));
  CHECK(common_consonants("ไปรษณีย์") == "ไปรสนีย์");
  CHECK(common_consonants("กิน") == "กิน");
}

TEST_CASE("classify_pattern examples") {
  CHECK(classify_pattern("มากกก", "มาก", Intention::Intentional) == PatternLabel::CharacterRepetition);
  CHECK(classify_pattern("คร๊าบ", "ครับ", Intention::Intentional) == PatternLabel::ToneModification);
  CHECK(classify_pattern("เธอว์", "เธอ", Intention::Intentional) == PatternLabel::ConsonantDeviation);
  CHECK(classify_pattern("คะ", "ค่ะ", Intention::Unintentional) == PatternLabel::ToneConfusion);
  CHECK(classify_pattern("พน", "พรุ่งนี้", Intention::Intentional) == PatternLabel::AdHocAbbreviation);
}

TEST_CASE("intention selects between paired categories") {
  CHECK(classify_pattern("คร๊าบ", "ครับ", Intention::Unintentional) == PatternLabel::ToneConfusion);
  CHECK(classify_pattern("คะ", "ค่ะ", Intention::Intentional) == PatternLabel::ToneModification);
  CHECK(classify_pattern("สัปปะรส", "สับปะรด", Intention::Intentional) == PatternLabel::ConsonantDeviation);
  // An intentional dropped letter reads as a simplification.
  CHECK(classify_pattern("รังสรร", "รังสรรค์", Intention::Intentional) == PatternLabel::Simplifying);
  CHECK(classify_pattern("เรย", "เลย", Intention::Unintentional) == PatternLabel::ConsonantConfusion);
}

TEST_CASE("unmatched pairs fall back by intention") {
  CHECK(classify_pattern("สุโข่ย", "สุดยอด", Intention::Intentional) == PatternLabel::Others);
  CHECK(classify_pattern("สุโข่ย", "สุดยอด", Intention::Unintentional) == PatternLabel::Typo);
}

TEST_CASE("classify_pattern rejects non-misspellings") {
  CHECK_THROWS_AS(classify_pattern("กิน", "กิน", Intention::Intentional), ValidationError);
  CHECK_THROWS_AS(classify_pattern("", "กิน", Intention::Intentional), ValidationError);
  CHECK_THROWS_AS(classify_pattern("กิน", "", Intention::Intentional), ValidationError);
}

TEST_CASE("fixture pairs classify as documented") {
  for (const auto& c : testing::load_pattern_cases()) {
    CAPTURE(c.misspelt);
    CAPTURE(c.corrected);
    CHECK(std::string(to_string(classify_pattern(c.misspelt, c.corrected, c.intention))) == to_string(c.expected));
  }
}

TEST_CASE("the classification is the first rule that fires") {
  for (const auto& c : testing::load_pattern_cases()) {
    const auto trace = trace_pattern(c.misspelt, c.corrected, c.intention);
    const auto first = std::find_if(trace.begin(), trace.end(), [](const RuleOutcome& r) { return r.fired; });
    REQUIRE(first != trace.end());
    CHECK(first->label == classify_pattern(c.misspelt, c.corrected, c.intention));
    CHECK(trace.back().fired);
  }
}
