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

#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "thaimisp/error.hpp"
#include "thaimisp/lexicon.hpp"

using namespace thaimisp;
using thaimisp::testing::fixture_lexicon;

namespace {

Lexicon parse(const std::string& tsv, const std::string& words) {
  std::istringstream a(tsv);
  std::istringstream b(words);
  return Lexicon::parse(a, b, "lex.tsv");
}

std::string error_of(const std::string& tsv, const std::string& words) {
  try {
    parse(tsv, words);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("a lexicon row loads with its intention and pattern") {
  const auto lex = parse("มากกก\tมาก\tintentional\tcharacter_repetition\n", "มาก\n");
  const auto entry = lex.lookup("มากกก");
  REQUIRE(entry);
  CHECK(entry->corrected == "มาก");
  CHECK(entry->intention == Intention::Intentional);
  CHECK(entry->pattern == PatternLabel::CharacterRepetition);
}

TEST_CASE("duplicate keys are rejected with key and line") {
  const auto msg = error_of("กุ\tกู\tintentional\t\nกุ\tกู\tintentional\t\n", "กู\n");
  CHECK(msg.find("กุ") != std::string::npos);
  CHECK(msg.find(":2:") != std::string::npos);
}

TEST_CASE("a corrected form missing from the wordlist is rejected") {
  CHECK_FALSE(error_of("คับ\tครับ\tintentional\tsimplifying\n", "กู\n").empty());
}

TEST_CASE("rows need exactly four columns") {
  const auto msg = error_of("\n\nคับ\tครับ\tintentional\n", "ครับ\n");
  CHECK(msg.find(":3:") != std::string::npos);
  CHECK_FALSE(error_of("คับ\tครับ\tintentional\tsimplifying\textra\n", "ครับ\n").empty());
}

TEST_CASE("malformed fields are rejected") {
  CHECK_FALSE(error_of("คับ\tครับ\tmaybe\t\n", "ครับ\n").empty());
  CHECK_FALSE(error_of("คับ\tครับ\tintentional\tnot_a_pattern\n", "ครับ\n").empty());
  CHECK_FALSE(error_of("ครับ\tครับ\tintentional\t\n", "ครับ\n").empty());
  CHECK_FALSE(error_of("ค ับ\tครับ\tintentional\t\n", "ครับ\n").empty());
  CHECK_FALSE(error_of("\tครับ\tintentional\t\n", "ครับ\n").empty());
}

TEST_CASE("an empty or unlabeled pattern column loads as unlabeled") {
  const auto lex = parse("คับ\tครับ\tintentional\t\nกุ\tกู\tunintentional\tunlabeled\n", "ครับ\nกู\n");
  CHECK_FALSE(lex.lookup("คับ")->pattern.has_value());
  CHECK_FALSE(lex.lookup("กุ")->pattern.has_value());
  CHECK(lex.lookup("กุ")->intention == Intention::Unintentional);
}

TEST_CASE("CRLF input and wordlist comments are tolerated") {
  const auto lex = parse("คับ\tครับ\tintentional\tsimplifying\r\n", "# words\r\n\r\n ครับ \r\n");
  CHECK(lex.in_wordlist("ครับ"));
  CHECK(lex.wordlist().size() == 1);
}

TEST_CASE("fixture lookups") {
  const auto& lex = fixture_lexicon();
  CHECK(lex.lookup("แม่ง")->intention == Intention::Intentional);
  CHECK(lex.lookup("ค่ะ")->intention == Intention::Unintentional);
  CHECK_FALSE(lex.lookup("กิน"));
  CHECK(lex.find("กิน") == nullptr);
  CHECK(lex.is_key("คับ"));
  CHECK_FALSE(lex.is_key("ครับ"));
}

TEST_CASE("fixture invariants") {
  const auto& lex = fixture_lexicon();
  CHECK(lex.size() >= 10);
  for (const auto& e : lex.entries()) {
    CHECK(e.misspelt != e.corrected);
    CHECK(lex.in_wordlist(e.corrected));
  }
}

TEST_CASE("loading is deterministic") {
  const auto a = Lexicon::load(testing::data_dir() / "lexicon.tsv", testing::data_dir() / "wordlist.txt");
  const auto b = Lexicon::load(testing::data_dir() / "lexicon.tsv", testing::data_dir() / "wordlist.txt");
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.entries()[i].misspelt == b.entries()[i].misspelt);
    CHECK(a.entries()[i].corrected == b.entries()[i].corrected);
  }
  CHECK(a.wordlist() == b.wordlist());
}

TEST_CASE("missing files raise IoError") {
  CHECK_THROWS_AS(Lexicon::load("/nonexistent/lex.tsv", testing::data_dir() / "wordlist.txt"), IoError);
}

TEST_CASE("label names round-trip") {
  for (auto i : {Intention::Intentional, Intention::Unintentional}) CHECK(parse_intention(to_string(i)) == i);
  for (int p = 0; p < 10; ++p) {
    const auto label = static_cast<PatternLabel>(p);
    CHECK(parse_pattern(to_string(label)) == label);
  }
}
