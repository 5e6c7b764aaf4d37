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

// Misspelling detection (MD) and correction (MC).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "thaimisp/lexicon.hpp"

namespace thaimisp {

enum class MispTag : std::uint8_t { Lol, Rep, Int, Msp, Null };

inline constexpr std::size_t kNumTags = 4;  // tags with a surface form

// "<lol>", "<rep>", "<int>", "<msp>"; empty for Null.
std::string_view surface(MispTag tag);
// "LOL", "REP", "INT", "MSP", "NULL".
const char* to_string(MispTag tag);
std::optional<MispTag> tag_from_surface(std::string_view token);

// Minimum run lengths that count as deliberate repetition.
inline constexpr std::size_t kLaughRun = 3;        // '5'
inline constexpr std::size_t kClusterRun = 3;      // any other cluster
inline constexpr std::size_t kRepetitionMarkRun = 2;  // ๆ

struct RunAnalysis {
  std::string collapsed;
  std::string max_run_char;
  std::size_t max_run_len = 1;
};

// Reduces every maximal run of identical clusters to one occurrence.
// Throws ValidationError on an empty token.
RunAnalysis collapse_runs(std::string_view token);

// Which repetition case, if any, the token's runs trigger: Lol, Rep or Null.
MispTag repetition_tag(std::string_view token);

MispTag detect(std::string_view token, const Lexicon& lex);

// Maps a token to its standard form.  Idempotent.
//
//  * non-key wordlist words are returned as-is;
//  * a lexicon hit yields its corrected form, unless that form is itself a
//    misspelt key (a context-dependent pair such as คะ/ค่ะ), in which case
//    the token is returned unchanged;
//  * a token with flagged repetition whose collapsed form is in the
//    vocabulary is corrected through the collapsed form;
//  * anything else is returned unchanged.
std::string correct(std::string_view token, const Lexicon& lex);

}  // namespace thaimisp
