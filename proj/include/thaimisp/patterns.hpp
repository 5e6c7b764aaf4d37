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

// Rule-based classification of (misspelt, corrected) pairs into the ten
// misspelling patterns.

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thaimisp/lexicon.hpp"

namespace thaimisp {

struct EditOp {
  enum class Kind { Substitute, Insert, Delete };
  Kind kind;
  // Cluster index in the corrected form the op applies before/at.
  std::size_t corrected_pos;
  // Cluster index in the misspelt form produced by the op.
  std::size_t misspelt_pos;
  std::string from;  // corrected cluster (Substitute, Delete)
  std::string to;    // misspelt cluster (Substitute, Insert)
};

// Minimal unit-cost edit script turning the corrected form into the
// misspelt one, over grapheme clusters.
struct ClusterDiff {
  std::vector<std::pair<std::string, std::string>> substitutions;  // (corrected, misspelt)
  std::vector<std::string> insertions;
  std::vector<std::string> deletions;
  std::vector<EditOp> ops;  // in corrected order

  bool empty() const { return ops.empty(); }
  std::size_t cost() const { return ops.size(); }
};

ClusterDiff cluster_diff(std::string_view misspelt, std::string_view corrected);

// Replays the diff on the corrected form; yields the misspelt form.
std::string apply_diff(const ClusterDiff& diff, std::string_view corrected);

// Orthographic normalizations shared by the rules.  All operate on scalars.
std::string strip_tones(std::string_view text);
// Folds short vowels onto their long counterparts and the inherent-consonant
// spellings (ำ/อัม/อรรม, ไ/ใ/อัย) onto one form.  Expects tone-free input.
std::string fold_vowels(std::string_view text);
// Maps rarer consonant letters onto the common letter with the same sound.
std::string common_consonants(std::string_view text);

enum class PatternRule {
  Repetition,
  Tone,
  Vowel,
  Consonant,
  Simplifying,
  Abbreviation,
  Typo,
  Fallback,
};

inline constexpr std::size_t kNumPatternRules = 8;

const char* to_string(PatternRule rule);

struct RuleOutcome {
  PatternRule rule;
  bool fired;
  PatternLabel label;  // meaningful when fired
};

// Every rule evaluated independently, in priority order.
std::array<RuleOutcome, kNumPatternRules> trace_pattern(std::string_view misspelt, std::string_view corrected,
                                                        Intention intention);

// First firing rule wins.  Throws ValidationError if the forms are equal.
PatternLabel classify_pattern(std::string_view misspelt, std::string_view corrected, Intention intention);

}  // namespace thaimisp
