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

// Misspelling semantic tokens: interleave each misspelt word with its tag.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "thaimisp/detector.hpp"
#include "thaimisp/segmenter.hpp"

namespace thaimisp {

struct AugmentedSentence {
  std::vector<std::string> tokens;
  // Indexed by MispTag (Lol, Rep, Int, Msp).
  std::array<std::size_t, kNumTags> tag_counts{};

  std::size_t total_tags() const;
};

// Emits each token followed by its tag surface form (Null emits nothing).
// Throws ValidationError if an input token is itself a tag surface form.
AugmentedSentence annotate(const TokenizedSentence& sentence, const Lexicon& lex);

// Drops the tag tokens, recovering the original token sequence.
std::vector<std::string> strip_tags(const std::vector<std::string>& tokens);

}  // namespace thaimisp
