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

#include "thaimisp/mst.hpp"

#include <numeric>

#include "thaimisp/error.hpp"

namespace thaimisp {

std::size_t AugmentedSentence::total_tags() const {
  return std::accumulate(tag_counts.begin(), tag_counts.end(), std::size_t{0});
}

AugmentedSentence annotate(const TokenizedSentence& sentence, const Lexicon& lex) {
  AugmentedSentence out;
  out.tokens.reserve(sentence.size() * 2);
  for (const auto& token : sentence.tokens) {
    if (tag_from_surface(token))
      throw ValidationError("token '" + token + "' is a reserved tag; input looks already annotated");
    out.tokens.push_back(token);
    const MispTag tag = detect(token, lex);
    if (tag == MispTag::Null) continue;
    out.tokens.emplace_back(surface(tag));
    ++out.tag_counts[static_cast<std::size_t>(tag)];
  }
  return out;
}

std::vector<std::string> strip_tags(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens)
    if (!tag_from_surface(t)) out.push_back(t);
  return out;
}

}  // namespace thaimisp
