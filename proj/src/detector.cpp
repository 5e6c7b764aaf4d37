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

#include "thaimisp/detector.hpp"

#include <vector>

#include "thaimisp/error.hpp"
#include "thaimisp/thai_script.hpp"

namespace thaimisp {

std::string_view surface(MispTag tag) {
  switch (tag) {
    case MispTag::Lol: return "<lol>";
    case MispTag::Rep: return "<rep>";
    case MispTag::Int: return "<int>";
    case MispTag::Msp: return "<msp>";
    case MispTag::Null: return {};
  }
  return {};
}

const char* to_string(MispTag tag) {
  switch (tag) {
    case MispTag::Lol: return "LOL";
    case MispTag::Rep: return "REP";
    case MispTag::Int: return "INT";
    case MispTag::Msp: return "MSP";
    case MispTag::Null: return "NULL";
  }
  return "NULL";
}

std::optional<MispTag> tag_from_surface(std::string_view token) {
  for (auto tag : {MispTag::Lol, MispTag::Rep, MispTag::Int, MispTag::Msp})
    if (token == surface(tag)) return tag;
  return std::nullopt;
}

RunAnalysis collapse_runs(std::string_view token) {
  if (token.empty()) throw ValidationError("collapse_runs: empty token");
  const auto clusters = cluster_texts(token);

  RunAnalysis out;
  std::size_t i = 0;
  while (i < clusters.size()) {
    std::size_t j = i + 1;
    while (j < clusters.size() && clusters[j] == clusters[i]) ++j;
    out.collapsed += clusters[i];
    if (j - i > out.max_run_len || out.max_run_char.empty()) {
      out.max_run_len = j - i;
      out.max_run_char = clusters[i];
    }
    i = j;
  }
  return out;
}

MispTag repetition_tag(std::string_view token) {
  const auto clusters = cluster_texts(token);
  bool laugh = false;
  bool rep = false;
  std::size_t i = 0;
  while (i < clusters.size()) {
    std::size_t j = i + 1;
    while (j < clusters.size() && clusters[j] == clusters[i]) ++j;
    const std::size_t run = j - i;
    if (clusters[i] == "5") {
      laugh = laugh || run >= kLaughRun;
    } else if (clusters[i] == "ๆ") {
      rep = rep || run >= kRepetitionMarkRun;
    } else {
      rep = rep || run >= kClusterRun;
    }
    i = j;
  }
  if (laugh) return MispTag::Lol;
  if (rep) return MispTag::Rep;
  return MispTag::Null;
}

MispTag detect(std::string_view token, const Lexicon& lex) {
  if (const MispTag run = repetition_tag(token); run != MispTag::Null) return run;
  if (const auto* entry = lex.find(token))
    return entry->intention == Intention::Intentional ? MispTag::Int : MispTag::Msp;
  return MispTag::Null;
}

std::string correct(std::string_view token, const Lexicon& lex) {
  if (const auto* entry = lex.find(token)) {
    if (lex.is_key(entry->corrected)) return std::string(token);
    return entry->corrected;
  }
  if (token.empty() || lex.in_wordlist(token)) return std::string(token);
  if (repetition_tag(token) == MispTag::Null) return std::string(token);

  const std::string collapsed = collapse_runs(token).collapsed;
  if (lex.in_wordlist(collapsed) || lex.is_key(collapsed)) return correct(collapsed, lex);
  return std::string(token);
}

}  // namespace thaimisp
