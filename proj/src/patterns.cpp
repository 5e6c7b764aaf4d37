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

#include "thaimisp/patterns.hpp"

#include <algorithm>
#include <limits>

#include "thaimisp/detector.hpp"
#include "thaimisp/error.hpp"
#include "thaimisp/thai_script.hpp"

namespace thaimisp {

namespace {

constexpr char32_t kSaraA = U'ะ';
constexpr char32_t kMaiHanAkat = U'ั';
constexpr char32_t kSaraAa = U'า';
constexpr char32_t kSaraAm = U'ำ';
constexpr char32_t kMaitaikhu = U'็';
constexpr char32_t kSaraE = U'เ';
constexpr char32_t kSaraAe = U'แ';
constexpr char32_t kSaraO = U'โ';
constexpr char32_t kSaraAiMaimalai = U'ไ';
constexpr char32_t kSaraAiMaimuan = U'ใ';
constexpr char32_t kOAng = U'อ';
constexpr char32_t kYoYak = U'ย';
constexpr char32_t kMoMa = U'ม';
constexpr char32_t kRoRua = U'ร';

bool consonant(char32_t ch) { return classify_char(ch) == CharKind::Consonant; }

std::vector<char32_t> marks_of(std::string_view cluster) {
  auto s = to_scalars(cluster);
  if (!s.empty()) s.erase(s.begin());
  return s;
}

bool is_subsequence(const std::vector<std::string>& needle, const std::vector<std::string>& haystack) {
  std::size_t k = 0;
  for (const auto& h : haystack)
    if (k < needle.size() && needle[k] == h) ++k;
  return k == needle.size();
}

std::vector<char32_t> tones_of(std::string_view text) {
  std::vector<char32_t> out;
  for (char32_t ch : to_scalars(text))
    if (is_tone_mark(ch)) out.push_back(ch);
  return out;
}

std::string strip_vowels(std::string_view text) {
  std::string out;
  for (char32_t ch : to_scalars(text)) {
    switch (classify_char(ch)) {
      case CharKind::VowelLeading:
      case CharKind::VowelFollowing:
      case CharKind::VowelAbove:
      case CharKind::VowelBelow:
        break;
      default:
        append_utf8(out, ch);
    }
  }
  return out;
}

// A substitution that swaps only the base consonant.
bool consonant_substitution(const std::string& a, const std::string& b) {
  if (a.empty() || b.empty()) return false;
  const auto ma = marks_of(a);
  return consonant(to_scalars(a).front()) && consonant(to_scalars(b).front()) && ma == marks_of(b);
}

// Clusters a consonant edit may add or drop: a bare consonant, a silenced
// one (thanthakhat), one carrying maitaikhu, or the inherent short a (ะ).
bool consonant_indel(const std::string& cluster) {
  const auto s = to_scalars(cluster);
  if (s.empty()) return false;
  if (s.size() == 1 && s[0] == kSaraA) return true;
  if (!consonant(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char32_t m) { return m == kThanthakhat || m == kMaitaikhu; });
}

// True when some alignment explains every edit with consonant-level ops.
bool consonant_alignment(std::string_view misspelt, std::string_view corrected) {
  const auto m = cluster_texts(misspelt);
  const auto c = cluster_texts(corrected);
  constexpr std::size_t kBlocked = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(m.size() + 1, std::vector<std::size_t>(c.size() + 1, kBlocked));
  d[0][0] = 0;
  for (std::size_t i = 0; i <= m.size(); ++i) {
    for (std::size_t j = 0; j <= c.size(); ++j) {
      auto& cell = d[i][j];
      if (i > 0 && j > 0) {
        if (m[i - 1] == c[j - 1]) {
          cell = std::min(cell, d[i - 1][j - 1]);
        } else if (consonant_substitution(c[j - 1], m[i - 1])) {
          cell = std::min(cell, d[i - 1][j - 1] + 1);
        }
      }
      if (i > 0 && consonant_indel(m[i - 1])) cell = std::min(cell, d[i - 1][j] + 1);
      if (j > 0 && consonant_indel(c[j - 1])) cell = std::min(cell, d[i][j - 1] + 1);
    }
  }
  return d[m.size()][c.size()] < kBlocked;
}

std::size_t scalar_count(std::string_view text) { return decode_utf8(text).size(); }

bool repetition_rule(std::string_view misspelt, std::string_view corrected) {
  if (collapse_runs(misspelt).collapsed == corrected) return true;
  const auto diff = cluster_diff(misspelt, corrected);
  if (diff.empty()) return false;
  const auto m = cluster_texts(misspelt);
  for (const auto& op : diff.ops) {
    if (op.kind != EditOp::Kind::Insert) return false;
    if (op.to == "ๆ") continue;
    const std::size_t j = op.misspelt_pos;
    const bool left = j > 0 && m[j - 1] == op.to;
    const bool right = j + 1 < m.size() && m[j + 1] == op.to;
    if (!left && !right) return false;
  }
  return true;
}

bool tone_rule(std::string_view misspelt, std::string_view corrected) {
  if (tones_of(misspelt) == tones_of(corrected)) return false;
  return fold_vowels(strip_tones(misspelt)) == fold_vowels(strip_tones(corrected));
}

bool vowel_rule(std::string_view misspelt, std::string_view corrected) {
  if (tones_of(misspelt) != tones_of(corrected)) return false;
  if (fold_vowels(strip_tones(misspelt)) == fold_vowels(strip_tones(corrected))) return true;
  return strip_vowels(misspelt) == strip_vowels(corrected);
}

std::vector<std::string> simplified_clusters(std::string_view text) {
  return cluster_texts(common_consonants(fold_vowels(strip_tones(text))));
}

bool simplifying_rule(std::string_view misspelt, std::string_view corrected) {
  if (scalar_count(corrected) <= scalar_count(misspelt)) return false;
  return is_subsequence(simplified_clusters(misspelt), simplified_clusters(corrected));
}

bool consonant_rule(std::string_view misspelt, std::string_view corrected, Intention intention) {
  if (tones_of(misspelt) != tones_of(corrected)) return false;
  // An intentional reduction to commoner letters is a simplification.
  if (intention == Intention::Intentional && simplifying_rule(misspelt, corrected)) return false;
  return consonant_alignment(strip_tones(misspelt), strip_tones(corrected));
}

bool abbreviation_rule(std::string_view misspelt, std::string_view corrected) {
  const auto m = grapheme_clusters(misspelt);
  const auto c = grapheme_clusters(corrected);
  if (m.empty() || 2 * m.size() > c.size()) return false;
  std::size_t k = 0;
  for (const auto& cluster : c)
    if (k < m.size() && m[k].base() == cluster.base()) ++k;
  return k == m.size();
}

}  // namespace

ClusterDiff cluster_diff(std::string_view misspelt, std::string_view corrected) {
  const auto m = cluster_texts(misspelt);
  const auto c = cluster_texts(corrected);
  const std::size_t rows = m.size() + 1;
  const std::size_t cols = c.size() + 1;
  std::vector<std::size_t> d(rows * cols);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return d[i * cols + j]; };
  for (std::size_t i = 0; i < rows; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j < cols; ++j) at(0, j) = j;
  for (std::size_t i = 1; i < rows; ++i) {
    for (std::size_t j = 1; j < cols; ++j) {
      const std::size_t diag = at(i - 1, j - 1) + (m[i - 1] == c[j - 1] ? 0 : 1);
      at(i, j) = std::min({diag, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  ClusterDiff diff;
  std::size_t i = m.size();
  std::size_t j = c.size();
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) + (m[i - 1] == c[j - 1] ? 0 : 1)) {
      if (m[i - 1] != c[j - 1])
        diff.ops.push_back({EditOp::Kind::Substitute, j - 1, i - 1, c[j - 1], m[i - 1]});
      --i, --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      diff.ops.push_back({EditOp::Kind::Insert, j, i - 1, {}, m[i - 1]});
      --i;
    } else {
      diff.ops.push_back({EditOp::Kind::Delete, j - 1, i, c[j - 1], {}});
      --j;
    }
  }
  std::reverse(diff.ops.begin(), diff.ops.end());
  for (const auto& op : diff.ops) {
    switch (op.kind) {
      case EditOp::Kind::Substitute: diff.substitutions.emplace_back(op.from, op.to); break;
      case EditOp::Kind::Insert: diff.insertions.push_back(op.to); break;
      case EditOp::Kind::Delete: diff.deletions.push_back(op.from); break;
    }
  }
  return diff;
}

std::string apply_diff(const ClusterDiff& diff, std::string_view corrected) {
  const auto c = cluster_texts(corrected);
  std::string out;
  std::size_t cursor = 0;
  for (const auto& op : diff.ops) {
    while (cursor < op.corrected_pos && cursor < c.size()) out += c[cursor++];
    switch (op.kind) {
      case EditOp::Kind::Insert: out += op.to; break;
      case EditOp::Kind::Substitute: out += op.to; cursor = op.corrected_pos + 1; break;
      case EditOp::Kind::Delete: cursor = op.corrected_pos + 1; break;
    }
  }
  while (cursor < c.size()) out += c[cursor++];
  return out;
}

std::string strip_tones(std::string_view text) {
  std::string out;
  for (char32_t ch : to_scalars(text))
    if (!is_tone_mark(ch)) append_utf8(out, ch);
  return out;
}

std::string fold_vowels(std::string_view text) {
  const auto s = to_scalars(text);
  auto at = [](const std::vector<char32_t>& v, std::size_t i) -> char32_t { return i < v.size() ? v[i] : 0; };

  // Inherent-consonant spellings: ไX/ใX -> Xัย, Xำ -> Xัม, Xรรม -> Xัม.
  std::vector<char32_t> a;
  for (std::size_t i = 0; i < s.size();) {
    if ((s[i] == kSaraAiMaimalai || s[i] == kSaraAiMaimuan) && consonant(at(s, i + 1))) {
      a.insert(a.end(), {s[i + 1], kMaiHanAkat, kYoYak});
      i += 2;
    } else if (s[i] == kSaraAm) {
      a.insert(a.end(), {kMaiHanAkat, kMoMa});
      ++i;
    } else if (s[i] == kRoRua && at(s, i + 1) == kRoRua && at(s, i + 2) == kMoMa && !a.empty() && consonant(a.back())) {
      a.insert(a.end(), {kMaiHanAkat, kMoMa});
      i += 3;
    } else {
      a.push_back(s[i++]);
    }
  }

  // Vowel length: map each short vowel onto its long partner.
  std::vector<char32_t> b;
  for (std::size_t i = 0; i < a.size();) {
    const char32_t ch = a[i];
    const char32_t x = at(a, i + 1);
    if (ch == kSaraE && consonant(x) && at(a, i + 2) == kSaraAa && at(a, i + 3) == kSaraA) {
      b.insert(b.end(), {x, kOAng});  // เXาะ -> Xอ
      i += 4;
    } else if (ch == kSaraE && consonant(x) && at(a, i + 2) == kOAng && at(a, i + 3) == kSaraA) {
      b.insert(b.end(), {kSaraE, x, kOAng});  // เXอะ -> เXอ
      i += 4;
    } else if ((ch == kSaraE || ch == kSaraAe || ch == kSaraO) && consonant(x) && at(a, i + 2) == kSaraA) {
      b.insert(b.end(), {ch, x});  // เXะ, แXะ, โXะ
      i += 3;
    } else if ((ch == kSaraE || ch == kSaraAe) && consonant(x) && at(a, i + 2) == kMaitaikhu) {
      b.insert(b.end(), {ch, x});  // closed เX็, แX็
      i += 3;
    } else {
      switch (ch) {
        case kMaitaikhu: break;
        case kMaiHanAkat:
        case kSaraA: b.push_back(kSaraAa); break;
        case U'ิ': b.push_back(U'ี'); break;
        case U'ึ': b.push_back(U'ื'); break;
        case U'ุ': b.push_back(U'ู'); break;
        default: b.push_back(ch);
      }
      ++i;
    }
  }
  return to_utf8(b);
}

std::string common_consonants(std::string_view text) {
  std::string out;
  for (char32_t ch : to_scalars(text)) {
    switch (ch) {
      case U'ฃ': ch = U'ข'; break;
      case U'ฅ':
      case U'ฆ': ch = U'ค'; break;
      case U'ฌ': ch = U'ช'; break;
      case U'ญ': ch = U'ย'; break;
      case U'ฎ': ch = U'ด'; break;
      case U'ฏ': ch = U'ต'; break;
      case U'ฐ':
      case U'ฑ':
      case U'ฒ':
      case U'ธ': ch = U'ท'; break;
      case U'ณ': ch = U'น'; break;
      case U'ภ': ch = U'พ'; break;
      case U'ศ':
      case U'ษ': ch = U'ส'; break;
      case U'ฬ': ch = U'ล'; break;
      default: break;
    }
    append_utf8(out, ch);
  }
  return out;
}

const char* to_string(PatternRule rule) {
  switch (rule) {
    case PatternRule::Repetition: return "repetition";
    case PatternRule::Tone: return "tone";
    case PatternRule::Vowel: return "vowel";
    case PatternRule::Consonant: return "consonant";
    case PatternRule::Simplifying: return "simplifying";
    case PatternRule::Abbreviation: return "abbreviation";
    case PatternRule::Typo: return "typo";
    case PatternRule::Fallback: return "fallback";
  }
  return "fallback";
}

std::array<RuleOutcome, kNumPatternRules> trace_pattern(std::string_view misspelt, std::string_view corrected,
                                                        Intention intention) {
  if (misspelt == corrected) throw ValidationError("'" + std::string(misspelt) + "' is not a misspelling of itself");
  if (misspelt.empty() || corrected.empty()) throw ValidationError("pattern classification needs non-empty forms");

  const bool intentional = intention == Intention::Intentional;
  return {{
      {PatternRule::Repetition, repetition_rule(misspelt, corrected), PatternLabel::CharacterRepetition},
      {PatternRule::Tone, tone_rule(misspelt, corrected),
       intentional ? PatternLabel::ToneModification : PatternLabel::ToneConfusion},
      {PatternRule::Vowel, vowel_rule(misspelt, corrected), PatternLabel::VowelSubstitution},
      {PatternRule::Consonant, consonant_rule(misspelt, corrected, intention),
       intentional ? PatternLabel::ConsonantDeviation : PatternLabel::ConsonantConfusion},
      {PatternRule::Simplifying, simplifying_rule(misspelt, corrected), PatternLabel::Simplifying},
      {PatternRule::Abbreviation, abbreviation_rule(misspelt, corrected), PatternLabel::AdHocAbbreviation},
      {PatternRule::Typo, !intentional, PatternLabel::Typo},
      {PatternRule::Fallback, true, PatternLabel::Others},
  }};
}

PatternLabel classify_pattern(std::string_view misspelt, std::string_view corrected, Intention intention) {
  for (const auto& outcome : trace_pattern(misspelt, corrected, intention))
    if (outcome.fired) return outcome.label;
  return PatternLabel::Others;
}

}  // namespace thaimisp
