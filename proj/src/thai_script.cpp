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

#include "thaimisp/thai_script.hpp"

namespace thaimisp {

const char* to_string(CharKind kind) {
  switch (kind) {
    case CharKind::Consonant: return "Consonant";
    case CharKind::VowelLeading: return "VowelLeading";
    case CharKind::VowelFollowing: return "VowelFollowing";
    case CharKind::VowelAbove: return "VowelAbove";
    case CharKind::VowelBelow: return "VowelBelow";
    case CharKind::ToneMark: return "ToneMark";
    case CharKind::ThanthakhatMark: return "ThanthakhatMark";
    case CharKind::RepetitionMark: return "RepetitionMark";
    case CharKind::Digit: return "Digit";
    case CharKind::Other: return "Other";
  }
  return "Other";
}

CharKind classify_char(char32_t ch) {
  if (ch >= U'0' && ch <= U'9') return CharKind::Digit;
  if (ch < 0x0E00 || ch > 0x0E7F) return CharKind::Other;

  if (ch >= 0x0E01 && ch <= 0x0E2E) return CharKind::Consonant;
  if (ch >= 0x0E40 && ch <= 0x0E44) return CharKind::VowelLeading;
  if (ch >= 0x0E48 && ch <= 0x0E4B) return CharKind::ToneMark;
  if (ch >= 0x0E50 && ch <= 0x0E59) return CharKind::Digit;
  switch (ch) {
    case 0x0E30:  // ะ
    case 0x0E32:  // า
    case 0x0E33:  // ำ
    case 0x0E45:  // ๅ
      return CharKind::VowelFollowing;
    case 0x0E31:  // ั
    case 0x0E34:
    case 0x0E35:
    case 0x0E36:
    case 0x0E37:
    case 0x0E47:  // ็ maitaikhu
    case 0x0E4D:  // ํ nikhahit
    case 0x0E4E:  // ๎ yamakkan
      return CharKind::VowelAbove;
    case 0x0E38:
    case 0x0E39:
    case 0x0E3A:  // ฺ phinthu
      return CharKind::VowelBelow;
    case 0x0E46:
      return CharKind::RepetitionMark;
    case 0x0E4C:
      return CharKind::ThanthakhatMark;
    default:
      return CharKind::Other;
  }
}

bool is_combining(CharKind kind) {
  return kind == CharKind::VowelAbove || kind == CharKind::VowelBelow ||
         kind == CharKind::ToneMark || kind == CharKind::ThanthakhatMark;
}

bool is_tone_mark(char32_t ch) { return ch >= 0x0E48 && ch <= 0x0E4B; }

bool is_whitespace(char32_t ch) {
  switch (ch) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\v':
    case U'\f':
    case U'\r':
    case 0x00A0:
    case 0x1680:
    case 0x200B:  // zero width space, common as a Thai word separator
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
    case 0xFEFF:
      return true;
    default:
      return ch >= 0x2000 && ch <= 0x200A;
  }
}

namespace {

// Returns the decoded scalar and its length, or length 0 when malformed.
std::pair<char32_t, std::size_t> decode_one(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};

  std::size_t len;
  char32_t cp;
  char32_t min;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return {0, 0};
  }
  if (i + len > s.size()) return {0, 0};
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return {0, 0};
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return {0, 0};
  return {cp, len};
}

}  // namespace

std::vector<Scalar> decode_utf8(std::string_view text) {
  std::vector<Scalar> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    auto [cp, len] = decode_one(text, i);
    if (len == 0) {
      out.push_back({kReplacementChar, i, 1});
      ++i;
    } else {
      out.push_back({cp, i, len});
      i += len;
    }
  }
  return out;
}

std::vector<char32_t> to_scalars(std::string_view text) {
  std::vector<char32_t> out;
  for (const auto& s : decode_utf8(text)) out.push_back(s.value);
  return out;
}

void append_utf8(std::string& out, char32_t ch) {
  if (ch < 0x80) {
    out.push_back(static_cast<char>(ch));
  } else if (ch < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (ch >> 6)));
    out.push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  } else if (ch < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (ch >> 12)));
    out.push_back(static_cast<char>(0x80 | ((ch >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (ch >> 18)));
    out.push_back(static_cast<char>(0x80 | ((ch >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((ch >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  }
}

std::string to_utf8(const std::vector<char32_t>& scalars) {
  std::string out;
  for (char32_t ch : scalars) append_utf8(out, ch);
  return out;
}

bool is_scalar_boundary(std::string_view text, std::size_t offset) {
  if (offset == 0 || offset == text.size()) return true;
  if (offset > text.size()) return false;
  for (const auto& s : decode_utf8(text)) {
    if (s.offset == offset) return true;
    if (s.offset > offset) return false;
  }
  return false;
}

char32_t Cluster::base() const {
  if (text.empty()) return 0;
  auto [cp, len] = decode_one(text, 0);
  return len == 0 ? kReplacementChar : cp;
}

std::vector<Cluster> grapheme_clusters(std::string_view text) {
  std::vector<Cluster> out;
  bool has_tone = false;
  bool after_space = true;
  for (const auto& s : decode_utf8(text)) {
    const CharKind kind = classify_char(s.value);
    const bool tone = kind == CharKind::ToneMark;
    // Marks never attach to whitespace, and a cluster holds one tone mark.
    const bool attach = is_combining(kind) && !after_space && !(tone && has_tone);
    if (attach) {
      out.back().text.append(text.substr(s.offset, s.length));
      has_tone = has_tone || tone;
    } else {
      out.push_back({std::string(text.substr(s.offset, s.length))});
      has_tone = tone;
      after_space = is_whitespace(s.value);
    }
  }
  return out;
}

std::vector<std::string> cluster_texts(std::string_view text) {
  std::vector<std::string> out;
  for (auto& c : grapheme_clusters(text)) out.push_back(std::move(c.text));
  return out;
}

std::string join_clusters(const std::vector<Cluster>& clusters) {
  std::string out;
  for (const auto& c : clusters) out += c.text;
  return out;
}

}  // namespace thaimisp
