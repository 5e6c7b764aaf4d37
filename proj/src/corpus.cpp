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

#include "thaimisp/corpus.hpp"

#include <fstream>
#include <istream>

#include "thaimisp/error.hpp"

namespace thaimisp {

CorpusRecord parse_corpus_line(std::string_view line, std::size_t line_no, const Segmenter& segmenter,
                               std::string_view name) {
  auto fail = [&](const std::string& what) {
    return ValidationError(std::string(name) + ":" + std::to_string(line_no) + ": " + what);
  };

  CorpusRecord record;
  record.line = line_no;
  try {
    record.object = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw fail(std::string("invalid JSON: ") + e.what());
  }
  const auto& obj = record.object;
  if (!obj.is_object()) throw fail("expected a JSON object");

  if (auto it = obj.find("label"); it != obj.end() && !it->is_null()) {
    if (!it->is_string()) throw fail("\"label\" must be a string");
    record.sentence.label = parse_sentiment(it->get<std::string>());
    if (!record.sentence.label) throw fail("unknown label " + it->dump());
  }

  if (auto it = obj.find("tokens"); it != obj.end() && !it->is_null()) {
    if (!it->is_array()) throw fail("\"tokens\" must be an array of strings");
    for (const auto& t : *it) {
      if (!t.is_string() || t.get<std::string>().empty()) throw fail("\"tokens\" must hold non-empty strings");
      record.sentence.tokens.push_back(t.get<std::string>());
    }
    return record;
  }

  auto text = obj.find("text");
  if (text == obj.end() || !text->is_string()) throw fail("missing string field \"text\"");
  auto label = record.sentence.label;
  record.sentence = segmenter.segment(text->get<std::string>());
  record.sentence.label = label;
  return record;
}

std::vector<CorpusRecord> read_corpus(std::istream& in, const Segmenter& segmenter, std::string_view name) {
  std::vector<CorpusRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_corpus_line(line, line_no, segmenter, name));
  }
  return out;
}

std::vector<CorpusRecord> read_corpus(const std::filesystem::path& path, const Segmenter& segmenter) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus '" + path.string() + "'");
  return read_corpus(in, segmenter, path.string());
}

std::vector<TokenizedSentence> sentences_of(const std::vector<CorpusRecord>& records) {
  std::vector<TokenizedSentence> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.sentence);
  return out;
}

}  // namespace thaimisp
