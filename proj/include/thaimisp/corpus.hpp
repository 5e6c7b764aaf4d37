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

// Corpus JSONL: one object per line with "text", optional "label" and
// optional pre-tokenized "tokens".

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "thaimisp/segmenter.hpp"

namespace thaimisp {

struct CorpusRecord {
  std::size_t line = 0;
  nlohmann::json object;
  TokenizedSentence sentence;
};

// Segments records that carry no "tokens" array.  Throws ValidationError
// with the line number on malformed input.
std::vector<CorpusRecord> read_corpus(std::istream& in, const Segmenter& segmenter,
                                      std::string_view name = "<corpus>");
std::vector<CorpusRecord> read_corpus(const std::filesystem::path& path, const Segmenter& segmenter);

// Parses one line; `line_no` only feeds error messages.
CorpusRecord parse_corpus_line(std::string_view line, std::size_t line_no, const Segmenter& segmenter,
                               std::string_view name = "<corpus>");

std::vector<TokenizedSentence> sentences_of(const std::vector<CorpusRecord>& records);

}  // namespace thaimisp
