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

// Annotation statistics: pairwise Cohen's kappa, per-term label entropy
// and corpus summaries.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "thaimisp/lexicon.hpp"
#include "thaimisp/segmenter.hpp"

namespace thaimisp {

struct AnnotationRecord {
  std::string item_id;
  std::string annotator_id;
  Intention label = Intention::Intentional;
  // Misspelt term the item refers to; entropy groups by it, falling back
  // to item_id when absent.
  std::string term;
};

// {item_id, annotator_id, label[, term]} per line.  Duplicate
// (item_id, annotator_id) pairs are rejected.
std::vector<AnnotationRecord> read_annotations(std::istream& in, std::string_view name = "<annotations>");
std::vector<AnnotationRecord> read_annotations(const std::filesystem::path& path);

// (p_o - p_e) / (1 - p_e) over paired labels.  When p_e == 1 the result is
// 1.0 if the lists agree everywhere and 0.0 otherwise.  Throws
// ValidationError on empty or unequal-length input.
double cohen_kappa(std::span<const Intention> a, std::span<const Intention> b);

struct KappaMatrix {
  std::vector<std::string> annotators;  // sorted
  // Row-major; empty where a pair shares no items.
  std::vector<std::optional<double>> values;

  std::optional<double> at(std::size_t i, std::size_t j) const { return values[i * annotators.size() + j]; }
};

// Throws ValidationError with fewer than two annotators.
KappaMatrix pairwise_kappa_matrix(std::span<const AnnotationRecord> records);

struct TermObservations {
  std::string term;
  std::vector<Intention> labels;
};

inline constexpr std::size_t kDefaultMinObservations = 6;

// Binary entropy in bits; empty when fewer than min_count observations.
std::optional<double> label_entropy(const TermObservations& obs, std::size_t min_count = kDefaultMinObservations);

// Observations grouped by term, in term order.
std::vector<TermObservations> group_by_term(std::span<const AnnotationRecord> records);

struct TermCount {
  std::string term;
  std::size_t count = 0;
};

struct CorpusSummary {
  std::size_t sentences = 0;
  std::size_t sentences_with_misspelling = 0;
  double misspelling_sentence_percent = 0;
  std::size_t occurrences = 0;
  std::size_t unique_types = 0;
  std::size_t intentional_types = 0;
  std::size_t unintentional_types = 0;
  // Label distribution over sentences with at least one misspelling.
  std::map<std::string, std::size_t> class_counts;
  std::map<std::string, double> class_percent;
  std::vector<TermCount> top_intentional;
  std::vector<TermCount> top_unintentional;
};

// Annotated corpus JSONL: {"text", "label"?, "misspellings": [{"start",
// "end", "intention"}]} with byte offsets into text.  Throws
// ValidationError naming the line of a malformed span.
CorpusSummary corpus_summary(std::istream& in, std::size_t top_k = 5, std::string_view name = "<corpus>");

nlohmann::json to_json(const CorpusSummary& summary);
nlohmann::json to_json(const KappaMatrix& matrix);
void write_kappa_csv(const KappaMatrix& matrix, std::ostream& out);
void write_entropy_csv(std::span<const TermObservations> terms, std::size_t min_count, std::ostream& out);

}  // namespace thaimisp
