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

#include "thaimisp/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>

#include "thaimisp/error.hpp"
#include "thaimisp/thai_script.hpp"

namespace thaimisp {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<TermCount> top_terms(const std::map<std::string, std::size_t>& counts, std::size_t k) {
  std::vector<TermCount> all;
  for (const auto& [term, n] : counts) all.push_back({term, n});
  std::stable_sort(all.begin(), all.end(), [](const TermCount& a, const TermCount& b) { return a.count > b.count; });
  if (all.size() > k) all.resize(k);
  return all;
}

}  // namespace

std::vector<AnnotationRecord> read_annotations(std::istream& in, std::string_view name) {
  std::vector<AnnotationRecord> out;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    return ValidationError(std::string(name) + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw fail(std::string("invalid JSON: ") + e.what());
    }
    AnnotationRecord r;
    try {
      r.item_id = j.at("item_id").is_string() ? j.at("item_id").get<std::string>() : j.at("item_id").dump();
      r.annotator_id =
          j.at("annotator_id").is_string() ? j.at("annotator_id").get<std::string>() : j.at("annotator_id").dump();
      const auto label = parse_intention(j.at("label").get<std::string>());
      if (!label) throw fail("unknown label " + j.at("label").dump());
      r.label = *label;
      r.term = j.contains("term") ? j.at("term").get<std::string>() : r.item_id;
    } catch (const nlohmann::json::exception& e) {
      throw fail(std::string("malformed annotation: ") + e.what());
    }
    if (!seen.emplace(r.item_id, r.annotator_id).second)
      throw fail("item '" + r.item_id + "' annotated twice by '" + r.annotator_id + "'");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<AnnotationRecord> read_annotations(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open annotations '" + path.string() + "'");
  return read_annotations(in, path.string());
}

double cohen_kappa(std::span<const Intention> a, std::span<const Intention> b) {
  if (a.empty() || a.size() != b.size())
    throw ValidationError("cohen_kappa needs two non-empty label lists of equal length");
  const double n = static_cast<double>(a.size());
  std::size_t agree = 0;
  std::size_t a_int = 0;
  std::size_t b_int = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    agree += a[i] == b[i];
    a_int += a[i] == Intention::Intentional;
    b_int += b[i] == Intention::Intentional;
  }
  const double p_o = static_cast<double>(agree) / n;
  const double pa = static_cast<double>(a_int) / n;
  const double pb = static_cast<double>(b_int) / n;
  const double p_e = pa * pb + (1 - pa) * (1 - pb);
  if (p_e == 1.0) return agree == a.size() ? 1.0 : 0.0;
  return (p_o - p_e) / (1 - p_e);
}

KappaMatrix pairwise_kappa_matrix(std::span<const AnnotationRecord> records) {
  std::map<std::string, std::map<std::string, Intention>> by_annotator;
  for (const auto& r : records) {
    if (!by_annotator[r.annotator_id].emplace(r.item_id, r.label).second)
      throw ValidationError("item '" + r.item_id + "' annotated twice by '" + r.annotator_id + "'");
  }
  if (by_annotator.size() < 2) throw ValidationError("pairwise kappa needs at least two annotators");

  KappaMatrix m;
  for (const auto& [id, _] : by_annotator) m.annotators.push_back(id);
  const std::size_t n = m.annotators.size();
  m.values.assign(n * n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    m.values[i * n + i] = 1.0;
    const auto& left = by_annotator[m.annotators[i]];
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& right = by_annotator[m.annotators[j]];
      std::vector<Intention> a, b;
      for (const auto& [item, label] : left) {
        if (auto it = right.find(item); it != right.end()) {
          a.push_back(label);
          b.push_back(it->second);
        }
      }
      if (a.empty()) continue;
      const double k = cohen_kappa(a, b);
      m.values[i * n + j] = k;
      m.values[j * n + i] = k;
    }
  }
  return m;
}

std::optional<double> label_entropy(const TermObservations& obs, std::size_t min_count) {
  if (min_count < 1) throw ValidationError("min_count must be at least 1");
  if (obs.labels.size() < min_count || obs.labels.empty()) return std::nullopt;
  const auto k = std::count(obs.labels.begin(), obs.labels.end(), Intention::Intentional);
  const double p = static_cast<double>(k) / static_cast<double>(obs.labels.size());
  double h = 0;
  for (double q : {p, 1 - p})
    if (q > 0) h -= q * std::log2(q);
  return h;
}

std::vector<TermObservations> group_by_term(std::span<const AnnotationRecord> records) {
  std::map<std::string, std::vector<Intention>> groups;
  for (const auto& r : records) groups[r.term].push_back(r.label);
  std::vector<TermObservations> out;
  for (auto& [term, labels] : groups) out.push_back({term, std::move(labels)});
  return out;
}

CorpusSummary corpus_summary(std::istream& in, std::size_t top_k, std::string_view name) {
  CorpusSummary s;
  std::map<std::string, std::size_t> intentional, unintentional;
  std::set<std::string> types;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    return ValidationError(std::string(name) + ":" + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("text") || !j["text"].is_string()) throw fail("missing string field \"text\"");
    const std::string text = j["text"].get<std::string>();
    ++s.sentences;

    std::size_t found = 0;
    if (j.contains("misspellings")) {
      const auto& spans = j["misspellings"];
      if (!spans.is_array()) throw fail("\"misspellings\" must be an array");
      for (const auto& span : spans) {
        if (!span.is_object() || !span.contains("start") || !span.contains("end") || !span.contains("intention") ||
            !span["start"].is_number_unsigned() || !span["end"].is_number_unsigned() ||
            !span["intention"].is_string())
          throw fail("annotation span needs unsigned \"start\", \"end\" and string \"intention\"");
        const auto start = span["start"].get<std::size_t>();
        const auto end = span["end"].get<std::size_t>();
        if (start >= end || end > text.size()) throw fail("annotation span [" + std::to_string(start) + ", " +
                                                          std::to_string(end) + ") is out of range");
        if (!is_scalar_boundary(text, start) || !is_scalar_boundary(text, end))
          throw fail("annotation span does not fall on character boundaries");
        const auto intention = parse_intention(span["intention"].get<std::string>());
        if (!intention) throw fail("unknown intention " + span["intention"].dump());

        const std::string term = text.substr(start, end - start);
        ++(*intention == Intention::Intentional ? intentional : unintentional)[term];
        types.insert(term);
        ++found;
      }
    }
    s.occurrences += found;
    if (found == 0) continue;
    ++s.sentences_with_misspelling;
    std::string label = "unlabeled";
    if (j.contains("label") && j["label"].is_string()) {
      if (!parse_sentiment(j["label"].get<std::string>())) throw fail("unknown label " + j["label"].dump());
      label = j["label"].get<std::string>();
    }
    ++s.class_counts[label];
  }

  s.unique_types = types.size();
  s.intentional_types = intentional.size();
  s.unintentional_types = unintentional.size();
  if (s.sentences > 0)
    s.misspelling_sentence_percent =
        100.0 * static_cast<double>(s.sentences_with_misspelling) / static_cast<double>(s.sentences);
  for (const auto& [label, n] : s.class_counts)
    s.class_percent[label] = 100.0 * static_cast<double>(n) / static_cast<double>(s.sentences_with_misspelling);
  s.top_intentional = top_terms(intentional, top_k);
  s.top_unintentional = top_terms(unintentional, top_k);
  return s;
}

nlohmann::json to_json(const CorpusSummary& s) {
  auto terms = [](const std::vector<TermCount>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : v) arr.push_back({{"term", t.term}, {"count", t.count}});
    return arr;
  };
  return {
      {"sentences", s.sentences},
      {"sentences_with_misspelling", s.sentences_with_misspelling},
      {"misspelling_sentence_percent", s.misspelling_sentence_percent},
      {"occurrences", s.occurrences},
      {"unique_types", s.unique_types},
      {"intentional_types", s.intentional_types},
      {"unintentional_types", s.unintentional_types},
      {"class_counts", s.class_counts},
      {"class_percent", s.class_percent},
      {"top_intentional", terms(s.top_intentional)},
      {"top_unintentional", terms(s.top_unintentional)},
  };
}

nlohmann::json to_json(const KappaMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  const std::size_t n = m.annotators.size();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = m.at(i, j);
      row.push_back(v ? nlohmann::json(*v) : nlohmann::json(nullptr));
    }
    rows.push_back(std::move(row));
  }
  return {{"annotators", m.annotators}, {"kappa", rows}};
}

void write_kappa_csv(const KappaMatrix& m, std::ostream& out) {
  out << "annotator";
  for (const auto& a : m.annotators) out << ',' << csv_field(a);
  out << '\n';
  for (std::size_t i = 0; i < m.annotators.size(); ++i) {
    out << csv_field(m.annotators[i]);
    for (std::size_t j = 0; j < m.annotators.size(); ++j) {
      out << ',';
      if (auto v = m.at(i, j)) out << format_double(*v);
    }
    out << '\n';
  }
}

void write_entropy_csv(std::span<const TermObservations> terms, std::size_t min_count, std::ostream& out) {
  out << "term,observations,entropy\n";
  for (const auto& t : terms) {
    const auto h = label_entropy(t, min_count);
    if (!h) continue;
    out << csv_field(t.term) << ',' << t.labels.size() << ',' << format_double(*h) << '\n';
  }
}

}  // namespace thaimisp
