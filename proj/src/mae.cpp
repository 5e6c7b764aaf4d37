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

#include "thaimisp/mae.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>

#include "thaimisp/detector.hpp"
#include "thaimisp/error.hpp"

namespace thaimisp {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

EmbeddingStore::EmbeddingStore(std::vector<std::string> words, Table vectors)
    : words_(std::move(words)), vectors_(std::move(vectors)) {
  if (vectors_.cols() <= 0) throw ValidationError("embedding dimension must be positive");
  if (static_cast<std::size_t>(vectors_.rows()) != words_.size())
    throw ValidationError("embedding table has " + std::to_string(vectors_.rows()) + " rows for " +
                          std::to_string(words_.size()) + " words");
  if (!vectors_.allFinite()) throw ValidationError("embedding table contains non-finite values");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (!index_.emplace(words_[i], static_cast<Eigen::Index>(i)).second)
      throw ValidationError("duplicate embedding word '" + words_[i] + "'");
  }
}

EmbeddingStore EmbeddingStore::parse(std::istream& in, std::string_view name) {
  const std::string where(name);
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> ValidationError {
    return ValidationError(where + ":" + std::to_string(line_no) + ": " + what);
  };

  if (!std::getline(in, line)) throw ValidationError(where + ": missing '<count> <dim>' header");
  ++line_no;
  const auto header = split_fields(line);
  long long count = 0;
  long long dim = 0;
  if (header.size() != 2 || !parse_number(header[0], count) || !parse_number(header[1], dim) || count < 0 ||
      dim <= 0)
    throw fail("header must be '<count> <dim>' with count >= 0 and dim > 0");

  std::vector<std::string> words;
  words.reserve(static_cast<std::size_t>(count));
  Table table(count, dim);
  std::unordered_map<std::string, std::size_t> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (static_cast<long long>(words.size()) == count) throw fail("more rows than the declared count " + std::to_string(count));
    if (static_cast<long long>(fields.size()) != dim + 1)
      throw fail("expected " + std::to_string(dim) + " values, got " + std::to_string(fields.size() - 1));
    std::string word(fields[0]);
    if (auto [it, fresh] = seen.emplace(word, line_no); !fresh)
      throw fail("duplicate word '" + word + "' (first on line " + std::to_string(it->second) + ")");
    const auto row = static_cast<Eigen::Index>(words.size());
    for (long long k = 0; k < dim; ++k) {
      double v = 0;
      if (!parse_number(fields[k + 1], v) || !std::isfinite(v))
        throw fail("bad value '" + std::string(fields[k + 1]) + "'");
      table(row, k) = v;
    }
    words.push_back(std::move(word));
  }
  if (static_cast<long long>(words.size()) != count)
    throw ValidationError(where + ": declared " + std::to_string(count) + " rows, found " +
                          std::to_string(words.size()));
  return EmbeddingStore(std::move(words), std::move(table));
}

EmbeddingStore EmbeddingStore::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open embeddings '" + path.string() + "'");
  return parse(in, path.string());
}

void EmbeddingStore::write(std::ostream& out) const {
  out << words_.size() << ' ' << dim() << '\n';
  char buf[64];
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out << words_[i];
    for (Eigen::Index k = 0; k < dim(); ++k) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, vectors_(static_cast<Eigen::Index>(i), k));
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
    }
    out << '\n';
  }
}

const double* EmbeddingStore::find(std::string_view word) const {
  const auto it = index_.find(std::string(word));
  return it == index_.end() ? nullptr : vectors_.row(it->second).data();
}

TokenEmbedding embed_token(const EmbeddingStore& store, std::string_view token) {
  if (const double* row = store.find(token)) return {Eigen::Map<const Eigen::VectorXd>(row, store.dim()), false};
  return {Eigen::VectorXd::Zero(store.dim()), true};
}

Eigen::VectorXd mae_vector(const EmbeddingStore& store, std::string_view token, const Lexicon& lex) {
  const std::string corrected = correct(token, lex);
  Eigen::VectorXd own = embed_token(store, token).vector;
  if (corrected == token) return own;
  return average(own, embed_token(store, corrected).vector);
}

std::vector<std::pair<std::string, std::string>> align_subtokens(const std::vector<std::string>& misp_subtokens,
                                                                 const std::vector<std::string>& norm_subtokens) {
  if (misp_subtokens.empty() || norm_subtokens.empty())
    throw ValidationError("align_subtokens: subtoken lists must be non-empty");

  std::vector<std::string> norm;
  if (norm_subtokens.size() < misp_subtokens.size()) {
    norm.assign(misp_subtokens.size() - norm_subtokens.size(), norm_subtokens.front());
    norm.insert(norm.end(), norm_subtokens.begin(), norm_subtokens.end());
  } else {
    norm.assign(norm_subtokens.begin(), norm_subtokens.begin() + static_cast<std::ptrdiff_t>(misp_subtokens.size()));
  }

  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(misp_subtokens.size());
  for (std::size_t i = 0; i < misp_subtokens.size(); ++i) out.emplace_back(misp_subtokens[i], norm[i]);
  return out;
}

EmbeddingStore generate_embeddings(const std::vector<std::string>& vocab, Eigen::Index dim, std::uint64_t seed) {
  if (dim <= 0) throw ValidationError("embedding dimension must be positive");
  EmbeddingStore::Table table(static_cast<Eigen::Index>(vocab.size()), dim);
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    std::mt19937_64 rng(seed ^ fnv1a(vocab[i]));
    for (Eigen::Index k = 0; k < dim; ++k) {
      // mt19937_64 output is fully specified, unlike the std distributions.
      const auto step = static_cast<long long>(rng() % 2000001ULL) - 1000000LL;
      table(static_cast<Eigen::Index>(i), k) = static_cast<double>(step) / 1e6;
    }
  }
  return EmbeddingStore(vocab, std::move(table));
}

}  // namespace thaimisp
