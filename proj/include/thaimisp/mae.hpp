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

// Embedding table and misspelling-average embedding composition.

#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "thaimisp/lexicon.hpp"

namespace thaimisp {

class EmbeddingStore {
 public:
  using Table = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  EmbeddingStore() = default;
  // Rows of `vectors` follow `words`.  Throws ValidationError on a zero
  // dimension, non-finite values, a size mismatch or duplicate words.
  EmbeddingStore(std::vector<std::string> words, Table vectors);

  // Text format: "<count> <dim>" header, then "word v1 ... vdim" per line.
  static EmbeddingStore parse(std::istream& in, std::string_view name = "<embeddings>");
  static EmbeddingStore load(const std::filesystem::path& path);
  void write(std::ostream& out) const;

  Eigen::Index dim() const { return vectors_.cols(); }
  std::size_t size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }

  // Row of a known word, or nullptr.
  const double* find(std::string_view word) const;

 private:
  std::vector<std::string> words_;
  Table vectors_;
  std::unordered_map<std::string, Eigen::Index> index_;
};

struct TokenEmbedding {
  Eigen::VectorXd vector;
  bool oov = false;
};

// Stored vector, or a zero vector flagged out-of-vocabulary.
TokenEmbedding embed_token(const EmbeddingStore& store, std::string_view token);

// Componentwise mean of two vectors.  The mean of x with itself is x.
template <typename DerivedA, typename DerivedB>
auto average(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return ((a + b) * typename DerivedA::Scalar(0.5));
}

// AVG(E(w), E(MC(w))).  Equals embed_token(w) when the lexicon leaves w as is.
Eigen::VectorXd mae_vector(const EmbeddingStore& store, std::string_view token, const Lexicon& lex);

// Pairs every misspelt subtoken with a normalized subtoken.  A shorter
// normalized list is padded at the front with copies of its first subtoken;
// a longer one is cut at the tail.  Throws ValidationError on empty input.
std::vector<std::pair<std::string, std::string>> align_subtokens(const std::vector<std::string>& misp_subtokens,
                                                                 const std::vector<std::string>& norm_subtokens);

// Deterministic pseudo-random store for fixtures.  Each word's vector
// depends only on (seed, word); components are multiples of 1e-6 in [-1, 1].
EmbeddingStore generate_embeddings(const std::vector<std::string>& vocab, Eigen::Index dim, std::uint64_t seed);

}  // namespace thaimisp
