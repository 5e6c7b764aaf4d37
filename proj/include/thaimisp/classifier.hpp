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

// Sentence featurization, the logistic-regression sentiment model and its
// micro-F1 evaluation.

#pragma once

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thaimisp/lexicon.hpp"
#include "thaimisp/mae.hpp"
#include "thaimisp/segmenter.hpp"

namespace thaimisp {

enum class FeatureMode : std::uint8_t { None, Norm, Mae, Mst, MaeMst };

const char* to_string(FeatureMode mode);
std::optional<FeatureMode> parse_feature_mode(std::string_view text);
bool uses_tags(FeatureMode mode);

// Extra feature columns holding the LOL/REP/INT/MSP counts.
inline constexpr Eigen::Index kTagFeatures = 4;

// [mean token vector | tag counts].  The tag block is zero unless the mode
// includes Mst; an empty sentence maps to the zero vector.
Eigen::VectorXd featurize(const TokenizedSentence& sentence, FeatureMode mode, const EmbeddingStore& store,
                          const Lexicon& lex);

Eigen::MatrixXd featurize_all(const std::vector<TokenizedSentence>& corpus, FeatureMode mode,
                              const EmbeddingStore& store, const Lexicon& lex);

using ClassScores = Eigen::Matrix<double, kNumSentiments, 1>;

struct SentimentModel {
  Eigen::Matrix<double, kNumSentiments, Eigen::Dynamic> weights;
  ClassScores bias = ClassScores::Zero();
  FeatureMode mode = FeatureMode::None;
  std::uint64_t seed = 0;

  Eigen::Index embedding_dim() const { return weights.cols() - kTagFeatures; }
  ClassScores scores(const Eigen::Ref<const Eigen::VectorXd>& features) const;
  Sentiment predict(const Eigen::Ref<const Eigen::VectorXd>& features) const;
};

// Highest score; ties go to the lowest class index.
Sentiment argmax(const ClassScores& scores);

struct TrainConfig {
  int epochs = 500;
  double learning_rate = 0.1;
  std::uint64_t seed = 0;
  std::function<void(std::string_view)> on_warning;
};

// Full-batch gradient descent on mean cross-entropy from all-zero weights.
// `loss_trace`, when given, receives the loss before every epoch and after
// the last one (epochs + 1 values).
SentimentModel fit_logistic(const Eigen::MatrixXd& features, const std::vector<Sentiment>& labels,
                            const TrainConfig& config, std::vector<double>* loss_trace = nullptr);

double cross_entropy(const SentimentModel& model, const Eigen::MatrixXd& features,
                     const std::vector<Sentiment>& labels);

// Throws ValidationError on an empty corpus or an unlabeled sentence.
SentimentModel train(const std::vector<TokenizedSentence>& corpus, FeatureMode mode, const EmbeddingStore& store,
                     const Lexicon& lex, const TrainConfig& config = {});

enum class EvalSubset : std::uint8_t { All, MispOnly, NormOnly };

const char* to_string(EvalSubset subset);
std::optional<EvalSubset> parse_eval_subset(std::string_view text);

using Confusion = std::array<std::array<std::size_t, kNumSentiments>, kNumSentiments>;  // [gold][predicted]

struct EvalReport {
  EvalSubset subset = EvalSubset::All;
  FeatureMode mode = FeatureMode::None;
  std::size_t support = 0;
  double micro_f1 = 0;
  double accuracy = 0;
  std::array<double, kNumSentiments> per_class_f1{};
  Confusion confusion{};
};

// Pooled-count micro-F1 and per-class F1 from a confusion matrix.
EvalReport score_confusion(const Confusion& confusion);

bool has_misspelling(const TokenizedSentence& sentence, const Lexicon& lex);

// MispOnly keeps sentences with at least one detected misspelling; NormOnly
// keeps the same sentences with every token corrected first.  Throws
// ValidationError on an empty subset or an unlabeled sentence.
EvalReport evaluate(const SentimentModel& model, const std::vector<TokenizedSentence>& corpus,
                    const EmbeddingStore& store, const Lexicon& lex, EvalSubset subset);

// Model file (JSON): format tag, version, mode, dim, seed, row-major weights, bias.
void write_model(const SentimentModel& model, std::ostream& out);
SentimentModel read_model(std::istream& in);

void write_report(const EvalReport& report, std::ostream& out);

}  // namespace thaimisp
