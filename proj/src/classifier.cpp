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

#include "thaimisp/classifier.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "json.hpp"

#include "thaimisp/detector.hpp"
#include "thaimisp/error.hpp"
#include "thaimisp/mst.hpp"

namespace thaimisp {

namespace {

constexpr const char* kModelFormat = "thaimisp-model";
constexpr int kModelVersion = 1;

Eigen::MatrixXd softmax_rows(const Eigen::MatrixXd& scores) {
  Eigen::MatrixXd p = scores.colwise() - scores.rowwise().maxCoeff();
  p = p.array().exp();
  p.array().colwise() /= p.rowwise().sum().array();
  return p;
}

Eigen::MatrixXd one_hot(const std::vector<Sentiment>& labels) {
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(labels.size()), kNumSentiments);
  for (std::size_t i = 0; i < labels.size(); ++i) y(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(labels[i])) = 1;
  return y;
}

Eigen::MatrixXd class_scores(const SentimentModel& model, const Eigen::MatrixXd& features) {
  return (features * model.weights.transpose()).rowwise() + model.bias.transpose();
}

std::vector<Sentiment> gold_labels(const std::vector<TokenizedSentence>& corpus) {
  std::vector<Sentiment> out;
  out.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!corpus[i].label) throw ValidationError("sentence " + std::to_string(i + 1) + " has no sentiment label");
    out.push_back(*corpus[i].label);
  }
  return out;
}

}  // namespace

const char* to_string(FeatureMode mode) {
  switch (mode) {
    case FeatureMode::None: return "none";
    case FeatureMode::Norm: return "norm";
    case FeatureMode::Mae: return "mae";
    case FeatureMode::Mst: return "mst";
    case FeatureMode::MaeMst: return "mae+mst";
  }
  return "none";
}

std::optional<FeatureMode> parse_feature_mode(std::string_view text) {
  if (text == "none") return FeatureMode::None;
  if (text == "norm") return FeatureMode::Norm;
  if (text == "mae") return FeatureMode::Mae;
  if (text == "mst") return FeatureMode::Mst;
  if (text == "mae+mst" || text == "mae_mst" || text == "maemst") return FeatureMode::MaeMst;
  return std::nullopt;
}

bool uses_tags(FeatureMode mode) { return mode == FeatureMode::Mst || mode == FeatureMode::MaeMst; }

Eigen::VectorXd featurize(const TokenizedSentence& sentence, FeatureMode mode, const EmbeddingStore& store,
                          const Lexicon& lex) {
  const Eigen::Index dim = store.dim();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim + kTagFeatures);
  if (sentence.empty()) return out;

  auto embedding = out.head(dim);
  for (const auto& token : sentence.tokens) {
    switch (mode) {
      case FeatureMode::None:
      case FeatureMode::Mst: embedding += embed_token(store, token).vector; break;
      case FeatureMode::Norm: embedding += embed_token(store, correct(token, lex)).vector; break;
      case FeatureMode::Mae:
      case FeatureMode::MaeMst: embedding += mae_vector(store, token, lex); break;
    }
  }
  embedding /= static_cast<double>(sentence.size());

  if (uses_tags(mode)) {
    const auto augmented = annotate(sentence, lex);
    for (std::size_t k = 0; k < kNumTags; ++k)
      out(dim + static_cast<Eigen::Index>(k)) = static_cast<double>(augmented.tag_counts[k]);
  }
  return out;
}

Eigen::MatrixXd featurize_all(const std::vector<TokenizedSentence>& corpus, FeatureMode mode,
                              const EmbeddingStore& store, const Lexicon& lex) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(corpus.size()), store.dim() + kTagFeatures);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    x.row(static_cast<Eigen::Index>(i)) = featurize(corpus[i], mode, store, lex).transpose();
  return x;
}

Sentiment argmax(const ClassScores& scores) {
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < scores.size(); ++k)
    if (scores(k) > scores(best)) best = k;
  return static_cast<Sentiment>(best);
}

ClassScores SentimentModel::scores(const Eigen::Ref<const Eigen::VectorXd>& features) const {
  return weights * features + bias;
}

Sentiment SentimentModel::predict(const Eigen::Ref<const Eigen::VectorXd>& features) const {
  return argmax(scores(features));
}

double cross_entropy(const SentimentModel& model, const Eigen::MatrixXd& features,
                     const std::vector<Sentiment>& labels) {
  const Eigen::MatrixXd s = class_scores(model, features);
  double total = 0;
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    const double top = s.row(i).maxCoeff();
    const double log_z = top + std::log((s.row(i).array() - top).exp().sum());
    total += log_z - s(i, static_cast<Eigen::Index>(labels[static_cast<std::size_t>(i)]));
  }
  return s.rows() == 0 ? 0.0 : total / static_cast<double>(s.rows());
}

SentimentModel fit_logistic(const Eigen::MatrixXd& features, const std::vector<Sentiment>& labels,
                            const TrainConfig& config, std::vector<double>* loss_trace) {
  if (features.rows() == 0) throw ValidationError("cannot train on an empty corpus");
  if (static_cast<std::size_t>(features.rows()) != labels.size())
    throw ValidationError("feature rows and labels differ in count");
  if (config.epochs < 0) throw ValidationError("epochs must be non-negative");

  SentimentModel model;
  model.weights = Eigen::MatrixXd::Zero(kNumSentiments, features.cols());
  model.seed = config.seed;

  const Eigen::MatrixXd y = one_hot(labels);
  const double n = static_cast<double>(features.rows());
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    if (loss_trace) loss_trace->push_back(cross_entropy(model, features, labels));
    const Eigen::MatrixXd residual = softmax_rows(class_scores(model, features)) - y;
    model.weights -= config.learning_rate * (residual.transpose() * features) / n;
    model.bias -= config.learning_rate * residual.colwise().sum().transpose() / n;
  }
  if (loss_trace) loss_trace->push_back(cross_entropy(model, features, labels));
  return model;
}

SentimentModel train(const std::vector<TokenizedSentence>& corpus, FeatureMode mode, const EmbeddingStore& store,
                     const Lexicon& lex, const TrainConfig& config) {
  if (corpus.empty()) throw ValidationError("cannot train on an empty corpus");
  const auto labels = gold_labels(corpus);
  bool single_class = true;
  for (auto l : labels) single_class = single_class && l == labels.front();
  if (single_class && config.on_warning)
    config.on_warning(std::string("training corpus has a single class (") + to_string(labels.front()) + ")");

  SentimentModel model = fit_logistic(featurize_all(corpus, mode, store, lex), labels, config);
  model.mode = mode;
  return model;
}

const char* to_string(EvalSubset subset) {
  switch (subset) {
    case EvalSubset::All: return "all";
    case EvalSubset::MispOnly: return "misp";
    case EvalSubset::NormOnly: return "norm";
  }
  return "all";
}

std::optional<EvalSubset> parse_eval_subset(std::string_view text) {
  if (text == "all") return EvalSubset::All;
  if (text == "misp") return EvalSubset::MispOnly;
  if (text == "norm") return EvalSubset::NormOnly;
  return std::nullopt;
}

EvalReport score_confusion(const Confusion& confusion) {
  EvalReport report;
  report.confusion = confusion;
  std::size_t total = 0;
  std::size_t correct_count = 0;
  std::array<std::size_t, kNumSentiments> tp{}, fp{}, fn{};
  for (std::size_t g = 0; g < kNumSentiments; ++g) {
    for (std::size_t p = 0; p < kNumSentiments; ++p) {
      const std::size_t n = confusion[g][p];
      total += n;
      if (g == p) {
        tp[g] += n;
        correct_count += n;
      } else {
        fn[g] += n;
        fp[p] += n;
      }
    }
  }
  report.support = total;
  if (total == 0) return report;

  std::size_t tp_sum = 0, fp_sum = 0, fn_sum = 0;
  for (std::size_t k = 0; k < kNumSentiments; ++k) {
    tp_sum += tp[k], fp_sum += fp[k], fn_sum += fn[k];
    const std::size_t denom = 2 * tp[k] + fp[k] + fn[k];
    report.per_class_f1[k] = denom == 0 ? 0.0 : 2.0 * static_cast<double>(tp[k]) / static_cast<double>(denom);
  }
  const double precision = static_cast<double>(tp_sum) / static_cast<double>(tp_sum + fp_sum);
  const double recall = static_cast<double>(tp_sum) / static_cast<double>(tp_sum + fn_sum);
  report.micro_f1 = precision + recall == 0 ? 0.0 : 2 * precision * recall / (precision + recall);
  report.accuracy = static_cast<double>(correct_count) / static_cast<double>(total);
  return report;
}

bool has_misspelling(const TokenizedSentence& sentence, const Lexicon& lex) {
  for (const auto& token : sentence.tokens)
    if (detect(token, lex) != MispTag::Null) return true;
  return false;
}

EvalReport evaluate(const SentimentModel& model, const std::vector<TokenizedSentence>& corpus,
                    const EmbeddingStore& store, const Lexicon& lex, EvalSubset subset) {
  if (model.embedding_dim() != store.dim())
    throw ValidationError("model expects embedding dimension " + std::to_string(model.embedding_dim()) +
                          ", store has " + std::to_string(store.dim()));

  Confusion confusion{};
  std::size_t used = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& sentence = corpus[i];
    if (!sentence.label) throw ValidationError("sentence " + std::to_string(i + 1) + " has no sentiment label");
    if (subset != EvalSubset::All && !has_misspelling(sentence, lex)) continue;

    Sentiment predicted;
    if (subset == EvalSubset::NormOnly) {
      TokenizedSentence normalized = sentence;
      for (auto& token : normalized.tokens) token = correct(token, lex);
      predicted = model.predict(featurize(normalized, model.mode, store, lex));
    } else {
      predicted = model.predict(featurize(sentence, model.mode, store, lex));
    }
    ++confusion[static_cast<std::size_t>(*sentence.label)][static_cast<std::size_t>(predicted)];
    ++used;
  }
  if (used == 0) throw ValidationError(std::string("evaluation subset '") + to_string(subset) + "' is empty");

  EvalReport report = score_confusion(confusion);
  report.subset = subset;
  report.mode = model.mode;
  return report;
}

void write_model(const SentimentModel& model, std::ostream& out) {
  nlohmann::json j;
  j["format"] = kModelFormat;
  j["version"] = kModelVersion;
  j["mode"] = to_string(model.mode);
  j["dim"] = model.embedding_dim();
  j["seed"] = model.seed;
  j["classes"] = {"negative", "neutral", "positive"};
  std::vector<double> weights;
  for (Eigen::Index r = 0; r < model.weights.rows(); ++r)
    for (Eigen::Index c = 0; c < model.weights.cols(); ++c) weights.push_back(model.weights(r, c));
  j["weights"] = weights;
  j["bias"] = std::vector<double>(model.bias.data(), model.bias.data() + model.bias.size());
  out << j.dump(2) << '\n';
}

SentimentModel read_model(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format") != kModelFormat) throw ValidationError("not a thaimisp model file");
    if (j.at("version") != kModelVersion)
      throw ValidationError("unsupported model version " + j.at("version").dump());
    SentimentModel model;
    const auto mode = parse_feature_mode(j.at("mode").get<std::string>());
    if (!mode) throw ValidationError("unknown mode " + j.at("mode").dump());
    model.mode = *mode;
    model.seed = j.at("seed").get<std::uint64_t>();
    const auto dim = j.at("dim").get<Eigen::Index>();
    const auto weights = j.at("weights").get<std::vector<double>>();
    const auto bias = j.at("bias").get<std::vector<double>>();
    const Eigen::Index cols = dim + kTagFeatures;
    constexpr auto rows = static_cast<Eigen::Index>(kNumSentiments);
    if (dim <= 0 || static_cast<Eigen::Index>(weights.size()) != rows * cols ||
        bias.size() != kNumSentiments)
      throw ValidationError("model weight/bias sizes do not match dim " + std::to_string(dim));
    model.weights.resize(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) model.weights(r, c) = weights[static_cast<std::size_t>(r * cols + c)];
    for (Eigen::Index k = 0; k < rows; ++k) model.bias(k) = bias[static_cast<std::size_t>(k)];
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed model file: ") + e.what());
  }
}

void write_report(const EvalReport& report, std::ostream& out) {
  nlohmann::json j;
  j["subset"] = to_string(report.subset);
  j["mode"] = to_string(report.mode);
  j["support"] = report.support;
  j["micro_f1"] = report.micro_f1;
  j["accuracy"] = report.accuracy;
  nlohmann::json per_class = nlohmann::json::object();
  for (std::size_t k = 0; k < kNumSentiments; ++k) per_class[to_string(static_cast<Sentiment>(k))] = report.per_class_f1[k];
  j["per_class_f1"] = per_class;
  j["confusion"] = report.confusion;
  out << j.dump(2) << '\n';
}

}  // namespace thaimisp
