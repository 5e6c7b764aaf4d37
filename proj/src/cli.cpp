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

#include "thaimisp/cli.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "thaimisp/classifier.hpp"
#include "thaimisp/corpus.hpp"
#include "thaimisp/detector.hpp"
#include "thaimisp/error.hpp"
#include "thaimisp/mae.hpp"
#include "thaimisp/mst.hpp"
#include "thaimisp/patterns.hpp"
#include "thaimisp/stats.hpp"

namespace thaimisp {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string input;
  std::string output;
  std::string lexicon;
  std::string wordlist;
  std::string embeddings;
  std::string corpus;
  std::string model;
  std::string vocab;
  std::string annotations;
  std::string kappa_csv;
  std::string entropy_csv;
  std::string mode = "none";
  std::string subset = "all";
  std::uint64_t seed = 0;
  int epochs = 500;
  double learning_rate = 0.1;
  long long dim = 0;
  std::size_t min_count = kDefaultMinObservations;
  std::size_t top_k = 5;
  unsigned workers = 1;
};

void require_file(const std::string& path, const char* what) {
  if (path.empty()) throw ValidationError(std::string("missing --") + what);
  if (!fs::is_regular_file(path)) throw IoError(std::string(what) + " file '" + path + "' does not exist");
}

// Streams the command reads from and writes to.
class Io {
 public:
  Io(const RunConfig& cfg, std::istream& in, std::ostream& out) : in_(&in), out_(&out) {
    if (!cfg.input.empty()) {
      file_in_.open(cfg.input);
      if (!file_in_) throw IoError("cannot open input '" + cfg.input + "'");
      in_ = &file_in_;
    }
    output_path_ = cfg.output;
  }

  std::istream& in() { return *in_; }

  // Output is buffered and written at the end so that a failing run leaves
  // no partial file behind.
  std::ostream& out() { return buffer_; }

  void flush() {
    if (output_path_.empty()) {
      *out_ << buffer_.str();
      out_->flush();
      return;
    }
    std::ofstream file(output_path_, std::ios::binary);
    if (!file) throw IoError("cannot open output '" + output_path_ + "'");
    file << buffer_.str();
    if (!file) throw IoError("failed writing '" + output_path_ + "'");
  }

 private:
  std::istream* in_;
  std::ostream* out_;
  std::ifstream file_in_;
  std::string output_path_;
  std::ostringstream buffer_;
};

std::string dump_line(const nlohmann::json& j) {
  try {
    return j.dump();
  } catch (const nlohmann::json::type_error& e) {
    throw ValidationError(std::string("cannot encode output: ") + e.what());
  }
}

// Applies `fn` to every non-blank line, in parallel when workers > 1, and
// writes results in input order.  The first failing line (in input order)
// is reported.
void map_lines(std::istream& in, std::ostream& out, unsigned workers,
               const std::function<std::string(std::string_view, std::size_t)>& fn) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.emplace_back(line_no, std::move(line));
  }

  std::vector<std::string> results(lines.size());
  std::vector<std::exception_ptr> errors(lines.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < lines.size(); i += step) {
      try {
        results[i] = fn(lines[i].second, lines[i].first);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, lines.size()))));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out << results[i] << '\n';
  }
}

Lexicon load_lexicon(const RunConfig& cfg) {
  require_file(cfg.lexicon, "lexicon");
  require_file(cfg.wordlist, "wordlist");
  return Lexicon::load(cfg.lexicon, cfg.wordlist);
}

FeatureMode feature_mode(const RunConfig& cfg) {
  const auto mode = parse_feature_mode(cfg.mode);
  if (!mode) throw ValidationError("unknown --mode '" + cfg.mode + "' (none, norm, mae, mst, mae+mst)");
  return *mode;
}

void write_tag_counts(nlohmann::json& obj, const AugmentedSentence& aug) {
  nlohmann::json counts = nlohmann::json::object();
  for (auto tag : {MispTag::Lol, MispTag::Rep, MispTag::Int, MispTag::Msp}) {
    std::string key(surface(tag).substr(1, 3));
    counts[key] = aug.tag_counts[static_cast<std::size_t>(tag)];
  }
  obj["tag_counts"] = counts;
}

using LineStage = std::function<void(nlohmann::json&, const TokenizedSentence&, const Lexicon&)>;

void run_line_stage(const RunConfig& cfg, std::istream& in, std::ostream& out, const LineStage& stage) {
  if (!cfg.input.empty()) require_file(cfg.input, "input");
  const Lexicon lex = load_lexicon(cfg);
  const Segmenter segmenter(lex);
  Io io(cfg, in, out);
  map_lines(io.in(), io.out(), cfg.workers, [&](std::string_view line, std::size_t line_no) {
    auto record = parse_corpus_line(line, line_no, segmenter, cfg.input.empty() ? "<stdin>" : cfg.input);
    stage(record.object, record.sentence, lex);
    return dump_line(record.object);
  });
  io.flush();
}

void cmd_classify_pattern(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (!cfg.input.empty()) require_file(cfg.input, "input");
  Io io(cfg, in, out);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(io.in(), line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string col; std::getline(ss, col, '\t');) cols.push_back(col);
    auto where = "line " + std::to_string(line_no) + ": ";
    if (cols.size() < 3) throw ValidationError(where + "expected misspelt<TAB>corrected<TAB>intention");
    const auto intention = parse_intention(cols[2]);
    if (!intention) throw ValidationError(where + "unknown intention '" + cols[2] + "'");
    try {
      const auto label = classify_pattern(cols[0], cols[1], *intention);
      io.out() << cols[0] << '\t' << cols[1] << '\t' << to_string(label) << '\n';
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    }
  }
  io.flush();
}

std::vector<TokenizedSentence> load_sentences(const std::string& path, const Lexicon& lex) {
  const Segmenter segmenter(lex);
  return sentences_of(read_corpus(fs::path(path), segmenter));
}

void cmd_train(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  require_file(cfg.corpus, "corpus");
  require_file(cfg.embeddings, "embeddings");
  const FeatureMode mode = feature_mode(cfg);
  const Lexicon lex = load_lexicon(cfg);
  const auto store = EmbeddingStore::load(cfg.embeddings);
  const auto corpus = load_sentences(cfg.corpus, lex);

  TrainConfig tc;
  tc.epochs = cfg.epochs;
  tc.learning_rate = cfg.learning_rate;
  tc.seed = cfg.seed;
  tc.on_warning = [&](std::string_view msg) { err << "warning: " << msg << '\n'; };
  const auto model = train(corpus, mode, store, lex, tc);

  Io io(cfg, in, out);
  write_model(model, io.out());
  io.flush();
}

void cmd_eval(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  require_file(cfg.model, "model");
  require_file(cfg.corpus, "corpus");
  require_file(cfg.embeddings, "embeddings");
  const auto subset = parse_eval_subset(cfg.subset);
  if (!subset) throw ValidationError("unknown --subset '" + cfg.subset + "' (all, misp, norm)");
  const Lexicon lex = load_lexicon(cfg);

  std::ifstream model_in(cfg.model);
  if (!model_in) throw IoError("cannot open model '" + cfg.model + "'");
  SentimentModel model = read_model(model_in);
  // --mode, when given, must agree with the model it evaluates.
  if (cfg.mode != "none" && feature_mode(cfg) != model.mode)
    throw ValidationError(std::string("--mode ") + cfg.mode + " does not match the model's mode " +
                          to_string(model.mode));
  const auto store = EmbeddingStore::load(cfg.embeddings);
  const auto corpus = load_sentences(cfg.corpus, lex);
  const auto report = evaluate(model, corpus, store, lex, *subset);

  Io io(cfg, in, out);
  write_report(report, io.out());
  io.flush();
}

void cmd_stats(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.annotations.empty() && cfg.corpus.empty())
    throw ValidationError("stats needs --annotations and/or --corpus");
  if (!cfg.annotations.empty()) require_file(cfg.annotations, "annotations");
  if (!cfg.corpus.empty()) require_file(cfg.corpus, "corpus");
  if (cfg.min_count < 1) throw ValidationError("--min-count must be at least 1");

  nlohmann::json result = nlohmann::json::object();
  if (!cfg.annotations.empty()) {
    const auto records = read_annotations(fs::path(cfg.annotations));
    const auto matrix = pairwise_kappa_matrix(records);
    result["kappa"] = to_json(matrix);
    const auto terms = group_by_term(records);
    nlohmann::json entropy = nlohmann::json::array();
    for (const auto& t : terms) {
      if (auto h = label_entropy(t, cfg.min_count))
        entropy.push_back({{"term", t.term}, {"observations", t.labels.size()}, {"entropy", *h}});
    }
    result["entropy"] = entropy;
    result["min_count"] = cfg.min_count;

    if (!cfg.kappa_csv.empty()) {
      std::ofstream f(cfg.kappa_csv);
      if (!f) throw IoError("cannot open '" + cfg.kappa_csv + "'");
      write_kappa_csv(matrix, f);
    }
    if (!cfg.entropy_csv.empty()) {
      std::ofstream f(cfg.entropy_csv);
      if (!f) throw IoError("cannot open '" + cfg.entropy_csv + "'");
      write_entropy_csv(terms, cfg.min_count, f);
    }
  }
  if (!cfg.corpus.empty()) {
    std::ifstream f(cfg.corpus);
    if (!f) throw IoError("cannot open corpus '" + cfg.corpus + "'");
    result["summary"] = to_json(corpus_summary(f, cfg.top_k, cfg.corpus));
  }

  Io io(cfg, in, out);
  io.out() << result.dump(2) << '\n';
  io.flush();
}

void cmd_gen_embeddings(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  require_file(cfg.vocab, "vocab");
  if (cfg.dim <= 0) throw ValidationError("--dim must be positive");
  const auto words = read_wordlist(fs::path(cfg.vocab));
  const auto store = generate_embeddings({words.begin(), words.end()}, cfg.dim, cfg.seed);
  Io io(cfg, in, out);
  store.write(io.out());
  io.flush();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"thaimisp: Thai misspelling detection, correction and enrichment toolkit", "thaimisp"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input, "Input file (default: standard input)");
    sub->add_option("-o,--output", cfg.output, "Output file (default: standard output)");
  };
  auto add_lexicon = [&](CLI::App* sub) {
    sub->add_option("--lexicon", cfg.lexicon, "Misspelling lexicon TSV")->required();
    sub->add_option("--wordlist", cfg.wordlist, "Standard wordlist, one word per line")->required();
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("-j,--workers", cfg.workers, "Worker threads for per-line processing")
        ->check(CLI::Range(1u, 256u));
  };

  auto* segment_cmd = app.add_subcommand("segment", "Segment corpus JSONL into word tokens");
  auto* detect_cmd = app.add_subcommand("detect", "Tag every token with LOL/REP/INT/MSP/NULL");
  auto* normalize_cmd = app.add_subcommand("normalize", "Replace tokens by their corrected forms");
  auto* annotate_cmd = app.add_subcommand("annotate", "Insert misspelling tag tokens after misspelt words");
  for (auto* sub : {segment_cmd, detect_cmd, normalize_cmd, annotate_cmd}) {
    add_io(sub);
    add_lexicon(sub);
    add_workers(sub);
  }

  auto* pattern_cmd = app.add_subcommand(
      "classify-pattern", "Classify misspelt<TAB>corrected<TAB>intention rows into misspelling patterns");
  add_io(pattern_cmd);

  auto* train_cmd = app.add_subcommand("train", "Train the sentiment classifier");
  add_lexicon(train_cmd);
  train_cmd->add_option("-o,--output", cfg.output, "Model file (default: standard output)");
  train_cmd->add_option("--corpus", cfg.corpus, "Labelled corpus JSONL")->required();
  train_cmd->add_option("--embeddings", cfg.embeddings, "Embedding text file")->required();
  train_cmd->add_option("--mode", cfg.mode, "none, norm, mae, mst or mae+mst");
  train_cmd->add_option("--epochs", cfg.epochs, "Gradient-descent epochs")->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--learning-rate,--lr", cfg.learning_rate, "Learning rate")->check(CLI::PositiveNumber);
  train_cmd->add_option("--seed", cfg.seed, "Seed recorded in the model");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a trained model (micro-F1)");
  add_lexicon(eval_cmd);
  eval_cmd->add_option("-o,--output", cfg.output, "Report file (default: standard output)");
  eval_cmd->add_option("--model", cfg.model, "Model file from train")->required();
  eval_cmd->add_option("--corpus", cfg.corpus, "Labelled corpus JSONL")->required();
  eval_cmd->add_option("--embeddings", cfg.embeddings, "Embedding text file")->required();
  eval_cmd->add_option("--subset", cfg.subset, "all, misp or norm");
  eval_cmd->add_option("--mode", cfg.mode, "Expected model mode (checked against the model)");
  eval_cmd->add_option("--seed", cfg.seed, "Accepted for pipeline symmetry; evaluation is deterministic");

  auto* stats_cmd = app.add_subcommand("stats", "Annotation agreement, label entropy and corpus summary");
  stats_cmd->add_option("--annotations", cfg.annotations, "Annotations JSONL {item_id, annotator_id, label}");
  stats_cmd->add_option("--corpus", cfg.corpus, "Annotated corpus JSONL with misspelling spans");
  stats_cmd->add_option("--min-count", cfg.min_count, "Minimum observations for term entropy");
  stats_cmd->add_option("--top-k", cfg.top_k, "Number of top terms per intention");
  stats_cmd->add_option("--kappa-csv", cfg.kappa_csv, "Also write the kappa matrix as CSV");
  stats_cmd->add_option("--entropy-csv", cfg.entropy_csv, "Also write the entropy table as CSV");
  stats_cmd->add_option("-o,--output", cfg.output, "Output file (default: standard output)");

  auto* gen_cmd = app.add_subcommand("gen-embeddings", "Write a deterministic pseudo-random embedding file");
  gen_cmd->add_option("--dim", cfg.dim, "Vector dimension")->required();
  gen_cmd->add_option("--seed", cfg.seed, "Random seed")->required();
  gen_cmd->add_option("--vocab", cfg.vocab, "Vocabulary, one word per line")->required();
  gen_cmd->add_option("-o,--output", cfg.output, "Output file (default: standard output)");

  std::vector<const char*> argv{"thaimisp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitValidation;
  }

  try {
    if (*segment_cmd) {
      run_line_stage(cfg, in, out, [](nlohmann::json& obj, const TokenizedSentence& s, const Lexicon&) {
        obj["tokens"] = s.tokens;
      });
    } else if (*detect_cmd) {
      run_line_stage(cfg, in, out, [](nlohmann::json& obj, const TokenizedSentence& s, const Lexicon& lex) {
        std::vector<std::string> tags;
        for (const auto& t : s.tokens) tags.emplace_back(to_string(detect(t, lex)));
        obj["tokens"] = s.tokens;
        obj["tags"] = tags;
      });
    } else if (*normalize_cmd) {
      run_line_stage(cfg, in, out, [](nlohmann::json& obj, const TokenizedSentence& s, const Lexicon& lex) {
        std::vector<std::string> corrected;
        for (const auto& t : s.tokens) corrected.push_back(correct(t, lex));
        obj["tokens"] = corrected;
      });
    } else if (*annotate_cmd) {
      run_line_stage(cfg, in, out, [](nlohmann::json& obj, const TokenizedSentence& s, const Lexicon& lex) {
        const auto aug = annotate(s, lex);
        obj["tokens"] = aug.tokens;
        write_tag_counts(obj, aug);
      });
    } else if (*pattern_cmd) {
      cmd_classify_pattern(cfg, in, out);
    } else if (*train_cmd) {
      cmd_train(cfg, in, out, err);
    } else if (*eval_cmd) {
      cmd_eval(cfg, in, out);
    } else if (*stats_cmd) {
      cmd_stats(cfg, in, out);
    } else if (*gen_cmd) {
      cmd_gen_embeddings(cfg, in, out);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace thaimisp
