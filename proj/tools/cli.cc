/*
 * Copyright 2026 The headline-rank Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.h"

#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>

#include "CLI11.hpp"
#include "headline_rank/embedding_store.h"
#include "headline_rank/error.h"
#include "headline_rank/evaluation.h"
#include "headline_rank/pair_dataset.h"
#include "headline_rank/parallel.h"
#include "headline_rank/ranker_model.h"
#include "json.hpp"

namespace headline_rank::cli {
namespace {

// Flag combinations CLI11 cannot validate on its own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void RequireExisting(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw Error("no such file: " + path.string());
  }
}

struct PoolArgs {
  std::string token_file;
  std::string method = "mean";
  std::string out;
};

struct HyperParamArgs {
  HyperParams params;
  std::string draw_policy = "exclude";

  void Register(CLI::App& cmd) {
    cmd.add_option("--trees", params.n_trees, "boosting iterations")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--depth", params.max_depth, "maximum tree depth")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--lr", params.learning_rate, "learning rate")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--bins", params.n_bins, "histogram bins per feature")
        ->check(CLI::Range(2, 256));
    cmd.add_option("--min-leaf", params.min_samples_leaf,
                   "minimum documents per leaf")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--early-stop", params.early_stop_rounds,
                   "stop after this many non-improving iterations (0 = off)")
        ->check(CLI::NonNegativeNumber);
    cmd.add_option("--l2", params.l2_leaf_reg, "L2 leaf regularization")
        ->check(CLI::NonNegativeNumber);
    cmd.add_option("--draw-policy", draw_policy,
                   "training role of draw pairs")
        ->check(CLI::IsMember({"exclude", "both"}));
  }

  DrawPolicy policy() const {
    return draw_policy == "both" ? DrawPolicy::kBothDirections
                                 : DrawPolicy::kExclude;
  }
};

struct TrainArgs {
  std::string pairs;
  std::string embeddings;
  double valid_frac = 0.2;
  std::uint64_t seed = 42;
  std::string out;
  int log_every = 100;
  HyperParamArgs hyper;
};

struct PredictArgs {
  std::string pairs;
  std::vector<std::string> models;
  std::vector<std::string> embeddings;
  std::string normalize = "zscore";
  double draw_threshold = 0.1;
  std::string out;
};

struct EvaluateArgs {
  std::string pairs;
  std::string pred;
  std::size_t errors = 0;
  std::string report;
};

struct AblateArgs {
  std::string pairs;
  std::vector<std::string> token_files;
  std::vector<std::string> methods = {"mean"};
  std::uint64_t seed = 42;
  int repeats = 1;
  double test_frac = 0.2;
  double valid_frac = 0.2;
  double draw_threshold = 0.1;
  std::string out;
  HyperParamArgs hyper;
};

int CmdPool(const PoolArgs& args, std::ostream& out) {
  RequireExisting(args.token_file);
  const PoolSummary summary = PoolFile(
      args.token_file, *ParsePoolingMethod(args.method), args.out);
  out << "pooled " << summary.n_rows << " rows, dim " << summary.dim << " -> "
      << args.out << '\n';
  return kExitOk;
}

int CmdTrain(const TrainArgs& args, std::ostream& out) {
  RequireExisting(args.pairs);
  RequireExisting(args.embeddings);
  const PairDataset pairs = LoadPairs(args.pairs);
  const EmbeddingStore store = LoadEmbeddings(args.embeddings);
  const auto [train, valid] =
      SplitValidation(pairs, args.valid_frac, args.seed);
  const DrawPolicy policy = args.hyper.policy();
  const TrainingPairSet train_set = BuildTrainingPairs(train, store, policy);
  const TrainingPairSet valid_set = BuildTrainingPairs(valid, store, policy);
  out << "training on " << train_set.pairs.size() << " pairs over "
      << train_set.documents() << " headlines, validating on "
      << valid_set.pairs.size() << " pairs\n";

  HyperParams params = args.hyper.params;
  params.seed = args.seed;
  TrainOptions options;
  options.num_threads = ThreadCountFromEnv();
  options.on_iteration = [&](const IterationLog& log) {
    if (args.log_every <= 0 || log.iteration == 0 ||
        log.iteration % static_cast<std::size_t>(args.log_every) != 0) {
      return;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "iter %5zu  train_loss %.6f  valid_loss %.6f  valid_wacc "
                  "%.4f\n",
                  log.iteration, log.train_loss, log.valid_loss,
                  log.valid_weighted_accuracy);
    out << buf;
  };
  const RankerModel model = Train(train_set, valid_set, params, options);
  SaveModel(model, args.out);
  out << "best_iteration " << model.best_iteration << " (valid_loss "
      << model.history.valid_loss[model.best_iteration] << ") -> " << args.out
      << '\n';
  return kExitOk;
}

int CmdPredict(const PredictArgs& args, std::ostream& out) {
  if (args.models.size() != args.embeddings.size()) {
    throw UsageError("--model and --embeddings need the same number of "
                     "entries");
  }
  RequireExisting(args.pairs);
  for (const auto& p : args.models) RequireExisting(p);
  for (const auto& p : args.embeddings) RequireExisting(p);

  BlendSpec spec;
  spec.normalization = *ParseNormalization(args.normalize);
  spec.draw_threshold = args.draw_threshold;
  for (std::size_t i = 0; i < args.models.size(); ++i) {
    spec.members.push_back(
        {std::make_shared<const RankerModel>(LoadModel(args.models[i])),
         std::make_shared<const EmbeddingStore>(
             LoadEmbeddings(args.embeddings[i])),
         args.models[i]});
  }
  const PairDataset pairs = LoadPairs(args.pairs);
  ThreadPool threads(ThreadCountFromEnv());
  const std::vector<Prediction> predictions =
      PredictDataset(spec, pairs, &threads);
  SavePredictions(predictions, args.out);
  out << "wrote " << predictions.size() << " predictions from "
      << spec.members.size() << " member(s) -> " << args.out << '\n';
  return kExitOk;
}

int CmdEvaluate(const EvaluateArgs& args, std::ostream& out) {
  RequireExisting(args.pairs);
  RequireExisting(args.pred);
  const PairDataset gold = LoadPairs(args.pairs);
  const std::vector<Prediction> predictions = LoadPredictions(args.pred);
  const EvaluationReport report = Evaluate(gold, predictions, args.errors);
  PrintReport(report, out);
  if (!args.report.empty()) {
    std::ofstream file(args.report);
    if (!file) throw Error("cannot write " + args.report);
    WriteReportJson(report, file);
  }
  return kExitOk;
}

int CmdAblate(const AblateArgs& args, std::ostream& out) {
  AblationOptions options;
  options.pairs = args.pairs;
  RequireExisting(options.pairs);
  for (const std::string& spec : args.token_files) {
    LayerFile file;
    if (const auto eq = spec.find('='); eq != std::string::npos) {
      file.label = spec.substr(0, eq);
      file.path = spec.substr(eq + 1);
    } else {
      file.path = spec;
      file.label = file.path.stem().string();
    }
    if (file.label.empty() || file.path.empty()) {
      throw UsageError("token file entries are LABEL=PATH or PATH");
    }
    RequireExisting(file.path);
    options.token_files.push_back(std::move(file));
  }
  options.methods.clear();
  for (const std::string& m : args.methods) {
    options.methods.push_back(*ParsePoolingMethod(m));
  }
  options.params = args.hyper.params;
  options.draw_policy = args.hyper.policy();
  options.test_fraction = args.test_frac;
  options.valid_fraction = args.valid_frac;
  options.draw_threshold = args.draw_threshold;
  options.repeats = args.repeats;
  options.seed = args.seed;
  options.num_threads = ThreadCountFromEnv();

  const std::vector<AblationRow> rows = RunAblation(options, out);
  out << '\n';
  PrintAblationGrid(rows, out);
  if (!args.out.empty()) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const AblationRow& row : rows) {
      doc.push_back({{"representation", row.representation},
                     {"accuracy", row.accuracy},
                     {"mean", row.mean}});
    }
    std::ofstream file(args.out);
    if (!file) throw Error("cannot write " + args.out);
    file << doc.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Pairwise headline ranking: pooling, training, blending and "
               "evaluation"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  PoolArgs pool;
  auto* pool_cmd = app.add_subcommand("pool", "pool token embeddings (HST1) "
                                              "into sentence vectors (HSE1)");
  pool_cmd->add_option("token_file", pool.token_file, "HST1 input")
      ->required();
  pool_cmd->add_option("--method", pool.method, "mean or cls")
      ->check(CLI::IsMember({"mean", "cls"}));
  pool_cmd->add_option("--out", pool.out, "HSE1 output")->required();

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "train one pairwise ranker");
  train_cmd->add_option("--pairs", train.pairs, "pairs JSONL")->required();
  train_cmd->add_option("--embeddings", train.embeddings, "HSE1 file")
      ->required();
  train_cmd->add_option("--valid-frac", train.valid_frac,
                        "fraction of pairs held out for best-iteration "
                        "selection")
      ->check(CLI::Range(0.0, 1.0));
  train_cmd->add_option("--seed", train.seed, "random seed");
  train_cmd->add_option("--out", train.out, "model JSON output")->required();
  train_cmd->add_option("--log-every", train.log_every,
                        "print losses every N iterations (0 = never)");
  train.hyper.Register(*train_cmd);

  PredictArgs predict;
  auto* predict_cmd =
      app.add_subcommand("predict", "blend one or more rankers over pairs");
  predict_cmd->add_option("--pairs", predict.pairs, "pairs JSONL")->required();
  predict_cmd->add_option("--model", predict.models, "m1,m2,...")
      ->required()
      ->delimiter(',');
  predict_cmd->add_option("--embeddings", predict.embeddings, "e1,e2,...")
      ->required()
      ->delimiter(',');
  predict_cmd->add_option("--normalize", predict.normalize, "zscore or none")
      ->check(CLI::IsMember({"zscore", "none"}));
  predict_cmd->add_option("--draw-threshold", predict.draw_threshold,
                          "|r_right - r_left| at or below this is a draw")
      ->check(CLI::NonNegativeNumber);
  predict_cmd->add_option("--out", predict.out, "predictions JSONL")
      ->required();

  EvaluateArgs evaluate;
  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "weighted accuracy of predictions");
  evaluate_cmd->add_option("--pairs", evaluate.pairs, "gold pairs JSONL")
      ->required();
  evaluate_cmd->add_option("--pred", evaluate.pred, "predictions JSONL")
      ->required();
  evaluate_cmd->add_option("--errors", evaluate.errors,
                           "list this many left/right confusions");
  evaluate_cmd->add_option("--report", evaluate.report, "JSON report output");

  AblateArgs ablate;
  auto* ablate_cmd = app.add_subcommand(
      "ablate", "compare sentence representations on a held-out split");
  ablate_cmd->add_option("--pairs", ablate.pairs, "pairs JSONL")->required();
  ablate_cmd->add_option("--token-files", ablate.token_files,
                         "LABEL=PATH,... HST1 files, one per layer")
      ->required()
      ->delimiter(',');
  ablate_cmd->add_option("--methods", ablate.methods, "mean,cls")
      ->delimiter(',')
      ->check(CLI::IsMember({"mean", "cls"}));
  ablate_cmd->add_option("--seed", ablate.seed, "random seed");
  ablate_cmd->add_option("--repeats", ablate.repeats,
                         "training runs per representation")
      ->check(CLI::PositiveNumber);
  ablate_cmd->add_option("--test-frac", ablate.test_frac,
                         "fraction of pairs held out for scoring")
      ->check(CLI::Range(0.0, 1.0));
  ablate_cmd->add_option("--valid-frac", ablate.valid_frac,
                         "fraction of the remainder used for validation")
      ->check(CLI::Range(0.0, 1.0));
  ablate_cmd->add_option("--draw-threshold", ablate.draw_threshold,
                         "draw band on the blended rank difference")
      ->check(CLI::NonNegativeNumber);
  ablate_cmd->add_option("--out", ablate.out, "JSON grid output");
  ablate.hyper.Register(*ablate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*pool_cmd) return CmdPool(pool, out);
    if (*train_cmd) return CmdTrain(train, out);
    if (*predict_cmd) return CmdPredict(predict, out);
    if (*evaluate_cmd) return CmdEvaluate(evaluate, out);
    if (*ablate_cmd) return CmdAblate(ablate, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace headline_rank::cli
