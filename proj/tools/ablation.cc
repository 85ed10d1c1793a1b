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

#include <cstdio>
#include <ostream>

#include "cli.h"
#include "headline_rank/embedding_store.h"
#include "headline_rank/error.h"
#include "headline_rank/evaluation.h"
#include "headline_rank/pair_dataset.h"
#include "headline_rank/parallel.h"

namespace headline_rank::cli {

std::vector<AblationRow> RunAblation(const AblationOptions& options,
                                     std::ostream& log) {
  if (options.token_files.empty()) throw Error("no token files given");
  if (options.methods.empty()) throw Error("no pooling methods given");
  if (options.repeats < 1) throw Error("repeats must be positive");
  options.params.Validate();

  const PairDataset pairs = LoadPairs(options.pairs);

  struct Representation {
    std::string name;
    std::shared_ptr<const EmbeddingStore> store;
  };
  std::vector<Representation> reps;
  for (const LayerFile& file : options.token_files) {
    for (const PoolingMethod method : options.methods) {
      reps.push_back({file.label + " " + std::string(PoolingMethodName(method)),
                      std::make_shared<const EmbeddingStore>(
                          PoolTokenFile(file.path, method))});
    }
  }

  std::vector<AblationRow> rows(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    rows[i].representation = reps[i].name;
  }

  ThreadPool threads(std::max(1, options.num_threads));
  for (int repeat = 0; repeat < options.repeats; ++repeat) {
    // Every representation of a repeat sees the same three-way split.
    const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(repeat);
    auto [rest, test] = SplitValidation(pairs, options.test_fraction, seed);
    auto [train, valid] =
        SplitValidation(rest, options.valid_fraction, seed ^ 0x9e3779b97f4a7c15ULL);
    HyperParams params = options.params;
    params.seed = seed;

    for (std::size_t i = 0; i < reps.size(); ++i) {
      const Representation& rep = reps[i];
      const TrainingPairSet train_set =
          BuildTrainingPairs(train, *rep.store, options.draw_policy);
      const TrainingPairSet valid_set =
          BuildTrainingPairs(valid, *rep.store, options.draw_policy);
      TrainOptions train_options;
      train_options.num_threads = options.num_threads;
      auto model = std::make_shared<const RankerModel>(
          Train(train_set, valid_set, params, train_options));

      BlendSpec spec;
      spec.members.push_back({model, rep.store, rep.name});
      spec.draw_threshold = options.draw_threshold;
      const std::vector<Prediction> predictions =
          PredictDataset(spec, test, &threads);
      std::vector<Label> gold, pred;
      for (const Prediction& p : predictions) {
        gold.push_back(p.record.label);
        pred.push_back(p.predicted);
      }
      const double accuracy = WeightedAccuracy(gold, pred);
      rows[i].accuracy.push_back(accuracy);

      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "run %d  %-24s trees=%zu  accuracy=%.4f\n", repeat + 1,
                    rep.name.c_str(), model->trees.size(), accuracy);
      log << buf;
    }
  }
  for (AblationRow& row : rows) {
    double sum = 0.0;
    for (const double a : row.accuracy) sum += a;
    row.mean = sum / static_cast<double>(row.accuracy.size());
  }
  return rows;
}

void PrintAblationGrid(const std::vector<AblationRow>& rows,
                       std::ostream& out) {
  if (rows.empty()) return;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%-28s", "representation");
  out << buf;
  for (std::size_t r = 0; r < rows.front().accuracy.size(); ++r) {
    std::snprintf(buf, sizeof(buf), " %8s", ("run" + std::to_string(r + 1)).c_str());
    out << buf;
  }
  out << "     mean\n";
  for (const AblationRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%-28s", row.representation.c_str());
    out << buf;
    for (const double a : row.accuracy) {
      std::snprintf(buf, sizeof(buf), " %8.2f", 100.0 * a);
      out << buf;
    }
    std::snprintf(buf, sizeof(buf), " %8.2f\n", 100.0 * row.mean);
    out << buf;
  }
}

}  // namespace headline_rank::cli
