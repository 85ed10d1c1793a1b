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

#ifndef HEADLINE_RANK_TRAINER_H_
#define HEADLINE_RANK_TRAINER_H_

#include <cstddef>
#include <cstdint>
#include <functional>

#include "headline_rank/ranker_model.h"
#include "headline_rank/training_pairs.h"

namespace headline_rank {

struct HyperParams {
  int n_trees = 1000;
  int max_depth = 6;
  double learning_rate = 0.1;
  int n_bins = 256;
  int min_samples_leaf = 20;
  // 0 disables early stopping.
  int early_stop_rounds = 50;
  double l2_leaf_reg = 3.0;
  std::uint64_t seed = 42;

  // Throws on out-of-range values.
  void Validate() const;
};

struct IterationLog {
  std::size_t iteration = 0;  // trees in the ensemble
  double train_loss = 0.0;
  double valid_loss = 0.0;
  double valid_weighted_accuracy = 0.0;
};

struct TrainOptions {
  int num_threads = 1;
  // Called after every boosting iteration.
  std::function<void(const IterationLog&)> on_iteration;
};

// Pairwise-logistic gradient boosting. Each iteration fits one depth-limited
// tree to the Newton targets of the current scores over histogram bins fit
// once on the training features. The returned model is truncated to the
// tree count with the lowest validation loss. With an empty validation set
// the training loss is monitored instead.
//
// The result depends only on the inputs and params, not on num_threads.
RankerModel Train(const TrainingPairSet& train_set,
                  const TrainingPairSet& valid_set, const HyperParams& params,
                  const TrainOptions& options = {});

// Fraction of pairs whose positive element scores strictly higher.
double PairOrderingAccuracy(std::span<const double> scores,
                            std::span<const RankPair> pairs);

}  // namespace headline_rank

#endif  // HEADLINE_RANK_TRAINER_H_
