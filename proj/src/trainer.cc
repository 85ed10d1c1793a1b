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

#include "headline_rank/trainer.h"

#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <string>

#include "headline_rank/binning.h"
#include "headline_rank/ensemble.h"
#include "headline_rank/error.h"
#include "headline_rank/evaluation.h"
#include "headline_rank/pair_logit.h"
#include "headline_rank/parallel.h"

namespace headline_rank {
namespace {

// Gradient statistics for every (feature, bin), flattened feature-major.
struct Histogram {
  std::vector<double> grad;
  std::vector<double> hess;
  std::vector<std::uint32_t> count;

  explicit Histogram(std::size_t total_bins)
      : grad(total_bins, 0.0), hess(total_bins, 0.0), count(total_bins, 0) {}
};

struct Split {
  std::size_t feature = 0;
  std::size_t bin = 0;  // rows with bin <= this go left
  double gain = 0.0;
};

class TreeGrower {
 public:
  TreeGrower(const HyperParams& params, const FeatureBinner& binner,
             std::span<const std::uint8_t> bins, std::size_t rows,
             ThreadPool& pool)
      : params_(params), binner_(binner), bins_(bins), rows_(rows),
        pool_(pool) {
    offsets_.resize(binner.dim() + 1, 0);
    for (std::size_t f = 0; f < binner.dim(); ++f) {
      offsets_[f + 1] = offsets_[f] + binner.num_bins(f);
    }
  }

  // Fits one tree to the current gradients. `leaf_of_row` receives the leaf
  // node index of every training row.
  RegressionTree Grow(std::span<const double> grad,
                      std::span<const double> hess,
                      std::vector<std::uint32_t>& leaf_of_row) {
    grad_ = grad;
    hess_ = hess;
    leaf_of_row_ = &leaf_of_row;
    leaf_of_row.assign(rows_, 0);
    tree_ = RegressionTree{};
    std::vector<std::uint32_t> all(rows_);
    for (std::size_t r = 0; r < rows_; ++r) all[r] = static_cast<std::uint32_t>(r);
    Histogram hist = Build(all);
    GrowNode(all, hist, 0);
    return std::move(tree_);
  }

 private:
  Histogram Build(std::span<const std::uint32_t> rows) {
    Histogram hist(offsets_.back());
    pool_.ParallelFor(binner_.dim(), [&](std::size_t f) {
      const std::uint8_t* column = bins_.data() + f * rows_;
      const std::size_t base = offsets_[f];
      for (const std::uint32_t r : rows) {
        const std::size_t slot = base + column[r];
        hist.grad[slot] += grad_[r];
        hist.hess[slot] += hess_[r];
        ++hist.count[slot];
      }
    });
    return hist;
  }

  // parent - child, with empty bins forced to exact zeros.
  static Histogram Subtract(const Histogram& parent, const Histogram& child) {
    Histogram out(parent.grad.size());
    for (std::size_t i = 0; i < parent.grad.size(); ++i) {
      out.count[i] = parent.count[i] - child.count[i];
      if (out.count[i] == 0) continue;
      out.grad[i] = parent.grad[i] - child.grad[i];
      out.hess[i] = std::max(0.0, parent.hess[i] - child.hess[i]);
    }
    return out;
  }

  double Score(double g, double h) const {
    const double denom = h + params_.l2_leaf_reg;
    return denom > 0.0 ? g * g / denom : 0.0;
  }

  std::optional<Split> FindBestSplit(const Histogram& hist, double total_g,
                                     double total_h, std::size_t total_n) {
    const double parent_score = Score(total_g, total_h);
    const auto min_leaf = static_cast<std::size_t>(params_.min_samples_leaf);
    std::vector<std::optional<Split>> per_feature(binner_.dim());
    pool_.ParallelFor(binner_.dim(), [&](std::size_t f) {
      const std::size_t base = offsets_[f];
      const std::size_t n_bins = binner_.num_bins(f);
      double left_g = 0.0, left_h = 0.0;
      std::size_t left_n = 0;
      std::optional<Split> best;
      // The last bin has no upper edge, so it cannot end a left side.
      for (std::size_t b = 0; b + 1 < n_bins; ++b) {
        left_g += hist.grad[base + b];
        left_h += hist.hess[base + b];
        left_n += hist.count[base + b];
        const std::size_t right_n = total_n - left_n;
        if (left_n < min_leaf) continue;
        if (right_n < min_leaf) break;
        const double gain = Score(left_g, left_h) +
                            Score(total_g - left_g, total_h - left_h) -
                            parent_score;
        if (gain > 0.0 && (!best || gain > best->gain)) {
          best = Split{f, b, gain};
        }
      }
      per_feature[f] = best;
    });
    // Strict comparison in feature order: lowest feature wins ties.
    std::optional<Split> best;
    for (const auto& s : per_feature) {
      if (s && (!best || s->gain > best->gain)) best = s;
    }
    return best;
  }

  std::uint32_t GrowNode(std::vector<std::uint32_t>& rows,
                         const Histogram& hist, int depth) {
    double g = 0.0, h = 0.0;
    for (const std::uint32_t r : rows) {
      g += grad_[r];
      h += hess_[r];
    }
    const auto index = static_cast<std::uint32_t>(tree_.nodes.size());
    tree_.nodes.emplace_back();

    std::optional<Split> split;
    if (depth < params_.max_depth &&
        rows.size() >= 2 * static_cast<std::size_t>(params_.min_samples_leaf)) {
      split = FindBestSplit(hist, g, h, rows.size());
    }
    if (!split) {
      const double denom = h + params_.l2_leaf_reg;
      tree_.nodes[index].value =
          denom > 0.0 ? -g / denom * params_.learning_rate : 0.0;
      for (const std::uint32_t r : rows) (*leaf_of_row_)[r] = index;
      return index;
    }

    const std::uint8_t* column = bins_.data() + split->feature * rows_;
    std::vector<std::uint32_t> left, right;
    for (const std::uint32_t r : rows) {
      (column[r] <= split->bin ? left : right).push_back(r);
    }
    rows.clear();
    rows.shrink_to_fit();

    std::optional<Histogram> left_hist, right_hist;
    if (left.size() <= right.size()) {
      left_hist.emplace(Build(left));
      right_hist.emplace(Subtract(hist, *left_hist));
    } else {
      right_hist.emplace(Build(right));
      left_hist.emplace(Subtract(hist, *right_hist));
    }

    tree_.nodes[index].feature = static_cast<std::int32_t>(split->feature);
    tree_.nodes[index].threshold = binner_.edges(split->feature)[split->bin];
    const std::uint32_t left_index = GrowNode(left, *left_hist, depth + 1);
    left_hist.reset();
    const std::uint32_t right_index = GrowNode(right, *right_hist, depth + 1);
    tree_.nodes[index].left = left_index;
    tree_.nodes[index].right = right_index;
    return index;
  }

  const HyperParams& params_;
  const FeatureBinner& binner_;
  std::span<const std::uint8_t> bins_;
  std::size_t rows_;
  ThreadPool& pool_;
  std::vector<std::size_t> offsets_;

  std::span<const double> grad_;
  std::span<const double> hess_;
  std::vector<std::uint32_t>* leaf_of_row_ = nullptr;
  RegressionTree tree_;
};

void CheckPairIndices(const TrainingPairSet& set, const char* name) {
  if (set.features.size() != set.documents() * set.dim) {
    throw Error(std::string(name) + " feature matrix size mismatch");
  }
  for (const RankPair& p : set.pairs) {
    if (p.positive >= set.documents() || p.negative >= set.documents() ||
        p.positive == p.negative) {
      throw Error(std::string(name) + " contains an invalid pair");
    }
  }
}

// Weighted accuracy with every (positive, negative) pair read as a gold
// "left" pair, on z-scored monitor scores.
double MonitorWeightedAccuracy(std::span<const double> scores,
                               std::span<const RankPair> pairs) {
  if (pairs.empty() || scores.empty()) return 0.0;
  const std::vector<double> z = NormalizeScores(scores, Normalization::kZScore);
  std::vector<Label> gold(pairs.size(), Label::kLeft);
  std::vector<Label> pred;
  pred.reserve(pairs.size());
  for (const RankPair& p : pairs) {
    pred.push_back(DecideLabel({z[p.positive], z[p.negative]}, 0.1));
  }
  return WeightedAccuracy(gold, pred);
}

}  // namespace

void HyperParams::Validate() const {
  if (n_trees < 1) throw Error("n_trees must be positive");
  if (max_depth < 1) throw Error("max_depth must be positive");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw Error("learning_rate must be a positive finite number");
  }
  if (n_bins < 2 || n_bins > 256) throw Error("n_bins must lie in [2, 256]");
  if (min_samples_leaf < 1) throw Error("min_samples_leaf must be positive");
  if (early_stop_rounds < 0) {
    throw Error("early_stop_rounds must be non-negative");
  }
  if (!(l2_leaf_reg >= 0.0) || !std::isfinite(l2_leaf_reg)) {
    throw Error("l2_leaf_reg must be a finite non-negative number");
  }
}

double PairOrderingAccuracy(std::span<const double> scores,
                            std::span<const RankPair> pairs) {
  if (pairs.empty()) return 0.0;
  std::size_t correct = 0;
  for (const RankPair& p : pairs) {
    if (scores[p.positive] > scores[p.negative]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(pairs.size());
}

RankerModel Train(const TrainingPairSet& train_set,
                  const TrainingPairSet& valid_set, const HyperParams& params,
                  const TrainOptions& options) {
  params.Validate();
  if (train_set.pairs.empty()) throw Error("no usable training pairs");
  if (train_set.dim == 0) throw Error("training features have dim 0");
  CheckPairIndices(train_set, "training set");
  const bool has_valid = !valid_set.pairs.empty();
  if (has_valid) {
    if (valid_set.dim != train_set.dim) {
      throw Error("validation dim " + std::to_string(valid_set.dim) +
                  " != training dim " + std::to_string(train_set.dim));
    }
    CheckPairIndices(valid_set, "validation set");
  }

  ThreadPool pool(std::max(1, options.num_threads));
  const std::size_t rows = train_set.documents();
  const FeatureBinner binner = FeatureBinner::Fit(
      train_set.features, rows, train_set.dim, params.n_bins, &pool);
  const std::vector<std::uint8_t> bins =
      binner.BinColumns(train_set.features, rows, &pool);

  RankerModel model;
  model.dim = train_set.dim;
  model.base_score = 0.0;
  model.learning_rate = params.learning_rate;

  std::vector<double> train_scores(rows, model.base_score);
  std::vector<double> valid_scores(has_valid ? valid_set.documents() : 0,
                                   model.base_score);
  const std::vector<double>& monitor_scores =
      has_valid ? valid_scores : train_scores;
  const std::vector<RankPair>& monitor_pairs =
      has_valid ? valid_set.pairs : train_set.pairs;

  TrainingHistory& history = model.history;
  auto record = [&](std::size_t iteration) {
    IterationLog log;
    log.iteration = iteration;
    log.train_loss = PairLogitLoss(train_scores, train_set.pairs);
    log.valid_loss = PairLogitLoss(monitor_scores, monitor_pairs);
    log.valid_weighted_accuracy =
        MonitorWeightedAccuracy(monitor_scores, monitor_pairs);
    history.train_loss.push_back(log.train_loss);
    history.valid_loss.push_back(log.valid_loss);
    history.valid_weighted_accuracy.push_back(log.valid_weighted_accuracy);
    if (options.on_iteration) options.on_iteration(log);
  };
  record(0);

  std::size_t best = 0;
  double best_loss = history.valid_loss[0];
  TreeGrower grower(params, binner, bins, rows, pool);
  std::vector<std::uint32_t> leaf_of_row;
  std::vector<RegressionTree> trees;

  for (int it = 1; it <= params.n_trees; ++it) {
    const PairGradients g = PairLogitGradients(train_scores, train_set.pairs);
    RegressionTree tree = grower.Grow(g.grad, g.hess, leaf_of_row);
    for (std::size_t r = 0; r < rows; ++r) {
      train_scores[r] += tree.nodes[leaf_of_row[r]].value;
    }
    pool.ParallelFor(valid_scores.size(), [&](std::size_t i) {
      valid_scores[i] += tree.Predict(valid_set.row(i));
    });
    trees.push_back(std::move(tree));
    record(static_cast<std::size_t>(it));

    const double loss = history.valid_loss.back();
    if (loss < best_loss) {
      best_loss = loss;
      best = static_cast<std::size_t>(it);
    }
    if (params.early_stop_rounds > 0 &&
        static_cast<std::size_t>(it) - best >=
            static_cast<std::size_t>(params.early_stop_rounds)) {
      break;
    }
  }

  trees.resize(best);
  model.trees = std::move(trees);
  model.best_iteration = best;
  return model;
}

}  // namespace headline_rank
