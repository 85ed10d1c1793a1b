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

#ifndef HEADLINE_RANK_RANKER_MODEL_H_
#define HEADLINE_RANK_RANKER_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace headline_rank {

// A node is internal when `feature >= 0`: rows with x[feature] <= threshold
// go to `left`, others to `right`. Otherwise it is a leaf worth `value`.
struct TreeNode {
  std::int32_t feature = -1;
  float threshold = 0.0f;
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  double value = 0.0;

  bool is_leaf() const { return feature < 0; }
  bool operator==(const TreeNode&) const = default;
};

// Nodes in pre-order; node 0 is the root and every child index is larger
// than its parent's, which keeps the structure acyclic.
struct RegressionTree {
  std::vector<TreeNode> nodes;

  // Index of the leaf reached by `x`.
  std::size_t Route(std::span<const float> x) const;
  double Predict(std::span<const float> x) const {
    return nodes[Route(x)].value;
  }
};

struct TrainingHistory {
  // Entry t describes the ensemble made of the first t trees.
  std::vector<double> train_loss;
  std::vector<double> valid_loss;
  std::vector<double> valid_weighted_accuracy;
};

// Additive tree ensemble scoring one sentence vector. Leaf values already
// include the learning rate.
class RankerModel {
 public:
  static constexpr int kFormatVersion = 1;

  std::size_t dim = 0;
  double base_score = 0.0;
  double learning_rate = 0.1;
  std::vector<RegressionTree> trees;
  std::size_t best_iteration = 0;
  TrainingHistory history;

  // base_score + sum of routed leaf values, accumulated in tree order.
  // Throws on a dimension mismatch.
  double Score(std::span<const float> x) const;

  // Throws if a tree references a feature >= dim or an invalid child.
  void Validate() const;
};

// JSON model file: keys version, dim, base_score, learning_rate,
// best_iteration, trees (node = [feature, threshold, left, right] or
// [null, value]) and an optional history object.
void WriteModel(const RankerModel& model, std::ostream& out);
RankerModel ReadModel(std::istream& in);
void SaveModel(const RankerModel& model, const std::filesystem::path& path);
RankerModel LoadModel(const std::filesystem::path& path);

}  // namespace headline_rank

#endif  // HEADLINE_RANK_RANKER_MODEL_H_
