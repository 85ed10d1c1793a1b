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

#ifndef HEADLINE_RANK_EVALUATION_H_
#define HEADLINE_RANK_EVALUATION_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "headline_rank/ensemble.h"
#include "headline_rank/label.h"
#include "headline_rank/pair_dataset.h"

namespace headline_rank {

// Agreement weights indexed [gold][predicted] over {Left, Right, Draw}.
using WeightMatrix = std::array<std::array<double, 3>, 3>;

inline constexpr WeightMatrix kAgreementWeights = {{
    {1.0, 0.0, 0.5},
    {0.0, 1.0, 0.5},
    {0.5, 0.5, 1.0},
}};

// Row/column of a non-Bad label in the weight and confusion matrices.
std::size_t LabelIndex(Label label);

// Mean agreement weight over rows whose gold label is not Bad. Throws on a
// length mismatch, on a Bad prediction, and when every gold label is Bad.
double WeightedAccuracy(std::span<const Label> gold,
                        std::span<const Label> pred);

using ConfusionMatrix = std::array<std::array<std::size_t, 3>, 3>;

// Counts [gold][predicted]; Bad gold rows dropped.
ConfusionMatrix Confusion(std::span<const Label> gold,
                          std::span<const Label> pred);

struct ErrorExample {
  std::size_t index = 0;  // position in the dataset
  Prediction prediction;
  double margin = 0.0;  // |r_right - r_left|
};

// Records with gold Left predicted Right or vice versa, largest margin
// first, at most `limit` of them. Ties keep dataset order.
std::vector<ErrorExample> ErrorReport(const PairDataset& dataset,
                                      std::span<const Prediction> predictions,
                                      std::size_t limit);

struct EvaluationReport {
  double weighted_accuracy = 0.0;
  std::size_t retained_rows = 0;
  ConfusionMatrix confusion{};
  std::vector<ErrorExample> errors;
};

// Joins gold records and predictions by position. Throws when the lengths
// or the ids of a row disagree.
EvaluationReport Evaluate(const PairDataset& gold,
                          std::span<const Prediction> predictions,
                          std::size_t error_limit);

void PrintReport(const EvaluationReport& report, std::ostream& out);
void WriteReportJson(const EvaluationReport& report, std::ostream& out);

}  // namespace headline_rank

#endif  // HEADLINE_RANK_EVALUATION_H_
