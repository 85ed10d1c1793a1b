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

#ifndef HEADLINE_RANK_PAIR_LOGIT_H_
#define HEADLINE_RANK_PAIR_LOGIT_H_

#include <span>
#include <vector>

#include "headline_rank/training_pairs.h"

namespace headline_rank {

// Per-document first and second derivatives of the pairwise logistic loss.
struct PairGradients {
  std::vector<double> grad;
  std::vector<double> hess;
};

// Numerically stable logistic function.
double Sigmoid(double x);

// Sum over pairs of -log(sigmoid(a_p - a_n)), evaluated as softplus so that
// differences of +-1e3 stay finite. An empty pair list gives 0.
double PairLogitLoss(std::span<const double> scores,
                     std::span<const RankPair> pairs);

// For each pair with s = sigmoid(a_p - a_n):
//   grad[p] -= 1 - s, grad[n] += 1 - s, hess[p] += s(1-s), hess[n] += s(1-s).
// Documents outside every pair get zeros.
PairGradients PairLogitGradients(std::span<const double> scores,
                                 std::span<const RankPair> pairs);

}  // namespace headline_rank

#endif  // HEADLINE_RANK_PAIR_LOGIT_H_
