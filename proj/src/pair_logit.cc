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

#include "headline_rank/pair_logit.h"

#include <cmath>

#include "headline_rank/error.h"

namespace headline_rank {
namespace {

void CheckPairs(std::span<const double> scores,
                std::span<const RankPair> pairs) {
  for (const RankPair& p : pairs) {
    if (p.positive >= scores.size() || p.negative >= scores.size()) {
      throw Error("pair index out of range");
    }
  }
}

// -log(sigmoid(x)) = log(1 + exp(-x)).
double Softplus(double neg_x) {
  return neg_x > 0 ? neg_x + std::log1p(std::exp(-neg_x))
                   : std::log1p(std::exp(neg_x));
}

}  // namespace

double Sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double PairLogitLoss(std::span<const double> scores,
                     std::span<const RankPair> pairs) {
  CheckPairs(scores, pairs);
  double loss = 0.0;
  for (const RankPair& p : pairs) {
    loss += Softplus(-(scores[p.positive] - scores[p.negative]));
  }
  return loss;
}

PairGradients PairLogitGradients(std::span<const double> scores,
                                 std::span<const RankPair> pairs) {
  CheckPairs(scores, pairs);
  PairGradients out{std::vector<double>(scores.size(), 0.0),
                    std::vector<double>(scores.size(), 0.0)};
  for (const RankPair& p : pairs) {
    const double diff = scores[p.positive] - scores[p.negative];
    const double s = Sigmoid(diff);
    // 1 - s computed directly avoids cancellation when s is close to 1.
    const double one_minus_s = Sigmoid(-diff);
    const double h = s * one_minus_s;
    out.grad[p.positive] -= one_minus_s;
    out.grad[p.negative] += one_minus_s;
    out.hess[p.positive] += h;
    out.hess[p.negative] += h;
  }
  return out;
}

}  // namespace headline_rank
