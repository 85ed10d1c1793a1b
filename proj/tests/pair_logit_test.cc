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
#include <random>

#include "gtest/gtest.h"
#include "headline_rank/error.h"
#include "oracles.h"

namespace headline_rank {
namespace {

using testing::LossFiniteDifferences;
using testing::RelativeError;

TEST(PairLogitLoss, Examples) {
  const std::vector<RankPair> one = {{0, 1}};
  EXPECT_NEAR(PairLogitLoss(std::vector<double>{0.3, 0.3}, one), std::log(2.0),
              1e-12);
  EXPECT_NEAR(PairLogitLoss(std::vector<double>{std::log(3.0), 0.0}, one),
              std::log(4.0 / 3.0), 1e-12);
  const std::vector<RankPair> two = {{0, 1}, {0, 1}};
  EXPECT_NEAR(PairLogitLoss(std::vector<double>{1.0, 1.0}, two),
              2 * std::log(2.0), 1e-12);
  EXPECT_EQ(PairLogitLoss(std::vector<double>{1.0}, {}), 0.0);
}

TEST(PairLogitLoss, StableForLargeDifferences) {
  const std::vector<RankPair> one = {{0, 1}};
  const double good = PairLogitLoss(std::vector<double>{1000.0, 0.0}, one);
  const double bad = PairLogitLoss(std::vector<double>{0.0, 1000.0}, one);
  EXPECT_TRUE(std::isfinite(good));
  EXPECT_TRUE(std::isfinite(bad));
  EXPECT_GE(good, 0.0);
  EXPECT_LT(good, 1e-300);
  EXPECT_NEAR(bad, 1000.0, 1e-9);
}

TEST(PairLogitLoss, RejectsBadIndices) {
  EXPECT_THROW(PairLogitLoss(std::vector<double>{0.0}, std::vector<RankPair>{{0, 1}}),
               Error);
  EXPECT_THROW(
      PairLogitGradients(std::vector<double>{0.0}, std::vector<RankPair>{{2, 0}}),
      Error);
}

TEST(PairLogitGradients, Examples) {
  const auto g =
      PairLogitGradients(std::vector<double>{0.0, 0.0, 5.0}, {{RankPair{0, 1}}});
  EXPECT_DOUBLE_EQ(g.grad[0], -0.5);
  EXPECT_DOUBLE_EQ(g.grad[1], 0.5);
  EXPECT_DOUBLE_EQ(g.hess[0], 0.25);
  EXPECT_DOUBLE_EQ(g.hess[1], 0.25);
  EXPECT_EQ(g.grad[2], 0.0);
  EXPECT_EQ(g.hess[2], 0.0);

  const auto sat =
      PairLogitGradients(std::vector<double>{800.0, 0.0}, {{RankPair{0, 1}}});
  EXPECT_LT(std::abs(sat.grad[0]), 1e-300);
  EXPECT_LT(sat.hess[0], 1e-300);
  EXPECT_GE(sat.hess[0], 0.0);
}

struct Problem {
  std::vector<double> scores;
  std::vector<RankPair> pairs;
};

Problem RandomProblem(std::mt19937_64& rng, std::size_t docs,
                      std::size_t n_pairs, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  std::uniform_int_distribution<std::size_t> pick(0, docs - 1);
  Problem p;
  for (std::size_t i = 0; i < docs; ++i) p.scores.push_back(normal(rng));
  while (p.pairs.size() < n_pairs) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a != b) p.pairs.push_back({a, b});
  }
  return p;
}

TEST(PairLogitProperty, LossIsPositiveAndMonotone) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal(0.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double d = normal(rng);
    const double lo = PairLogitLoss(std::vector<double>{d, 0.0}, {{RankPair{0, 1}}});
    const double hi =
        PairLogitLoss(std::vector<double>{d + 0.5, 0.0}, {{RankPair{0, 1}}});
    EXPECT_GT(lo, 0.0);
    EXPECT_LT(hi, lo);
  }
}

TEST(PairLogitProperty, TranslationInvariant) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    Problem p = RandomProblem(rng, 10, 15, 2.0);
    const double loss = PairLogitLoss(p.scores, p.pairs);
    const PairGradients g = PairLogitGradients(p.scores, p.pairs);
    for (double& s : p.scores) s += 3.75;
    EXPECT_NEAR(PairLogitLoss(p.scores, p.pairs), loss, 1e-12);
    const PairGradients h = PairLogitGradients(p.scores, p.pairs);
    for (std::size_t i = 0; i < p.scores.size(); ++i) {
      EXPECT_NEAR(h.grad[i], g.grad[i], 1e-12);
      EXPECT_NEAR(h.hess[i], g.hess[i], 1e-12);
    }
  }
}

TEST(PairLogitProperty, PerPairContributionsBalance) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Problem p = RandomProblem(rng, 2, 1, 4.0);
    const PairGradients g = PairLogitGradients(p.scores, p.pairs);
    const RankPair& pair = p.pairs[0];
    EXPECT_NEAR(g.grad[pair.positive] + g.grad[pair.negative], 0.0, 1e-15);
    EXPECT_LE(g.grad[pair.positive], 0.0);
    EXPECT_GE(g.hess[pair.positive], 0.0);
    EXPECT_LE(g.hess[pair.positive], 0.25);
  }
  const Problem many = RandomProblem(rng, 20, 30, 1.0);
  const PairGradients g = PairLogitGradients(many.scores, many.pairs);
  double total = 0.0;
  for (const double v : g.grad) total += v;
  EXPECT_NEAR(total, 0.0, 1e-12);
}

TEST(PairLogitProperty, MatchesFiniteDifferences) {
  std::mt19937_64 rng(14);
  const double h = 1e-4;
  for (int trial = 0; trial < 100; ++trial) {
    const Problem p = RandomProblem(rng, 20, 30, 1.0);
    const PairGradients g = PairLogitGradients(p.scores, p.pairs);
    const auto fd = LossFiniteDifferences(p.scores, p.pairs, h);
    EXPECT_LT(RelativeError(g.grad, fd.grad), 1e-6);
    EXPECT_LT(RelativeError(g.hess, fd.hess), 1e-4);
  }
}

}  // namespace
}  // namespace headline_rank
