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

#include "headline_rank/ensemble.h"

#include <cmath>
#include <random>
#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "headline_rank/error.h"

namespace headline_rank {
namespace {

using ::testing::DoubleNear;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

// Linear "model": one depth-1 tree per feature is enough to make scores
// distinct; here a single stump on feature 0 plus a constant offset tree.
std::shared_ptr<const RankerModel> StepModel(double low, double high) {
  auto m = std::make_shared<RankerModel>();
  m->dim = 1;
  RegressionTree t;
  t.nodes = {TreeNode{0, 0.5f, 1, 2, 0}, TreeNode{-1, 0, 0, 0, low},
             TreeNode{-1, 0, 0, 0, high}};
  m->trees.push_back(t);
  return m;
}

// Model whose score equals the single input feature, for small integers.
std::shared_ptr<const RankerModel> IdentityModel(int max_value) {
  auto m = std::make_shared<RankerModel>();
  m->dim = 1;
  for (int v = 0; v < max_value; ++v) {
    RegressionTree t;
    t.nodes = {TreeNode{0, v + 0.5f, 1, 2, 0}, TreeNode{-1, 0, 0, 0, 0.0},
               TreeNode{-1, 0, 0, 0, 1.0}};
    m->trees.push_back(t);
  }
  return m;
}

std::shared_ptr<const EmbeddingStore> Store(std::vector<std::string> ids,
                                            std::vector<float> values) {
  return std::make_shared<const EmbeddingStore>(1, std::move(ids),
                                                std::move(values));
}

TEST(NormalizeScores, Examples) {
  EXPECT_THAT(NormalizeScores(std::vector<double>{0, 1, 2},
                              Normalization::kZScore),
              ElementsAre(DoubleNear(-1.224745, 1e-6), DoubleNear(0, 1e-12),
                          DoubleNear(1.224745, 1e-6)));
  EXPECT_THAT(NormalizeScores(std::vector<double>{5, 5, 5},
                              Normalization::kZScore),
              ElementsAre(0, 0, 0));
  EXPECT_THAT(NormalizeScores(std::vector<double>{3, -1, 7},
                              Normalization::kNone),
              ElementsAre(3, -1, 7));
  EXPECT_THROW(NormalizeScores({}, Normalization::kNone), Error);
}

TEST(NormalizeScores, ZScoreMoments) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> normal(3.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(2 + trial % 50);
    for (double& v : x) v = normal(rng);
    const auto z = NormalizeScores(x, Normalization::kZScore);
    double mean = 0, var = 0;
    for (const double v : z) mean += v;
    mean /= z.size();
    for (const double v : z) var += (v - mean) * (v - mean);
    var /= z.size();
    EXPECT_NEAR(mean, 0.0, 1e-6);
    EXPECT_NEAR(var, 1.0, 1e-6);
  }
}

TEST(DecideLabel, Boundaries) {
  EXPECT_EQ(DecideLabel({0.6, 0.4}, 0.1), Label::kLeft);
  EXPECT_EQ(DecideLabel({0.0, 0.05}, 0.1), Label::kDraw);
  EXPECT_EQ(DecideLabel({1.0, 1.0}, 0.0), Label::kDraw);
  EXPECT_EQ(DecideLabel({0.0, 0.2}, 0.1), Label::kRight);
  EXPECT_EQ(DecideLabel({0.0, 0.0}, 0.1), Label::kDraw);
}

TEST(DecideLabelProperty, AntisymmetryAndInvariances) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> normal(0.0, 0.3);
  std::uniform_real_distribution<double> scale(1.0, 10.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const PairScores s{normal(rng), normal(rng)};
    const Label l = DecideLabel(s, 0.1);
    EXPECT_NE(l, Label::kBad);
    EXPECT_EQ(DecideLabel({s.r_right, s.r_left}, 0.1), MirrorLabel(l));
    const double c = 4.0 * normal(rng);
    // Skip shifts whose rounding could move d across the threshold.
    if (std::abs(std::abs(s.r_right - s.r_left) - 0.1) > 1e-9) {
      EXPECT_EQ(DecideLabel({s.r_left + c, s.r_right + c}, 0.1), l);
    }
    if (l != Label::kDraw) {
      const double k = scale(rng);
      EXPECT_EQ(DecideLabel({k * s.r_left, k * s.r_right}, 0.1), l);
    }
  }
}

TEST(BlendPair, SingleMemberNoNormalizationIsRaw) {
  BlendSpec spec;
  spec.normalization = Normalization::kNone;
  spec.members.push_back({IdentityModel(5), Store({"a", "b", "c"}, {0, 3, 5}),
                          "m"});
  const std::vector<HeadlineId> pool = {"a", "b", "c"};
  const PairScores s = BlendPair(spec, "b", "c", pool);
  EXPECT_DOUBLE_EQ(s.r_left, 3.0);
  EXPECT_DOUBLE_EQ(s.r_right, 5.0);
}

TEST(BlendPair, SymmetricMembersCancel) {
  BlendSpec spec;
  spec.members.push_back({StepModel(0, 1), Store({"l", "r"}, {0, 1}), "m1"});
  spec.members.push_back({StepModel(1, 0), Store({"l", "r"}, {0, 1}), "m2"});
  const std::vector<HeadlineId> pool = {"l", "r"};
  const PairScores s = BlendPair(spec, "l", "r", pool);
  EXPECT_DOUBLE_EQ(s.r_left, 0.0);
  EXPECT_DOUBLE_EQ(s.r_right, 0.0);
}

TEST(BlendPair, MissingIdNamesMember) {
  BlendSpec spec;
  spec.members.push_back({StepModel(0, 1), Store({"l", "r"}, {0, 1}), "m1"});
  spec.members.push_back({StepModel(0, 1), Store({"l"}, {0}), "second"});
  const std::vector<HeadlineId> pool = {"l", "r"};
  try {
    BlendPair(spec, "l", "r", pool);
    FAIL();
  } catch (const Error& e) {
    EXPECT_THAT(e.what(), HasSubstr("second"));
    EXPECT_THAT(e.what(), HasSubstr("r"));
  }
}

TEST(BlendSpec, Validation) {
  BlendSpec spec;
  EXPECT_THROW(spec.Validate(), Error);
  auto wide = std::make_shared<RankerModel>();
  wide->dim = 2;
  spec.members.push_back({wide, Store({"a"}, {0}), "m"});
  EXPECT_THROW(spec.Validate(), Error);
  spec.members[0].model = StepModel(0, 1);
  spec.draw_threshold = -0.1;
  EXPECT_THROW(spec.Validate(), Error);
}

PairDataset RandomDataset(std::mt19937_64& rng, std::size_t ids,
                          std::size_t records) {
  std::uniform_int_distribution<std::size_t> pick(0, ids - 1);
  PairDataset d;
  while (d.size() < records) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    d.records.push_back({"h" + std::to_string(a), "h" + std::to_string(b),
                         Label::kLeft});
  }
  return d;
}

TEST(PredictDataset, IdenticalMembersMatchSingleModel) {
  std::mt19937_64 rng(2);
  std::vector<std::string> ids;
  std::vector<float> values;
  for (int i = 0; i < 30; ++i) {
    ids.push_back("h" + std::to_string(i));
    values.push_back(static_cast<float>(i % 9));
  }
  const auto store = Store(ids, values);
  const auto model = IdentityModel(9);
  const PairDataset d = RandomDataset(rng, 30, 200);
  for (const Normalization norm : {Normalization::kZScore, Normalization::kNone}) {
    BlendSpec single, five;
    single.normalization = five.normalization = norm;
    single.members.push_back({model, store, "m"});
    for (int k = 0; k < 5; ++k) five.members.push_back({model, store, "m"});
    const auto a = PredictDataset(single, d);
    const auto b = PredictDataset(five, d);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].predicted, b[i].predicted);
      EXPECT_EQ(a[i].scores.r_left, b[i].scores.r_left);
    }
  }
}

TEST(PredictDataset, OrderSwapAndEmpty) {
  BlendSpec spec;
  spec.members.push_back(
      {IdentityModel(5), Store({"a", "b", "c"}, {0, 1, 4}), "m"});
  PairDataset d;
  d.records = {{"a", "b", Label::kLeft},
               {"c", "a", Label::kBad},
               {"b", "c", Label::kDraw}};
  const auto p = PredictDataset(spec, d);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[1].record.label, Label::kBad);

  PairDataset swapped = d;
  for (auto& r : swapped.records) std::swap(r.left_id, r.right_id);
  const auto q = PredictDataset(spec, swapped);
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_EQ(q[i].predicted, MirrorLabel(p[i].predicted));
  }
  EXPECT_TRUE(PredictDataset(spec, PairDataset{}).empty());
}

TEST(PredictDataset, MemberOrderDoesNotMatter) {
  std::mt19937_64 rng(6);
  std::vector<std::string> ids;
  std::vector<float> v1, v2, v3;
  for (int i = 0; i < 20; ++i) {
    ids.push_back("h" + std::to_string(i));
    v1.push_back(static_cast<float>(i % 7));
    v2.push_back(static_cast<float>((i * 3) % 7));
    v3.push_back(static_cast<float>((i * 5 + 1) % 7));
  }
  const auto model = IdentityModel(7);
  std::vector<BlendMember> members = {{model, Store(ids, v1), "1"},
                                      {model, Store(ids, v2), "2"},
                                      {model, Store(ids, v3), "3"}};
  const PairDataset d = RandomDataset(rng, 20, 100);
  BlendSpec a, b;
  a.members = members;
  b.members = {members[2], members[0], members[1]};
  const auto pa = PredictDataset(a, d), pb = PredictDataset(b, d);
  for (std::size_t i = 0; i < pa.size(); ++i) {
    EXPECT_NEAR(pa[i].scores.r_left, pb[i].scores.r_left, 1e-12);
    EXPECT_NEAR(pa[i].scores.r_right, pb[i].scores.r_right, 1e-12);
  }
}

TEST(Predictions, FileRoundTrip) {
  std::vector<Prediction> preds(2);
  preds[0].record = {"a", "b", Label::kLeft};
  preds[0].scores = {0.25, -1.5};
  preds[0].predicted = Label::kLeft;
  preds[1].record = {"c", "d", Label::kBad};
  preds[1].scores = {0.1, 0.1 + 1e-17};
  preds[1].predicted = Label::kDraw;
  std::stringstream io;
  WritePredictions(preds, io);
  EXPECT_THAT(io.str(), HasSubstr(R"({"left_url":"a","right_url":"b",)"
                                  R"("r_left":0.25,"r_right":-1.5,"pred":"left"})"));
  const auto back = ReadPredictions(io);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].record.left_id, "c");
  EXPECT_EQ(back[1].scores.r_right, preds[1].scores.r_right);
  EXPECT_EQ(back[1].predicted, Label::kDraw);

  std::istringstream bad(R"({"left_url":"a","right_url":"b","r_left":0,"r_right":0,"pred":"bad"})");
  EXPECT_THROW(ReadPredictions(bad), Error);
  std::istringstream missing(R"({"left_url":"a","right_url":"b","pred":"left"})");
  EXPECT_THROW(ReadPredictions(missing), Error);
}

}  // namespace
}  // namespace headline_rank
