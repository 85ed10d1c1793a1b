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

#include "headline_rank/pair_dataset.h"

#include <algorithm>
#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "headline_rank/error.h"
#include "test_util.h"

namespace headline_rank {
namespace {

using ::testing::HasSubstr;

PairDataset Parse(const std::string& text) {
  std::istringstream in(text);
  return ReadPairs(in);
}

std::string ErrorOf(const std::string& text) {
  try {
    Parse(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(Label, ParseIsClosed) {
  EXPECT_EQ(ParseLabel("left"), Label::kLeft);
  EXPECT_EQ(ParseLabel("right"), Label::kRight);
  EXPECT_EQ(ParseLabel("draw"), Label::kDraw);
  EXPECT_EQ(ParseLabel("bad"), Label::kBad);
  EXPECT_EQ(ParseLabel("tie"), std::nullopt);
  EXPECT_EQ(ParseLabel("Left"), std::nullopt);
  EXPECT_EQ(MirrorLabel(Label::kLeft), Label::kRight);
  EXPECT_EQ(MirrorLabel(Label::kDraw), Label::kDraw);
}

TEST(LoadPairs, MapsFields) {
  const PairDataset d = Parse(
      R"({"left_url":"a","right_url":"b","label":"left"})"
      "\n"
      R"({"left_url":"c","right_url":"d","label":"bad","lang":"ru"})"
      "\n");
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.records[0], (PairRecord{"a", "b", Label::kLeft}));
  EXPECT_EQ(d.records[1], (PairRecord{"c", "d", Label::kBad}));
}

TEST(LoadPairs, KeepsOrderAndDuplicates) {
  const PairDataset d = Parse(
      R"({"left_url":"x","right_url":"y","label":"right"})" "\n"
      R"({"left_url":"a","right_url":"b","label":"draw"})" "\n"
      "\n"
      R"({"left_url":"x","right_url":"y","label":"right"})" "\n");
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d.records[0], d.records[2]);
  EXPECT_EQ(d.records[1].left_id, "a");
}

TEST(LoadPairs, UnknownLabelNamesLine) {
  EXPECT_THAT(ErrorOf(R"({"left_url":"a","right_url":"b","label":"left"})"
                      "\n"
                      R"({"left_url":"a","right_url":"b","label":"tie"})"),
              HasSubstr("unknown label at line 2"));
}

TEST(LoadPairs, MalformedLinesNameLine) {
  EXPECT_THAT(ErrorOf("{not json"), HasSubstr("line 1"));
  EXPECT_THAT(ErrorOf(R"({"left_url":"a","label":"left"})"),
              HasSubstr("line 1"));
  EXPECT_THAT(ErrorOf(R"({"left_url":"a","right_url":"a","label":"left"})"),
              HasSubstr("line 1"));
  EXPECT_THAT(ErrorOf(R"({"left_url":"","right_url":"b","label":"left"})"),
              HasSubstr("line 1"));
  EXPECT_THAT(ErrorOf(R"({"left_url":1,"right_url":"b","label":"left"})"),
              HasSubstr("line 1"));
}

TEST(LoadPairs, MissingFile) {
  EXPECT_THROW(LoadPairs("/nonexistent/pairs.jsonl"), Error);
}

TEST(LoadPairs, SaveRoundTrip) {
  testing::TempDir dir;
  PairDataset d;
  d.records = {{"https://a/1", "https://b/2", Label::kLeft},
               {"u", "v", Label::kDraw},
               {"\xd0\x9f", "w", Label::kBad}};
  SavePairs(d, dir / "p.jsonl");
  EXPECT_EQ(LoadPairs(dir / "p.jsonl").records, d.records);
}

TEST(DistinctIds, FirstAppearanceOrder) {
  PairDataset d;
  d.records = {{"b", "a", Label::kLeft}, {"a", "c", Label::kLeft}};
  EXPECT_EQ(DistinctIds(d), (std::vector<HeadlineId>{"b", "a", "c"}));
}

PairDataset Numbered(std::size_t n) {
  PairDataset d;
  for (std::size_t i = 0; i < n; ++i) {
    d.records.push_back({"l" + std::to_string(i), "r" + std::to_string(i),
                         Label::kLeft});
  }
  return d;
}

TEST(SplitValidation, SizesAndDisjoint) {
  const PairDataset d = Numbered(10);
  const auto [train, valid] = SplitValidation(d, 0.2, 42);
  EXPECT_EQ(train.size(), 8u);
  EXPECT_EQ(valid.size(), 2u);
  for (const auto& v : valid.records) {
    EXPECT_EQ(std::count(train.records.begin(), train.records.end(), v), 0);
  }
}

TEST(SplitValidation, Deterministic) {
  const PairDataset d = Numbered(37);
  const auto a = SplitValidation(d, 0.3, 7);
  const auto b = SplitValidation(d, 0.3, 7);
  EXPECT_EQ(a.first.records, b.first.records);
  EXPECT_EQ(a.second.records, b.second.records);
  const auto c = SplitValidation(d, 0.3, 8);
  EXPECT_NE(a.second.records, c.second.records);
}

TEST(SplitValidation, RejectsBadFraction) {
  const PairDataset d = Numbered(4);
  EXPECT_THROW(SplitValidation(d, 1.0, 1), Error);
  EXPECT_THROW(SplitValidation(d, 0.0, 1), Error);
  EXPECT_THROW(SplitValidation(d, -0.5, 1), Error);
  EXPECT_THROW(SplitValidation(PairDataset{}, 0.5, 1), Error);
}

// Partition property over many sizes, fractions and seeds: the two parts
// interleave back into the input in source order.
TEST(SplitValidation, IsOrderPreservingPartition) {
  for (std::size_t n = 1; n < 60; n += 7) {
    for (const double f : {0.05, 0.2, 0.5, 0.9}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const PairDataset d = Numbered(n);
        const auto [train, valid] = SplitValidation(d, f, seed);
        ASSERT_EQ(valid.size(),
                  static_cast<std::size_t>(std::llround(f * n)));
        std::size_t ti = 0, vi = 0;
        for (const PairRecord& r : d.records) {
          if (ti < train.size() && train.records[ti] == r) {
            ++ti;
          } else {
            ASSERT_LT(vi, valid.size());
            ASSERT_EQ(valid.records[vi], r);
            ++vi;
          }
        }
        EXPECT_EQ(ti, train.size());
        EXPECT_EQ(vi, valid.size());
      }
    }
  }
}

}  // namespace
}  // namespace headline_rank
