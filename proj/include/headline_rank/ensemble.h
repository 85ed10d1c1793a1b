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

#ifndef HEADLINE_RANK_ENSEMBLE_H_
#define HEADLINE_RANK_ENSEMBLE_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "headline_rank/embedding_store.h"
#include "headline_rank/label.h"
#include "headline_rank/pair_dataset.h"
#include "headline_rank/ranker_model.h"

namespace headline_rank {

class ThreadPool;

enum class Normalization { kNone, kZScore };

// "none" or "zscore".
std::optional<Normalization> ParseNormalization(std::string_view text);

// kNone: identity. kZScore: (x - mean) / population stddev, all zeros when
// the stddev is 0. Throws on empty input.
std::vector<double> NormalizeScores(std::span<const double> scores,
                                    Normalization method);

struct BlendMember {
  std::shared_ptr<const RankerModel> model;
  std::shared_ptr<const EmbeddingStore> store;
  std::string name;  // used in error messages
};

struct BlendSpec {
  std::vector<BlendMember> members;
  Normalization normalization = Normalization::kZScore;
  double draw_threshold = 0.1;

  // At least one member, model.dim == store.dim, threshold >= 0.
  void Validate() const;
};

struct PairScores {
  double r_left = 0.0;
  double r_right = 0.0;
};

// Per-headline blended ranks over an evaluation pool: every member scores
// the whole pool, its scores are normalized over the pool, and the
// normalized scores are averaged across members.
class BlendedRanks {
 public:
  BlendedRanks(const BlendSpec& spec, std::span<const HeadlineId> pool,
               ThreadPool* threads = nullptr);

  // Throws if `id` is not in the pool.
  double Rank(std::string_view id) const;

  std::span<const double> ranks() const { return ranks_; }

 private:
  std::vector<double> ranks_;
  std::unordered_map<std::string, std::size_t> index_;
};

PairScores BlendPair(const BlendSpec& spec, std::string_view left_id,
                     std::string_view right_id,
                     std::span<const HeadlineId> eval_pool);

// d = r_right - r_left. |d| <= threshold -> Draw, d < 0 -> Left,
// otherwise Right. Never returns Bad.
Label DecideLabel(const PairScores& scores, double draw_threshold);

struct Prediction {
  PairRecord record;  // gold record as read (label may be Bad)
  PairScores scores;
  Label predicted = Label::kDraw;
};

// One prediction per record in order; the pool is every distinct id of the
// dataset.
std::vector<Prediction> PredictDataset(const BlendSpec& spec,
                                       const PairDataset& dataset,
                                       ThreadPool* threads = nullptr);

// JSON Lines: {"left_url", "right_url", "r_left", "r_right", "pred"}.
void WritePredictions(std::span<const Prediction> predictions,
                      std::ostream& out);
void SavePredictions(std::span<const Prediction> predictions,
                     const std::filesystem::path& path);
// The record label of a read prediction is left as Draw; callers join gold
// labels by position.
std::vector<Prediction> ReadPredictions(std::istream& in);
std::vector<Prediction> LoadPredictions(const std::filesystem::path& path);

}  // namespace headline_rank

#endif  // HEADLINE_RANK_ENSEMBLE_H_
