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

#ifndef HEADLINE_RANK_TRAINING_PAIRS_H_
#define HEADLINE_RANK_TRAINING_PAIRS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "headline_rank/embedding_store.h"
#include "headline_rank/pair_dataset.h"

namespace headline_rank {

// How Draw records enter training. Bad records never do.
enum class DrawPolicy { kExclude, kBothDirections };

struct RankPair {
  std::size_t positive = 0;
  std::size_t negative = 0;

  bool operator==(const RankPair&) const = default;
};

// Feature rows for every distinct headline referenced by a usable record,
// plus (positive, negative) row pairs into them.
struct TrainingPairSet {
  std::size_t dim = 0;
  std::vector<std::string> ids;  // one per feature row
  std::vector<float> features;   // ids.size() x dim, row-major
  std::vector<RankPair> pairs;

  std::size_t documents() const { return ids.size(); }
  std::span<const float> row(std::size_t i) const {
    return std::span<const float>(features).subspan(i * dim, dim);
  }
};

// Left -> (left, right); Right -> (right, left); Bad dropped; Draw per
// policy. Throws listing every referenced id missing from the store.
TrainingPairSet BuildTrainingPairs(const PairDataset& dataset,
                                   const EmbeddingStore& store,
                                   DrawPolicy draw_policy = DrawPolicy::kExclude);

}  // namespace headline_rank

#endif  // HEADLINE_RANK_TRAINING_PAIRS_H_
