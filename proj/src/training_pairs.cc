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

#include "headline_rank/training_pairs.h"

#include <unordered_map>

#include "headline_rank/error.h"

namespace headline_rank {

TrainingPairSet BuildTrainingPairs(const PairDataset& dataset,
                                   const EmbeddingStore& store,
                                   DrawPolicy draw_policy) {
  TrainingPairSet set;
  set.dim = store.dim();

  std::unordered_map<std::string, std::size_t> row_of;
  std::vector<std::string> missing;
  auto row_for = [&](const std::string& id) -> std::size_t {
    if (const auto it = row_of.find(id); it != row_of.end()) return it->second;
    const auto src = store.Find(id);
    if (!src) {
      missing.push_back(id);
      row_of.emplace(id, SIZE_MAX);
      return SIZE_MAX;
    }
    const std::size_t row = set.ids.size();
    set.ids.push_back(id);
    const auto v = store.row(*src);
    set.features.insert(set.features.end(), v.begin(), v.end());
    row_of.emplace(id, row);
    return row;
  };

  for (const PairRecord& r : dataset.records) {
    if (r.label == Label::kBad) continue;
    if (r.label == Label::kDraw && draw_policy == DrawPolicy::kExclude) {
      continue;
    }
    const std::size_t left = row_for(r.left_id);
    const std::size_t right = row_for(r.right_id);
    if (left == SIZE_MAX || right == SIZE_MAX) continue;
    switch (r.label) {
      case Label::kLeft:
        set.pairs.push_back({left, right});
        break;
      case Label::kRight:
        set.pairs.push_back({right, left});
        break;
      case Label::kDraw:
        set.pairs.push_back({left, right});
        set.pairs.push_back({right, left});
        break;
      case Label::kBad:
        break;
    }
  }

  if (!missing.empty()) {
    std::string message = "missing embeddings for ids:";
    for (const std::string& id : missing) message += " " + id;
    throw Error(message);
  }
  return set;
}

}  // namespace headline_rank
