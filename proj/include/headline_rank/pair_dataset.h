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

#ifndef HEADLINE_RANK_PAIR_DATASET_H_
#define HEADLINE_RANK_PAIR_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "headline_rank/label.h"

namespace headline_rank {

// Headline identifiers are opaque strings (usually URLs), compared exactly.
using HeadlineId = std::string;

struct PairRecord {
  HeadlineId left_id;
  HeadlineId right_id;
  Label label = Label::kDraw;

  bool operator==(const PairRecord&) const = default;
};

// Records in source order. Duplicates are kept.
struct PairDataset {
  std::vector<PairRecord> records;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
};

// Reads JSON Lines with keys `left_url`, `right_url`, `label`. Other keys
// (e.g. `lang`) are ignored. Blank lines are skipped. Errors carry the
// 1-based line number.
PairDataset ReadPairs(std::istream& in);
PairDataset LoadPairs(const std::filesystem::path& path);

void WritePairs(const PairDataset& dataset, std::ostream& out);
void SavePairs(const PairDataset& dataset, const std::filesystem::path& path);

// Distinct headline ids in order of first appearance (left before right).
std::vector<HeadlineId> DistinctIds(const PairDataset& dataset);

// Uniform pair-level split. The validation part holds
// round(valid_fraction * N) records. Both parts keep source order. The
// shuffle is defined on top of std::mt19937_64 so a seed gives the same
// split on every platform.
std::pair<PairDataset, PairDataset> SplitValidation(const PairDataset& dataset,
                                                    double valid_fraction,
                                                    std::uint64_t seed);

}  // namespace headline_rank

#endif  // HEADLINE_RANK_PAIR_DATASET_H_
