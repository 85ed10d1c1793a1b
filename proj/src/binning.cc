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

#include "headline_rank/binning.h"

#include <algorithm>

#include "headline_rank/error.h"
#include "headline_rank/parallel.h"

namespace headline_rank {
namespace {

std::vector<float> EqualFrequencyEdges(std::vector<float> column, int n_bins) {
  std::vector<float> edges;
  if (column.empty()) return edges;
  std::sort(column.begin(), column.end());
  const std::size_t n = column.size();
  const float max_value = column.back();
  for (int i = 1; i < n_bins; ++i) {
    const std::size_t pos = (static_cast<std::size_t>(i) * n) /
                            static_cast<std::size_t>(n_bins);
    if (pos == 0) continue;
    const float edge = column[pos - 1];
    // An edge at the maximum would leave the last bin empty.
    if (edge >= max_value) break;
    if (edges.empty() || edge > edges.back()) edges.push_back(edge);
  }
  return edges;
}

void RunFor(ThreadPool* pool, std::size_t n,
            const std::function<void(std::size_t)>& fn) {
  if (pool != nullptr) {
    pool->ParallelFor(n, fn);
  } else {
    for (std::size_t i = 0; i < n; ++i) fn(i);
  }
}

}  // namespace

FeatureBinner FeatureBinner::Fit(std::span<const float> features,
                                 std::size_t rows, std::size_t dim, int n_bins,
                                 ThreadPool* pool) {
  if (n_bins < 2 || n_bins > 256) throw Error("n_bins must lie in [2, 256]");
  if (features.size() != rows * dim) throw Error("feature matrix size mismatch");
  FeatureBinner binner;
  binner.edges_.resize(dim);
  RunFor(pool, dim, [&](std::size_t f) {
    std::vector<float> column(rows);
    for (std::size_t r = 0; r < rows; ++r) column[r] = features[r * dim + f];
    binner.edges_[f] = EqualFrequencyEdges(std::move(column), n_bins);
  });
  return binner;
}

std::uint8_t FeatureBinner::Bin(std::size_t feature, float value) const {
  const auto& e = edges_[feature];
  return static_cast<std::uint8_t>(
      std::lower_bound(e.begin(), e.end(), value) - e.begin());
}

std::vector<std::uint8_t> FeatureBinner::BinColumns(
    std::span<const float> features, std::size_t rows, ThreadPool* pool) const {
  const std::size_t d = dim();
  if (features.size() != rows * d) throw Error("feature matrix size mismatch");
  std::vector<std::uint8_t> bins(rows * d);
  RunFor(pool, d, [&](std::size_t f) {
    for (std::size_t r = 0; r < rows; ++r) {
      bins[f * rows + r] = Bin(f, features[r * d + f]);
    }
  });
  return bins;
}

}  // namespace headline_rank
