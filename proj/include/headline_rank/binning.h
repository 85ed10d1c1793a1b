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

#ifndef HEADLINE_RANK_BINNING_H_
#define HEADLINE_RANK_BINNING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace headline_rank {

class ThreadPool;

// Equal-frequency histogram bins per feature. Edges are actual training
// values, so "bin <= b" and "x <= edges[b]" select the same rows. A feature
// with k edges has k + 1 bins; the last bin has no upper edge.
class FeatureBinner {
 public:
  // `features` is rows x dim, row-major. n_bins in [2, 256].
  static FeatureBinner Fit(std::span<const float> features, std::size_t rows,
                           std::size_t dim, int n_bins,
                           ThreadPool* pool = nullptr);

  std::size_t dim() const { return edges_.size(); }
  std::span<const float> edges(std::size_t feature) const {
    return edges_[feature];
  }
  std::size_t num_bins(std::size_t feature) const {
    return edges_[feature].size() + 1;
  }

  std::uint8_t Bin(std::size_t feature, float value) const;

  // Feature-major bin matrix: result[f * rows + r].
  std::vector<std::uint8_t> BinColumns(std::span<const float> features,
                                       std::size_t rows,
                                       ThreadPool* pool = nullptr) const;

 private:
  std::vector<std::vector<float>> edges_;
};

}  // namespace headline_rank

#endif  // HEADLINE_RANK_BINNING_H_
