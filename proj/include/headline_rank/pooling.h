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

#ifndef HEADLINE_RANK_POOLING_H_
#define HEADLINE_RANK_POOLING_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "headline_rank/embedding_store.h"
#include "headline_rank/token_file.h"

namespace headline_rank {

enum class PoolingMethod { kMeanOverTokens, kFirstToken };

// "mean" or "cls".
std::optional<PoolingMethod> ParsePoolingMethod(std::string_view text);
std::string_view PoolingMethodName(PoolingMethod method);

// Average over every stored token. Sums in double, rounds once to float.
std::vector<float> MeanPool(const TokenEmbeddingSequence& seq);

// Row 0, unchanged.
std::vector<float> FirstTokenPool(const TokenEmbeddingSequence& seq);

std::vector<float> Pool(const TokenEmbeddingSequence& seq,
                        PoolingMethod method);

// Pools every sequence of an HST1 file into an in-memory store, keeping id
// order.
EmbeddingStore PoolTokenFile(const std::filesystem::path& token_file,
                             PoolingMethod method);

struct PoolSummary {
  std::size_t n_rows = 0;
  std::size_t dim = 0;
};

// HST1 -> HSE1.
PoolSummary PoolFile(const std::filesystem::path& token_file,
                     PoolingMethod method, const std::filesystem::path& out);

}  // namespace headline_rank

#endif  // HEADLINE_RANK_POOLING_H_
