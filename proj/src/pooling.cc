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

#include "headline_rank/pooling.h"

#include <fstream>

#include "headline_rank/error.h"

namespace headline_rank {
namespace {

void RequireTokens(const TokenEmbeddingSequence& seq) {
  if (seq.dim == 0 || seq.n_tokens() == 0) {
    throw Error("cannot pool empty sequence \"" + seq.id + "\"");
  }
}

}  // namespace

std::optional<PoolingMethod> ParsePoolingMethod(std::string_view text) {
  if (text == "mean") return PoolingMethod::kMeanOverTokens;
  if (text == "cls") return PoolingMethod::kFirstToken;
  return std::nullopt;
}

std::string_view PoolingMethodName(PoolingMethod method) {
  return method == PoolingMethod::kMeanOverTokens ? "mean" : "cls";
}

std::vector<float> MeanPool(const TokenEmbeddingSequence& seq) {
  RequireTokens(seq);
  const std::size_t n = seq.n_tokens();
  std::vector<double> sum(seq.dim, 0.0);
  for (std::size_t t = 0; t < n; ++t) {
    const auto row = seq.token(t);
    for (std::size_t j = 0; j < seq.dim; ++j) sum[j] += row[j];
  }
  std::vector<float> out(seq.dim);
  for (std::size_t j = 0; j < seq.dim; ++j) {
    out[j] = static_cast<float>(sum[j] / static_cast<double>(n));
  }
  return out;
}

std::vector<float> FirstTokenPool(const TokenEmbeddingSequence& seq) {
  RequireTokens(seq);
  const auto row = seq.token(0);
  return {row.begin(), row.end()};
}

std::vector<float> Pool(const TokenEmbeddingSequence& seq,
                        PoolingMethod method) {
  return method == PoolingMethod::kMeanOverTokens ? MeanPool(seq)
                                                  : FirstTokenPool(seq);
}

EmbeddingStore PoolTokenFile(const std::filesystem::path& token_file,
                             PoolingMethod method) {
  std::ifstream in(token_file, std::ios::binary);
  if (!in) throw Error("cannot open token file " + token_file.string());
  try {
    TokenFileReader reader(in);
    std::vector<float> matrix;
    matrix.reserve(reader.size() * reader.dim());
    TokenEmbeddingSequence seq;
    while (reader.Next(seq)) {
      const std::vector<float> pooled = Pool(seq, method);
      matrix.insert(matrix.end(), pooled.begin(), pooled.end());
    }
    return EmbeddingStore(reader.dim(), reader.ids(), std::move(matrix));
  } catch (const Error& e) {
    throw Error(token_file.string() + ": " + e.what());
  }
}

PoolSummary PoolFile(const std::filesystem::path& token_file,
                     PoolingMethod method, const std::filesystem::path& out) {
  const EmbeddingStore store = PoolTokenFile(token_file, method);
  SaveEmbeddings(store, out);
  return {store.rows(), store.dim()};
}

}  // namespace headline_rank
