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

#ifndef HEADLINE_RANK_EMBEDDING_STORE_H_
#define HEADLINE_RANK_EMBEDDING_STORE_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace headline_rank {

// Id-keyed matrix of sentence vectors, one float32 row per headline.
// Immutable after construction. The constructor enforces: dim > 0, unique
// ids, matrix size == ids * dim, every value finite.
class EmbeddingStore {
 public:
  EmbeddingStore(std::size_t dim, std::vector<std::string> ids,
                 std::vector<float> matrix);

  std::size_t dim() const { return dim_; }
  std::size_t rows() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::span<const float> matrix() const { return matrix_; }

  std::span<const float> row(std::size_t index) const {
    return std::span<const float>(matrix_).subspan(index * dim_, dim_);
  }

  // Exact-match lookup.
  std::optional<std::size_t> Find(std::string_view id) const;

 private:
  std::size_t dim_;
  std::vector<std::string> ids_;
  std::vector<float> matrix_;
  std::unordered_map<std::string, std::size_t> index_;
};

// HSE1 codec. Layout (little-endian): "HSE1", u32 version=1, u32 n_rows,
// u32 dim, u32 id_blob_len, id_blob (JSON array of ids), n_rows*dim float32.
EmbeddingStore ReadEmbeddings(std::istream& in);
EmbeddingStore LoadEmbeddings(const std::filesystem::path& path);
void WriteEmbeddings(const EmbeddingStore& store, std::ostream& out);
void SaveEmbeddings(const EmbeddingStore& store,
                    const std::filesystem::path& path);

// Validates raw parts against the store invariants without building one.
// Used by writers that want to fail before touching the output file.
void CheckEmbeddingParts(std::size_t dim, std::span<const std::string> ids,
                         std::span<const float> matrix);

}  // namespace headline_rank

#endif  // HEADLINE_RANK_EMBEDDING_STORE_H_
