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

#include "headline_rank/embedding_store.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "binary_io.h"
#include "headline_rank/error.h"

namespace headline_rank {

constexpr char kHse1Magic[5] = "HSE1";

void CheckEmbeddingParts(std::size_t dim, std::span<const std::string> ids,
                         std::span<const float> matrix) {
  if (dim == 0) throw Error("embedding dim must be positive");
  if (matrix.size() != ids.size() * dim) {
    throw Error("matrix has " + std::to_string(matrix.size()) +
                " values, expected " + std::to_string(ids.size() * dim));
  }
  std::unordered_set<std::string_view> seen;
  for (const std::string& id : ids) {
    if (!seen.insert(id).second) throw Error("duplicate id \"" + id + "\"");
  }
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (!std::isfinite(matrix[i])) {
      throw Error("non-finite value in row " + std::to_string(i / dim) +
                  " (id \"" + ids[i / dim] + "\")");
    }
  }
}

EmbeddingStore::EmbeddingStore(std::size_t dim, std::vector<std::string> ids,
                               std::vector<float> matrix)
    : dim_(dim), ids_(std::move(ids)), matrix_(std::move(matrix)) {
  CheckEmbeddingParts(dim_, ids_, matrix_);
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) index_.emplace(ids_[i], i);
}

std::optional<std::size_t> EmbeddingStore::Find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EmbeddingStore ReadEmbeddings(std::istream& in) {
  binary_io::Header header = binary_io::ReadHeader(in, kHse1Magic);
  std::vector<float> matrix(static_cast<std::size_t>(header.count) *
                            header.dim);
  binary_io::ReadFloats(in, matrix, "embedding payload");
  binary_io::ExpectEnd(in);
  return EmbeddingStore(header.dim, std::move(header.ids), std::move(matrix));
}

EmbeddingStore LoadEmbeddings(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open embeddings file " + path.string());
  try {
    return ReadEmbeddings(in);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void WriteEmbeddings(const EmbeddingStore& store, std::ostream& out) {
  binary_io::WriteHeader(out, kHse1Magic,
                         static_cast<std::uint32_t>(store.dim()), store.ids());
  binary_io::WriteFloats(out, store.matrix());
}

void SaveEmbeddings(const EmbeddingStore& store,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  WriteEmbeddings(store, out);
  out.flush();
  if (!out) throw Error("write failure on " + path.string());
}

}  // namespace headline_rank
