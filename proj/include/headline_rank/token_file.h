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

#ifndef HEADLINE_RANK_TOKEN_FILE_H_
#define HEADLINE_RANK_TOKEN_FILE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace headline_rank {

// Hidden states of one headline at one model layer: n_tokens x dim,
// row-major. Padding is never stored.
struct TokenEmbeddingSequence {
  std::string id;
  std::size_t dim = 0;
  std::vector<float> values;

  std::size_t n_tokens() const { return dim == 0 ? 0 : values.size() / dim; }
  std::span<const float> token(std::size_t i) const {
    return std::span<const float>(values).subspan(i * dim, dim);
  }
};

struct TokenFile {
  std::size_t dim = 0;
  std::vector<TokenEmbeddingSequence> sequences;
};

// Streaming HST1 reader. Layout (little-endian): "HST1", u32 version=1,
// u32 n_sequences, u32 dim, u32 id_blob_len, id_blob (JSON array), then per
// sequence u32 n_tokens followed by n_tokens*dim float32.
class TokenFileReader {
 public:
  explicit TokenFileReader(std::istream& in);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }

  // Fills `seq` with the next sequence; false once all are consumed (the
  // reader then checks that no bytes remain).
  bool Next(TokenEmbeddingSequence& seq);

 private:
  std::istream& in_;
  std::size_t dim_ = 0;
  std::vector<std::string> ids_;
  std::size_t next_ = 0;
};

TokenFile ReadTokenFile(std::istream& in);
TokenFile LoadTokenFile(const std::filesystem::path& path);
void WriteTokenFile(const TokenFile& file, std::ostream& out);
void SaveTokenFile(const TokenFile& file, const std::filesystem::path& path);

}  // namespace headline_rank

#endif  // HEADLINE_RANK_TOKEN_FILE_H_
