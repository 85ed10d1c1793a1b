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

#include "headline_rank/token_file.h"

#include <cmath>
#include <unordered_set>

#include "binary_io.h"
#include "headline_rank/error.h"

namespace headline_rank {

constexpr char kHst1Magic[5] = "HST1";

namespace {

void CheckSequence(const TokenEmbeddingSequence& seq, std::size_t dim) {
  if (seq.dim != dim) {
    throw Error("sequence \"" + seq.id + "\" has dim " +
                std::to_string(seq.dim) + ", file dim is " +
                std::to_string(dim));
  }
  if (seq.values.empty() || seq.values.size() % dim != 0) {
    throw Error("sequence \"" + seq.id + "\" must hold a positive whole "
                "number of tokens");
  }
  for (const float v : seq.values) {
    if (!std::isfinite(v)) {
      throw Error("non-finite value in sequence \"" + seq.id + "\"");
    }
  }
}

}  // namespace

TokenFileReader::TokenFileReader(std::istream& in) : in_(in) {
  binary_io::Header header = binary_io::ReadHeader(in_, kHst1Magic);
  if (header.dim == 0) throw Error("token dim must be positive");
  dim_ = header.dim;
  ids_ = std::move(header.ids);
}

bool TokenFileReader::Next(TokenEmbeddingSequence& seq) {
  if (next_ == ids_.size()) {
    binary_io::ExpectEnd(in_);
    return false;
  }
  const std::uint32_t n_tokens = binary_io::ReadU32(in_, "token count");
  if (n_tokens == 0) {
    throw Error("sequence \"" + ids_[next_] + "\" has no tokens");
  }
  seq.id = ids_[next_];
  seq.dim = dim_;
  seq.values.resize(static_cast<std::size_t>(n_tokens) * dim_);
  binary_io::ReadFloats(in_, seq.values, "token payload");
  CheckSequence(seq, dim_);
  ++next_;
  return true;
}

TokenFile ReadTokenFile(std::istream& in) {
  TokenFileReader reader(in);
  TokenFile file;
  file.dim = reader.dim();
  file.sequences.reserve(reader.size());
  TokenEmbeddingSequence seq;
  while (reader.Next(seq)) file.sequences.push_back(std::move(seq));
  return file;
}

TokenFile LoadTokenFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open token file " + path.string());
  try {
    return ReadTokenFile(in);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void WriteTokenFile(const TokenFile& file, std::ostream& out) {
  if (file.dim == 0) throw Error("token dim must be positive");
  std::vector<std::string> ids;
  ids.reserve(file.sequences.size());
  std::unordered_set<std::string_view> seen;
  for (const auto& seq : file.sequences) {
    CheckSequence(seq, file.dim);
    if (!seen.insert(seq.id).second) {
      throw Error("duplicate id \"" + seq.id + "\"");
    }
    ids.push_back(seq.id);
  }
  binary_io::WriteHeader(out, kHst1Magic, static_cast<std::uint32_t>(file.dim),
                         ids);
  for (const auto& seq : file.sequences) {
    binary_io::WriteU32(out, static_cast<std::uint32_t>(seq.n_tokens()));
    binary_io::WriteFloats(out, seq.values);
  }
}

void SaveTokenFile(const TokenFile& file, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  WriteTokenFile(file, out);
  out.flush();
  if (!out) throw Error("write failure on " + path.string());
}

}  // namespace headline_rank
