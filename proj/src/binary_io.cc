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

#include "binary_io.h"

#include <cstring>
#include <unordered_set>

#include "json.hpp"

namespace headline_rank::binary_io {

namespace {
constexpr std::uint32_t kVersion = 1;
}  // namespace

void WriteHeader(std::ostream& out, const char (&magic)[5], std::uint32_t dim,
                 std::span<const std::string> ids) {
  const std::string blob = nlohmann::json(std::vector<std::string>(
                                              ids.begin(), ids.end()))
                               .dump();
  if (ids.size() > UINT32_MAX || blob.size() > UINT32_MAX) {
    throw Error("too many rows for a 32-bit header");
  }
  out.write(magic, 4);
  WriteU32(out, kVersion);
  WriteU32(out, static_cast<std::uint32_t>(ids.size()));
  WriteU32(out, dim);
  WriteU32(out, static_cast<std::uint32_t>(blob.size()));
  out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
}

Header ReadHeader(std::istream& in, const char (&magic)[5]) {
  char got[4];
  ReadExact(in, got, 4, "magic");
  if (std::memcmp(got, magic, 4) != 0) throw Error("bad magic");
  if (ReadU32(in, "version") != kVersion) throw Error("unsupported version");

  Header header;
  header.count = ReadU32(in, "row count");
  header.dim = ReadU32(in, "dim");
  const std::uint32_t blob_len = ReadU32(in, "id blob length");
  std::string blob(blob_len, '\0');
  ReadExact(in, blob.data(), blob.size(), "id blob");

  nlohmann::json ids;
  try {
    ids = nlohmann::json::parse(blob);
  } catch (const nlohmann::json::parse_error&) {
    throw Error("id blob is not valid JSON");
  }
  if (!ids.is_array() || ids.size() != header.count) {
    throw Error("id blob must be an array of " + std::to_string(header.count) +
                " strings");
  }
  header.ids.reserve(header.count);
  std::unordered_set<std::string> seen;
  for (const auto& id : ids) {
    if (!id.is_string()) throw Error("id blob contains a non-string entry");
    std::string s = id.get<std::string>();
    if (!seen.insert(s).second) throw Error("duplicate id \"" + s + "\"");
    header.ids.push_back(std::move(s));
  }
  return header;
}

}  // namespace headline_rank::binary_io
