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

// Little-endian primitives shared by the HSE1 and HST1 codecs.

#ifndef HEADLINE_RANK_SRC_BINARY_IO_H_
#define HEADLINE_RANK_SRC_BINARY_IO_H_

#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "headline_rank/error.h"

namespace headline_rank::binary_io {

inline void WriteU32(std::ostream& out, std::uint32_t v) {
  const std::array<char, 4> bytes = {
      static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
      static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes.data(), bytes.size());
}

inline void WriteFloats(std::ostream& out, std::span<const float> values) {
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size_bytes()));
  } else {
    for (const float f : values) WriteU32(out, std::bit_cast<std::uint32_t>(f));
  }
}

// Reads exactly `size` bytes or throws naming `what`.
inline void ReadExact(std::istream& in, char* dst, std::size_t size,
                      const char* what) {
  in.read(dst, static_cast<std::streamsize>(size));
  if (static_cast<std::size_t>(in.gcount()) != size) {
    throw Error(std::string("truncated file while reading ") + what);
  }
}

inline std::uint32_t ReadU32(std::istream& in, const char* what) {
  std::array<unsigned char, 4> b{};
  ReadExact(in, reinterpret_cast<char*>(b.data()), b.size(), what);
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

inline void ReadFloats(std::istream& in, std::span<float> dst,
                       const char* what) {
  ReadExact(in, reinterpret_cast<char*>(dst.data()), dst.size_bytes(), what);
  if constexpr (std::endian::native != std::endian::little) {
    for (float& f : dst) {
      const auto u = std::bit_cast<std::uint32_t>(f);
      f = std::bit_cast<float>((u >> 24) | ((u >> 8) & 0xff00u) |
                               ((u << 8) & 0xff0000u) | (u << 24));
    }
  }
}

inline void ExpectEnd(std::istream& in) {
  if (in.peek() != std::char_traits<char>::eof()) {
    throw Error("trailing bytes after payload");
  }
}

// `magic` + version + count + dim + id blob.
struct Header {
  std::uint32_t count = 0;
  std::uint32_t dim = 0;
  std::vector<std::string> ids;
};

void WriteHeader(std::ostream& out, const char (&magic)[5], std::uint32_t dim,
                 std::span<const std::string> ids);
Header ReadHeader(std::istream& in, const char (&magic)[5]);

}  // namespace headline_rank::binary_io

#endif  // HEADLINE_RANK_SRC_BINARY_IO_H_
