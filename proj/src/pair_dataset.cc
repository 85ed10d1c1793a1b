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

#include "headline_rank/pair_dataset.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <string_view>
#include <unordered_set>

#include "headline_rank/error.h"
#include "json.hpp"

namespace headline_rank {
namespace {

using nlohmann::json;

std::string LineError(std::size_t line, const std::string& what) {
  return what + " at line " + std::to_string(line);
}

std::string RequireString(const json& obj, const char* key, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw Error(LineError(line, std::string("missing or non-string \"") + key +
                                    "\""));
  }
  return it->get<std::string>();
}

bool IsBlank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  });
}

// Unbiased draw from [0, bound) by rejection on the raw 64-bit stream.
std::uint64_t BoundedDraw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

}  // namespace

PairDataset ReadPairs(std::istream& in) {
  PairDataset dataset;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (IsBlank(text)) continue;
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::parse_error&) {
      throw Error(LineError(line, "malformed JSON"));
    }
    if (!obj.is_object()) throw Error(LineError(line, "expected JSON object"));
    PairRecord record;
    record.left_id = RequireString(obj, "left_url", line);
    record.right_id = RequireString(obj, "right_url", line);
    const auto label = ParseLabel(RequireString(obj, "label", line));
    if (!label) throw Error(LineError(line, "unknown label"));
    record.label = *label;
    if (record.left_id.empty() || record.right_id.empty()) {
      throw Error(LineError(line, "empty headline id"));
    }
    if (record.left_id == record.right_id) {
      throw Error(LineError(line, "left and right ids are equal"));
    }
    dataset.records.push_back(std::move(record));
  }
  if (in.bad()) throw Error("read failure");
  return dataset;
}

PairDataset LoadPairs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open pairs file " + path.string());
  try {
    return ReadPairs(in);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void WritePairs(const PairDataset& dataset, std::ostream& out) {
  for (const PairRecord& r : dataset.records) {
    json obj = {{"left_url", r.left_id},
                {"right_url", r.right_id},
                {"label", std::string(LabelName(r.label))}};
    out << obj.dump() << '\n';
  }
}

void SavePairs(const PairDataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  WritePairs(dataset, out);
  if (!out) throw Error("write failure on " + path.string());
}

std::vector<HeadlineId> DistinctIds(const PairDataset& dataset) {
  std::vector<HeadlineId> ids;
  std::unordered_set<std::string_view> seen;
  for (const PairRecord& r : dataset.records) {
    for (const HeadlineId* id : {&r.left_id, &r.right_id}) {
      if (seen.insert(*id).second) ids.push_back(*id);
    }
  }
  return ids;
}

std::pair<PairDataset, PairDataset> SplitValidation(const PairDataset& dataset,
                                                    double valid_fraction,
                                                    std::uint64_t seed) {
  if (!(valid_fraction > 0.0 && valid_fraction < 1.0)) {
    throw Error("validation fraction must lie in (0, 1)");
  }
  if (dataset.empty()) throw Error("cannot split an empty dataset");

  const std::size_t n = dataset.size();
  const auto n_valid = static_cast<std::size_t>(
      std::llround(valid_fraction * static_cast<double>(n)));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first n_valid slots become the validation set.
  for (std::size_t i = 0; i < n_valid; ++i) {
    const std::size_t j = i + BoundedDraw(rng, n - i);
    std::swap(order[i], order[j]);
  }
  std::vector<bool> is_valid(n, false);
  for (std::size_t i = 0; i < n_valid; ++i) is_valid[order[i]] = true;

  PairDataset train, valid;
  train.records.reserve(n - n_valid);
  valid.records.reserve(n_valid);
  for (std::size_t i = 0; i < n; ++i) {
    (is_valid[i] ? valid : train).records.push_back(dataset.records[i]);
  }
  return {std::move(train), std::move(valid)};
}

}  // namespace headline_rank
