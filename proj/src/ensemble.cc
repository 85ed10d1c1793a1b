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

#include "headline_rank/ensemble.h"

#include <cmath>
#include <fstream>

#include "headline_rank/error.h"
#include "headline_rank/parallel.h"
#include "json.hpp"

namespace headline_rank {

std::optional<Normalization> ParseNormalization(std::string_view text) {
  if (text == "none") return Normalization::kNone;
  if (text == "zscore") return Normalization::kZScore;
  return std::nullopt;
}

std::vector<double> NormalizeScores(std::span<const double> scores,
                                    Normalization method) {
  if (scores.empty()) throw Error("cannot normalize an empty score list");
  std::vector<double> out(scores.begin(), scores.end());
  if (method == Normalization::kNone) return out;

  const double n = static_cast<double>(scores.size());
  double mean = 0.0;
  for (const double s : scores) mean += s;
  mean /= n;
  double var = 0.0;
  for (const double s : scores) var += (s - mean) * (s - mean);
  const double sd = std::sqrt(var / n);
  for (double& s : out) s = sd > 0.0 ? (s - mean) / sd : 0.0;
  return out;
}

void BlendSpec::Validate() const {
  if (members.empty()) throw Error("blend needs at least one member");
  if (!(draw_threshold >= 0.0) || !std::isfinite(draw_threshold)) {
    throw Error("draw threshold must be a finite non-negative number");
  }
  for (const BlendMember& m : members) {
    if (!m.model || !m.store) throw Error("member " + m.name + " is incomplete");
    if (m.model->dim != m.store->dim()) {
      throw Error("member " + m.name + ": model dim " +
                  std::to_string(m.model->dim) + " != embedding dim " +
                  std::to_string(m.store->dim()));
    }
  }
}

BlendedRanks::BlendedRanks(const BlendSpec& spec,
                           std::span<const HeadlineId> pool,
                           ThreadPool* threads) {
  spec.Validate();
  index_.reserve(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) index_.emplace(pool[i], i);
  ranks_.assign(pool.size(), 0.0);
  if (pool.empty()) return;

  // Resolve every id up front so that a missing one fails before scoring.
  std::vector<std::vector<std::size_t>> rows(spec.members.size());
  for (std::size_t m = 0; m < spec.members.size(); ++m) {
    const BlendMember& member = spec.members[m];
    rows[m].reserve(pool.size());
    for (const HeadlineId& id : pool) {
      const auto row = member.store->Find(id);
      if (!row) {
        throw Error("member " + member.name + " has no embedding for id " + id);
      }
      rows[m].push_back(*row);
    }
  }

  std::vector<double> raw(pool.size());
  for (std::size_t m = 0; m < spec.members.size(); ++m) {
    const BlendMember& member = spec.members[m];
    auto score_one = [&](std::size_t i) {
      raw[i] = member.model->Score(member.store->row(rows[m][i]));
    };
    if (threads != nullptr) {
      threads->ParallelFor(pool.size(), score_one);
    } else {
      for (std::size_t i = 0; i < pool.size(); ++i) score_one(i);
    }
    const std::vector<double> normalized =
        NormalizeScores(raw, spec.normalization);
    // Running mean: k identical members reproduce the single member exactly.
    const double k = static_cast<double>(m + 1);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (m == 0) {
        ranks_[i] = normalized[i];
      } else {
        ranks_[i] += (normalized[i] - ranks_[i]) / k;
      }
    }
  }
}

double BlendedRanks::Rank(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw Error("id " + std::string(id) + " is not in the evaluation pool");
  }
  return ranks_[it->second];
}

PairScores BlendPair(const BlendSpec& spec, std::string_view left_id,
                     std::string_view right_id,
                     std::span<const HeadlineId> eval_pool) {
  const BlendedRanks ranks(spec, eval_pool);
  return {ranks.Rank(left_id), ranks.Rank(right_id)};
}

Label DecideLabel(const PairScores& scores, double draw_threshold) {
  const double d = scores.r_right - scores.r_left;
  if (std::abs(d) <= draw_threshold) return Label::kDraw;
  return d < 0 ? Label::kLeft : Label::kRight;
}

std::vector<Prediction> PredictDataset(const BlendSpec& spec,
                                       const PairDataset& dataset,
                                       ThreadPool* threads) {
  spec.Validate();
  const std::vector<HeadlineId> pool = DistinctIds(dataset);
  const BlendedRanks ranks(spec, pool, threads);
  std::vector<Prediction> out;
  out.reserve(dataset.size());
  for (const PairRecord& r : dataset.records) {
    Prediction p;
    p.record = r;
    p.scores = {ranks.Rank(r.left_id), ranks.Rank(r.right_id)};
    p.predicted = DecideLabel(p.scores, spec.draw_threshold);
    out.push_back(std::move(p));
  }
  return out;
}

void WritePredictions(std::span<const Prediction> predictions,
                      std::ostream& out) {
  for (const Prediction& p : predictions) {
    nlohmann::ordered_json obj = {
        {"left_url", p.record.left_id},
        {"right_url", p.record.right_id},
        {"r_left", p.scores.r_left},
        {"r_right", p.scores.r_right},
        {"pred", std::string(LabelName(p.predicted))}};
    out << obj.dump() << '\n';
  }
}

void SavePredictions(std::span<const Prediction> predictions,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  WritePredictions(predictions, out);
  out.flush();
  if (!out) throw Error("write failure on " + path.string());
}

std::vector<Prediction> ReadPredictions(std::istream& in) {
  std::vector<Prediction> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = " at line " + std::to_string(line);
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
      throw Error("malformed JSON" + where);
    }
    try {
      Prediction p;
      p.record.left_id = obj.at("left_url").get<std::string>();
      p.record.right_id = obj.at("right_url").get<std::string>();
      p.scores.r_left = obj.at("r_left").get<double>();
      p.scores.r_right = obj.at("r_right").get<double>();
      const auto label = ParseLabel(obj.at("pred").get<std::string>());
      if (!label || *label == Label::kBad) {
        throw Error("prediction must be left, right or draw" + where);
      }
      p.predicted = *label;
      out.push_back(std::move(p));
    } catch (const nlohmann::json::exception&) {
      throw Error("missing or mistyped prediction field" + where);
    }
  }
  return out;
}

std::vector<Prediction> LoadPredictions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open predictions file " + path.string());
  try {
    return ReadPredictions(in);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

}  // namespace headline_rank
