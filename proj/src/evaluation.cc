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

#include "headline_rank/evaluation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "headline_rank/error.h"
#include "json.hpp"

namespace headline_rank {
namespace {

void CheckLengths(std::span<const Label> gold, std::span<const Label> pred) {
  if (gold.size() != pred.size()) {
    throw Error("gold has " + std::to_string(gold.size()) +
                " rows, predictions have " + std::to_string(pred.size()));
  }
  for (const Label p : pred) {
    if (p == Label::kBad) throw Error("predicted label cannot be bad");
  }
}

constexpr std::array<Label, 3> kScoredLabels = {Label::kLeft, Label::kRight,
                                                Label::kDraw};

}  // namespace

std::size_t LabelIndex(Label label) {
  switch (label) {
    case Label::kLeft:
      return 0;
    case Label::kRight:
      return 1;
    case Label::kDraw:
      return 2;
    case Label::kBad:
      break;
  }
  throw Error("bad label has no metric index");
}

double WeightedAccuracy(std::span<const Label> gold,
                        std::span<const Label> pred) {
  CheckLengths(gold, pred);
  double total = 0.0;
  std::size_t rows = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == Label::kBad) continue;
    total += kAgreementWeights[LabelIndex(gold[i])][LabelIndex(pred[i])];
    ++rows;
  }
  if (rows == 0) throw Error("metric undefined: no non-bad gold rows");
  return total / static_cast<double>(rows);
}

ConfusionMatrix Confusion(std::span<const Label> gold,
                          std::span<const Label> pred) {
  CheckLengths(gold, pred);
  ConfusionMatrix m{};
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == Label::kBad) continue;
    ++m[LabelIndex(gold[i])][LabelIndex(pred[i])];
  }
  return m;
}

std::vector<ErrorExample> ErrorReport(const PairDataset& dataset,
                                      std::span<const Prediction> predictions,
                                      std::size_t limit) {
  std::vector<ErrorExample> errors;
  const std::size_t n = std::min(dataset.size(), predictions.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Label gold = dataset.records[i].label;
    const Label pred = predictions[i].predicted;
    const bool opposite = (gold == Label::kLeft && pred == Label::kRight) ||
                          (gold == Label::kRight && pred == Label::kLeft);
    if (!opposite) continue;
    ErrorExample e;
    e.index = i;
    e.prediction = predictions[i];
    e.prediction.record.label = gold;
    e.margin = std::abs(predictions[i].scores.r_right -
                        predictions[i].scores.r_left);
    errors.push_back(std::move(e));
  }
  std::stable_sort(errors.begin(), errors.end(),
                   [](const ErrorExample& a, const ErrorExample& b) {
                     return a.margin > b.margin;
                   });
  if (errors.size() > limit) errors.resize(limit);
  return errors;
}

EvaluationReport Evaluate(const PairDataset& gold,
                          std::span<const Prediction> predictions,
                          std::size_t error_limit) {
  if (gold.size() != predictions.size()) {
    throw Error("gold has " + std::to_string(gold.size()) +
                " rows, predictions have " +
                std::to_string(predictions.size()));
  }
  std::vector<Label> g, p;
  g.reserve(gold.size());
  p.reserve(gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const PairRecord& r = gold.records[i];
    const PairRecord& q = predictions[i].record;
    if (r.left_id != q.left_id || r.right_id != q.right_id) {
      throw Error("row " + std::to_string(i + 1) +
                  ": prediction ids do not match the gold pair");
    }
    g.push_back(r.label);
    p.push_back(predictions[i].predicted);
  }
  EvaluationReport report;
  report.weighted_accuracy = WeightedAccuracy(g, p);
  report.confusion = Confusion(g, p);
  report.retained_rows = static_cast<std::size_t>(
      std::count_if(g.begin(), g.end(), [](Label l) { return l != Label::kBad; }));
  report.errors = ErrorReport(gold, predictions, error_limit);
  return report;
}

void PrintReport(const EvaluationReport& report, std::ostream& out) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "weighted accuracy: %.4f (%zu rows)\n",
                report.weighted_accuracy, report.retained_rows);
  out << buf;
  out << "confusion (rows = gold, columns = predicted)\n";
  std::snprintf(buf, sizeof(buf), "%8s %8s %8s %8s\n", "", "left", "right",
                "draw");
  out << buf;
  for (const Label gold : kScoredLabels) {
    const auto& row = report.confusion[LabelIndex(gold)];
    std::snprintf(buf, sizeof(buf), "%8s %8zu %8zu %8zu\n",
                  std::string(LabelName(gold)).c_str(), row[0], row[1], row[2]);
    out << buf;
  }
  if (report.errors.empty()) return;
  out << "most confident left/right confusions\n";
  for (const ErrorExample& e : report.errors) {
    const Prediction& p = e.prediction;
    std::snprintf(buf, sizeof(buf), "  #%zu gold=%s pred=%s margin=%.4f ",
                  e.index + 1, std::string(LabelName(p.record.label)).c_str(),
                  std::string(LabelName(p.predicted)).c_str(), e.margin);
    out << buf << p.record.left_id << " | " << p.record.right_id << '\n';
  }
}

void WriteReportJson(const EvaluationReport& report, std::ostream& out) {
  nlohmann::ordered_json errors = nlohmann::ordered_json::array();
  for (const ErrorExample& e : report.errors) {
    const Prediction& p = e.prediction;
    errors.push_back({{"index", e.index},
                      {"left_url", p.record.left_id},
                      {"right_url", p.record.right_id},
                      {"gold", std::string(LabelName(p.record.label))},
                      {"pred", std::string(LabelName(p.predicted))},
                      {"r_left", p.scores.r_left},
                      {"r_right", p.scores.r_right},
                      {"margin", e.margin}});
  }
  nlohmann::ordered_json doc = {
      {"weighted_accuracy", report.weighted_accuracy},
      {"rows", report.retained_rows},
      {"labels", {"left", "right", "draw"}},
      {"confusion", report.confusion},
      {"errors", std::move(errors)}};
  out << doc.dump(2) << '\n';
}

}  // namespace headline_rank
