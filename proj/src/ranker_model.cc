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

#include "headline_rank/ranker_model.h"

#include <cmath>
#include <fstream>
#include <string>

#include "headline_rank/error.h"
#include "json.hpp"

namespace headline_rank {
namespace {

using nlohmann::json;

json HistoryToJson(const TrainingHistory& h) {
  return json{{"train_loss", h.train_loss},
              {"valid_loss", h.valid_loss},
              {"valid_weighted_accuracy", h.valid_weighted_accuracy}};
}

std::vector<double> NumberArray(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) return {};
  if (!it->is_array()) throw Error(std::string("history.") + key +
                                   " must be an array");
  std::vector<double> out;
  for (const json& v : *it) {
    if (!v.is_number()) throw Error(std::string("history.") + key +
                                    " must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

const json& Require(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw Error(std::string("model is missing \"") + key +
                                   "\"");
  return *it;
}

std::size_t RequireIndex(const json& v, const char* what) {
  if (!v.is_number_unsigned()) {
    throw Error(std::string(what) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

double RequireNumber(const json& v, const char* what) {
  if (!v.is_number()) throw Error(std::string(what) + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw Error(std::string(what) + " must be finite");
  return d;
}

RegressionTree TreeFromJson(const json& nodes) {
  if (!nodes.is_array() || nodes.empty()) {
    throw Error("each tree must be a non-empty array of nodes");
  }
  RegressionTree tree;
  tree.nodes.reserve(nodes.size());
  for (const json& n : nodes) {
    if (!n.is_array()) throw Error("tree node must be an array");
    TreeNode node;
    if (n.size() == 2 && n[0].is_null()) {
      node.value = RequireNumber(n[1], "leaf value");
    } else if (n.size() == 4) {
      const std::size_t feature = RequireIndex(n[0], "split feature");
      if (feature > INT32_MAX) throw Error("split feature out of range");
      node.feature = static_cast<std::int32_t>(feature);
      const double threshold = RequireNumber(n[1], "split threshold");
      node.threshold = static_cast<float>(threshold);
      if (static_cast<double>(node.threshold) != threshold) {
        throw Error("split threshold is not representable as float32");
      }
      const std::size_t left = RequireIndex(n[2], "left child");
      const std::size_t right = RequireIndex(n[3], "right child");
      if (left > UINT32_MAX || right > UINT32_MAX) {
        throw Error("child index out of range");
      }
      node.left = static_cast<std::uint32_t>(left);
      node.right = static_cast<std::uint32_t>(right);
    } else {
      throw Error("tree node must be [feature, threshold, left, right] or "
                  "[null, value]");
    }
    tree.nodes.push_back(node);
  }
  return tree;
}

}  // namespace

std::size_t RegressionTree::Route(std::span<const float> x) const {
  std::size_t i = 0;
  while (!nodes[i].is_leaf()) {
    const TreeNode& n = nodes[i];
    i = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left
                                                              : n.right;
  }
  return i;
}

double RankerModel::Score(std::span<const float> x) const {
  if (x.size() != dim) {
    throw Error("input has dim " + std::to_string(x.size()) +
                ", model expects " + std::to_string(dim));
  }
  for (const float v : x) {
    if (!std::isfinite(v)) throw Error("input contains a non-finite value");
  }
  double score = base_score;
  for (const RegressionTree& tree : trees) score += tree.Predict(x);
  return score;
}

void RankerModel::Validate() const {
  if (dim == 0) throw Error("model dim must be positive");
  for (std::size_t t = 0; t < trees.size(); ++t) {
    const auto& nodes = trees[t].nodes;
    if (nodes.empty()) throw Error("tree " + std::to_string(t) + " is empty");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const TreeNode& n = nodes[i];
      if (n.is_leaf()) continue;
      if (static_cast<std::size_t>(n.feature) >= dim) {
        throw Error("tree " + std::to_string(t) + " splits on feature " +
                    std::to_string(n.feature) + " >= dim");
      }
      if (n.left <= i || n.right <= i || n.left >= nodes.size() ||
          n.right >= nodes.size()) {
        throw Error("tree " + std::to_string(t) + " has an invalid child at "
                    "node " + std::to_string(i));
      }
    }
  }
}

void WriteModel(const RankerModel& model, std::ostream& out) {
  model.Validate();
  json trees = json::array();
  for (const RegressionTree& tree : model.trees) {
    json nodes = json::array();
    for (const TreeNode& n : tree.nodes) {
      if (n.is_leaf()) {
        nodes.push_back(json::array({nullptr, n.value}));
      } else {
        nodes.push_back(json::array({n.feature,
                                     static_cast<double>(n.threshold), n.left,
                                     n.right}));
      }
    }
    trees.push_back(std::move(nodes));
  }
  // nlohmann::json keeps keys sorted, so the output is canonical.
  const json doc = {{"version", RankerModel::kFormatVersion},
                    {"dim", model.dim},
                    {"base_score", model.base_score},
                    {"learning_rate", model.learning_rate},
                    {"best_iteration", model.best_iteration},
                    {"trees", std::move(trees)},
                    {"history", HistoryToJson(model.history)}};
  out << doc.dump() << '\n';
}

RankerModel ReadModel(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(std::string("model is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("model must be a JSON object");

  const json& version = Require(doc, "version");
  if (!version.is_number_integer() ||
      version.get<int>() != RankerModel::kFormatVersion) {
    throw Error("unsupported model version " + version.dump());
  }
  RankerModel model;
  model.dim = RequireIndex(Require(doc, "dim"), "dim");
  model.base_score = RequireNumber(Require(doc, "base_score"), "base_score");
  model.learning_rate =
      RequireNumber(Require(doc, "learning_rate"), "learning_rate");
  model.best_iteration =
      RequireIndex(Require(doc, "best_iteration"), "best_iteration");
  const json& trees = Require(doc, "trees");
  if (!trees.is_array()) throw Error("trees must be an array");
  for (const json& t : trees) model.trees.push_back(TreeFromJson(t));
  if (const auto it = doc.find("history"); it != doc.end()) {
    if (!it->is_object()) throw Error("history must be an object");
    model.history.train_loss = NumberArray(*it, "train_loss");
    model.history.valid_loss = NumberArray(*it, "valid_loss");
    model.history.valid_weighted_accuracy =
        NumberArray(*it, "valid_weighted_accuracy");
  }
  model.Validate();
  return model;
}

void SaveModel(const RankerModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  WriteModel(model, out);
  out.flush();
  if (!out) throw Error("write failure on " + path.string());
}

RankerModel LoadModel(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open model file " + path.string());
  try {
    return ReadModel(in);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

}  // namespace headline_rank
