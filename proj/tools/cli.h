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

#ifndef HEADLINE_RANK_TOOLS_CLI_H_
#define HEADLINE_RANK_TOOLS_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "headline_rank/ensemble.h"
#include "headline_rank/pooling.h"
#include "headline_rank/trainer.h"
#include "headline_rank/training_pairs.h"

namespace headline_rank::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Parses argv (argv[0] is the program name) and runs one subcommand.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

struct LayerFile {
  std::string label;
  std::filesystem::path path;
};

struct AblationOptions {
  std::filesystem::path pairs;
  std::vector<LayerFile> token_files;
  std::vector<PoolingMethod> methods = {PoolingMethod::kMeanOverTokens};
  HyperParams params;
  DrawPolicy draw_policy = DrawPolicy::kExclude;
  double test_fraction = 0.2;
  double valid_fraction = 0.2;
  double draw_threshold = 0.1;
  int repeats = 1;
  std::uint64_t seed = 42;
  int num_threads = 1;
};

struct AblationRow {
  std::string representation;  // "<label> <method>"
  std::vector<double> accuracy;  // one per repeat
  double mean = 0.0;
};

// Pools every (file, method), then for each repeat trains on one split and
// scores weighted accuracy on that repeat's held-out pairs.
std::vector<AblationRow> RunAblation(const AblationOptions& options,
                                     std::ostream& log);

void PrintAblationGrid(const std::vector<AblationRow>& rows, std::ostream& out);

}  // namespace headline_rank::cli

#endif  // HEADLINE_RANK_TOOLS_CLI_H_
