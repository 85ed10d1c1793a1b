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

#ifndef HEADLINE_RANK_LABEL_H_
#define HEADLINE_RANK_LABEL_H_

#include <optional>
#include <string_view>

namespace headline_rank {

// Markup tag of a headline pair. Bad marks a clustering error and never
// contributes to training or to the metric.
enum class Label { kLeft, kRight, kDraw, kBad };

// Returns std::nullopt for anything outside {"left","right","draw","bad"}.
std::optional<Label> ParseLabel(std::string_view text);

std::string_view LabelName(Label label);

// Left <-> Right, Draw and Bad unchanged.
Label MirrorLabel(Label label);

}  // namespace headline_rank

#endif  // HEADLINE_RANK_LABEL_H_
