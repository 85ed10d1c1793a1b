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

#include "headline_rank/label.h"

namespace headline_rank {

std::optional<Label> ParseLabel(std::string_view text) {
  if (text == "left") return Label::kLeft;
  if (text == "right") return Label::kRight;
  if (text == "draw") return Label::kDraw;
  if (text == "bad") return Label::kBad;
  return std::nullopt;
}

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kLeft:
      return "left";
    case Label::kRight:
      return "right";
    case Label::kDraw:
      return "draw";
    case Label::kBad:
      return "bad";
  }
  return "bad";
}

Label MirrorLabel(Label label) {
  switch (label) {
    case Label::kLeft:
      return Label::kRight;
    case Label::kRight:
      return Label::kLeft;
    default:
      return label;
  }
}

}  // namespace headline_rank
