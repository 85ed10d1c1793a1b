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

#ifndef HEADLINE_RANK_ERROR_H_
#define HEADLINE_RANK_ERROR_H_

#include <stdexcept>
#include <string>

namespace headline_rank {

// Raised for malformed inputs, violated preconditions and I/O failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace headline_rank

#endif  // HEADLINE_RANK_ERROR_H_
