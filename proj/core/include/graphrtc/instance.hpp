// Copyright 2026 The graphrtc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHRTC_INSTANCE_HPP_
#define GRAPHRTC_INSTANCE_HPP_

#include <map>
#include <optional>
#include <string>

namespace grtc {

// One benchmark problem: the natural-language statement with its data
// embedded, the expected answer, and free-form metadata (family, sizes,
// seed). task_id names the problem *type*; instances of the same type
// share it, which is what lets pipeline artifacts be reused across them.
struct ProblemInstance {
  std::string task_id;
  std::string problem_text;
  std::optional<std::string> gold_answer;
  std::map<std::string, std::string> meta;

  friend bool operator==(const ProblemInstance&,
                         const ProblemInstance&) = default;
};

}  // namespace grtc

#endif  // GRAPHRTC_INSTANCE_HPP_
