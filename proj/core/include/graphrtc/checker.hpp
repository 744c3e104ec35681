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

#ifndef GRAPHRTC_CHECKER_HPP_
#define GRAPHRTC_CHECKER_HPP_

#include <string>

#include "graphrtc/generator.hpp"
#include "graphrtc/instance.hpp"

namespace grtc {

struct CheckResult {
  bool correct = false;
  // Short machine-readable cause when wrong: "format", "mismatch",
  // "invalid_order", "not_a_path", "suboptimal", "not_independent", ...
  std::string reason;
};

// Judges a predicted answer against an instance. Validity-aware kinds
// (valid_order, valid_path_optimal, valid_set_optimal) re-parse the graph
// from the problem text and accept any answer that is structurally valid
// and matches the gold optimum, not just the gold witness itself.
// Unparseable predictions are wrong with reason "format", never a crash.
CheckResult check_answer(const TaskSpec& spec, const std::string& predicted,
                         const ProblemInstance& inst);

// Relative tolerance for numeric_tol comparisons.
inline constexpr double kNumericRelTol = 1e-6;

}  // namespace grtc

#endif  // GRAPHRTC_CHECKER_HPP_
