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

#ifndef GRAPHRTC_FORMULATION_HPP_
#define GRAPHRTC_FORMULATION_HPP_

#include <string>
#include <string_view>

#include "graphrtc/error.hpp"

namespace grtc {

// Data-free problem statement plus the standardized input/output
// descriptions produced by the formatting stage.
struct ProblemFormulation {
  std::string pure_problem;
  std::string input_description;
  std::string output_description;

  // Throws Error if any field is empty or pure_problem still contains
  // concrete edge tuples.
  void validate() const;

  // Canonical rendering with "Problem" / "Input" / "Output" header lines.
  std::string to_text() const;
  static ProblemFormulation from_text(const std::string& text);

  friend bool operator==(const ProblemFormulation&,
                         const ProblemFormulation&) = default;
};

// Cache key: SHA-256 hex digest (64 chars), stable across runs and
// platforms. Not a security boundary.
struct CacheKey {
  std::string digest;

  static CacheKey of_formulation(const ProblemFormulation& f);
  static CacheKey of_task_id(std::string_view task_id);

  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

// Digest over the three formulation fields after whitespace collapse and
// ASCII case folding, so reformatting does not change the key.
CacheKey canonical_formulation_hash(const ProblemFormulation& f);

std::string sha256_hex(std::string_view data);

// Collapses whitespace runs to single spaces and trims the ends.
std::string collapse_whitespace(std::string_view s);

}  // namespace grtc

#endif  // GRAPHRTC_FORMULATION_HPP_
