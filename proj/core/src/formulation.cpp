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

#include "graphrtc/formulation.hpp"

#include <cctype>
#include <regex>

#include <fmt/core.h>
#include <openssl/sha.h>

#include "graphrtc/strutil.hpp"

namespace grtc {

void ProblemFormulation::validate() const {
  if (trim(pure_problem).empty()) throw Error("pure_problem is empty");
  if (trim(input_description).empty()) {
    throw Error("input_description is empty");
  }
  if (trim(output_description).empty()) {
    throw Error("output_description is empty");
  }
  // A data-free statement describes edges as variables; concrete integer
  // tuples mean the formatting stage failed to strip the instance data.
  static const std::regex tuple_re(R"(\(\s*\d+\s*,\s*\d+\s*(,\s*-?\d+\s*)?\))");
  if (std::regex_search(pure_problem, tuple_re)) {
    throw Error("pure_problem still contains concrete edge tuples");
  }
}

std::string ProblemFormulation::to_text() const {
  return fmt::format("Problem\n{}\nInput\n{}\nOutput\n{}\n",
                     trim(pure_problem), trim(input_description),
                     trim(output_description));
}

ProblemFormulation ProblemFormulation::from_text(const std::string& text) {
  ProblemFormulation f;
  std::string* current = nullptr;
  bool saw_problem = false, saw_input = false, saw_output = false;
  for (std::string_view line : split_lines(text)) {
    std::string_view stripped = trim(line);
    if (stripped == "Problem" && !saw_problem) {
      current = &f.pure_problem;
      saw_problem = true;
      continue;
    }
    if (stripped == "Input" && saw_problem && !saw_input) {
      current = &f.input_description;
      saw_input = true;
      continue;
    }
    if (stripped == "Output" && saw_input && !saw_output) {
      current = &f.output_description;
      saw_output = true;
      continue;
    }
    if (current != nullptr) {
      current->append(line);
      current->push_back('\n');
    }
  }
  if (!saw_problem || !saw_input || !saw_output) {
    throw ParseError(
        "formulation text lacks Problem/Input/Output header lines");
  }
  f.pure_problem = std::string(trim(f.pure_problem));
  f.input_description = std::string(trim(f.input_description));
  f.output_description = std::string(trim(f.output_description));
  return f;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(),
         digest);
  std::string hex;
  hex.reserve(2 * SHA256_DIGEST_LENGTH);
  for (unsigned char byte : digest) hex += fmt::format("{:02x}", byte);
  return hex;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_gap = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_gap = true;
      continue;
    }
    if (in_gap && !out.empty()) out.push_back(' ');
    in_gap = false;
    out.push_back(c);
  }
  return out;
}

CacheKey canonical_formulation_hash(const ProblemFormulation& f) {
  // Field separators prevent cross-field collisions; case folding and
  // whitespace collapse make the key robust to reformatting.
  std::string canon;
  for (const std::string* field :
       {&f.pure_problem, &f.input_description, &f.output_description}) {
    canon += to_lower_ascii(collapse_whitespace(*field));
    canon.push_back('\x1f');
  }
  return CacheKey{sha256_hex(canon)};
}

CacheKey CacheKey::of_formulation(const ProblemFormulation& f) {
  return canonical_formulation_hash(f);
}

CacheKey CacheKey::of_task_id(std::string_view task_id) {
  std::string keyed = "task_id\x1f";
  keyed += task_id;
  return CacheKey{sha256_hex(keyed)};
}

}  // namespace grtc
