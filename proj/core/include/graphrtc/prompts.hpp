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

#ifndef GRAPHRTC_PROMPTS_HPP_
#define GRAPHRTC_PROMPTS_HPP_

#include <string>
#include <string_view>

#include "graphrtc/formulation.hpp"
#include "graphrtc/sandbox.hpp"

namespace grtc {
struct Pseudocode;
}

// Prompt templates for every stage, kept verbatim (including the source's
// spelling quirks) with {slot} placeholders, plus the renderers that fill
// them. Renderers substitute slots only; the surrounding template text is
// never touched, which the golden-file tests rely on.
namespace grtc::prompts {

extern const std::string_view kFormattingTemplate;    // {problem}
extern const std::string_view kPureProblemTemplate;   // {problem} {input} {output}
extern const std::string_view kExtractingTemplate;    // {problem} {input}
extern const std::string_view kReasoningTemplate;     // {formulation}
extern const std::string_view kCodingTemplate;        // {formulation} {pseudocode}
extern const std::string_view kDirectTemplate;        // {problem}
extern const std::string_view kRepairContextTemplate; // {outcome} {stderr}

// Sentinel lines the completions are parsed around.
extern const std::string_view kPseudocodeSentinel;    // "Pseudocode"
extern const std::string_view kPureProblemSentinel;   // "Pure Problem"
extern const std::string_view kInputHeader;           // "Input"
extern const std::string_view kOutputHeader;          // "Output"

// The formulation as stages see it: Problem / Input / Output sections.
std::string formulation_block(const ProblemFormulation& f);

std::string render_formatting(const std::string& problem_text);
std::string render_pure_problem(const std::string& problem_text,
                                const std::string& input_description,
                                const std::string& output_description);
std::string render_extracting(const ProblemFormulation& f);
std::string render_reasoning(const ProblemFormulation& f);
std::string render_coding(const ProblemFormulation& f, const Pseudocode& p);
std::string render_repair(const ProblemFormulation& f, const Pseudocode& p,
                          const sandbox::ExecutionResult& err);
std::string render_direct(const std::string& problem_text);

}  // namespace grtc::prompts

#endif  // GRAPHRTC_PROMPTS_HPP_
