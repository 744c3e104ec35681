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

#include "graphrtc/prompts.hpp"

#include <fmt/core.h>

#include "graphrtc/pipeline.hpp"
#include "graphrtc/strutil.hpp"

namespace grtc::prompts {

// The stage templates are fixed text with named {slot} markers. Spelling
// and wording are intentional and must not be "fixed"; downstream golden
// files pin every byte outside the slots.

const std::string_view kFormattingTemplate =
    R"TPL(Given a problem description, you need to write input and ouput description for this series of problems with different inputs.
Example:
Problem Formulation:
Find the shortest path between two nodes in an undirected graph. In an undirected graph, (i,j,k) means that node i and node j are connected with an undirected edge with weight k. Given a graph and a pair of nodes, you need to output the shortest path between the two nodes. Q: The nodes are numbered from 0 to 9, and the edges are: (0,4,2) (0,8,1) (0,7,7) (0,6,3) (0,3,1) (3,4,4) (3,7,7) (3,8,1) (3,6,10) (4,5,3) (5,6,3) (6,8,1). Give the weight of the shortest path from node 8 to node 5.

Input
The first line contains two integers n and m - the number of vertices and the number of edges, respectively.

Then m lines follow. Each line contains three integers u, v and w, where u and v are the vertices connected by an undirected edge, and w is the weight of the edge.

The last line contains two integers s and t - the source node s and the target node t for which the shortest path distance is to be calculated.

Output
Output a single integer representing the distance of the shortest path from node s to node t. If there is no path, print -1.

Now given a problem desciption:
{problem}

Only output the input and output description in the following format:
Input
<input_description>

Output
<output_description>
)TPL";

const std::string_view kPureProblemTemplate =
    R"TPL(Given a problem description, you need to extract the problem itself by substituting data with variables.
Problem Formulation:
{problem}
Extract Result:
Problem
<extracted_problem>
Input
{input}
Output
{output}
Now complete the <extracted_problem> part, only output the part in the following format:
Pure Problem
<pure_problem_here>
)TPL";

const std::string_view kExtractingTemplate =
    R"TPL(Problem Formulation:
{problem}
Write a Python program that use regular expressions to
1. extract input data from the Problem Description
2. convert the input data to standard input strictly following the Input Description below.
Input Description:
{input}
Note: 1. The input data in different problems is different, so use regular expressions to extract the input data instead of copying directly.
2. Sometimes the node name may contain spaces. Replace the spaces with _ to prevent reading errors and ambiguity.
3. Sometimes the node name may contain period ".". Pay attention to this when writing the regular expression.
4. Sometimes there may exist example edge like (i,j), remember to remove the example edge.
The problem_path and the standard_input_path should be implemented as positional arguments of argparse.
Output the Python program in the following format:
```python
<python_code_here>
```
)TPL";

const std::string_view kReasoningTemplate =
    R"TPL(Problem Formulation:
{formulation}
Think step by step, design an efficient algorithm to solve this problem, write a corresponding pseudocode.
Reasoning first and summarize your pseudocode in the following format:
Pseudocode
<your pseudocode>
)TPL";

const std::string_view kCodingTemplate =
    R"TPL(Problem Formulation:
{formulation}
Pseudocode:
{pseudocode}
Write Python code to solve the problem according to the pseudocode.
Only output your Python code in the following format:
```python
<python_code_here>
```
)TPL";

const std::string_view kDirectTemplate =
    R"TPL(Solve the following problem. Output only the final answer.
{problem}
)TPL";

const std::string_view kRepairContextTemplate =
    R"TPL(
The previous program failed when executed.
Outcome: {outcome}
Error output:
{stderr}
Fix the program. Only output your Python code in the following format:
```python
<python_code_here>
```
)TPL";

const std::string_view kPseudocodeSentinel = "Pseudocode";
const std::string_view kPureProblemSentinel = "Pure Problem";
const std::string_view kInputHeader = "Input";
const std::string_view kOutputHeader = "Output";

std::string formulation_block(const ProblemFormulation& f) {
  return fmt::format("Problem\n{}\nInput\n{}\nOutput\n{}", f.pure_problem,
                     f.input_description, f.output_description);
}

std::string render_formatting(const std::string& problem_text) {
  return replace_all(kFormattingTemplate, "{problem}", problem_text);
}

std::string render_pure_problem(const std::string& problem_text,
                                const std::string& input_description,
                                const std::string& output_description) {
  std::string prompt = replace_all(kPureProblemTemplate, "{problem}",
                                   problem_text);
  prompt = replace_all(prompt, "{input}", input_description);
  return replace_all(prompt, "{output}", output_description);
}

std::string render_extracting(const ProblemFormulation& f) {
  std::string prompt =
      replace_all(kExtractingTemplate, "{problem}", f.pure_problem);
  return replace_all(prompt, "{input}", f.input_description);
}

std::string render_reasoning(const ProblemFormulation& f) {
  return replace_all(kReasoningTemplate, "{formulation}",
                     formulation_block(f));
}

std::string render_coding(const ProblemFormulation& f, const Pseudocode& p) {
  std::string prompt =
      replace_all(kCodingTemplate, "{formulation}", formulation_block(f));
  return replace_all(prompt, "{pseudocode}", p.text);
}

std::string render_repair(const ProblemFormulation& f, const Pseudocode& p,
                          const sandbox::ExecutionResult& err) {
  std::string context = replace_all(kRepairContextTemplate, "{outcome}",
                                    sandbox::outcome_name(err.outcome));
  context = replace_all(context, "{stderr}", err.stderr_text);
  return render_coding(f, p) + context;
}

std::string render_direct(const std::string& problem_text) {
  return replace_all(kDirectTemplate, "{problem}", problem_text);
}

}  // namespace grtc::prompts
