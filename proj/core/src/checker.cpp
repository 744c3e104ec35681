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

#include "graphrtc/checker.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <set>
#include <vector>

#include "graphrtc/strutil.hpp"

namespace grtc {
namespace {

CheckResult wrong(const char* reason) { return {false, reason}; }

std::optional<double> parse_double(std::string_view s) {
  const std::string t{trim(s)};
  if (t.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) return std::nullopt;
  return v;
}

// Node list tokens; commas are treated as separators and an optional
// leading Yes is dropped so witness answers like "Yes 0 1 2" parse.
std::optional<std::vector<int>> parse_node_list(const std::string& text) {
  const std::string cleaned = replace_all(text, ",", " ");
  auto tokens = split_ws(cleaned);
  if (!tokens.empty() && to_lower_ascii(tokens.front()) == "yes") {
    tokens.erase(tokens.begin());
  }
  std::vector<int> nodes;
  nodes.reserve(tokens.size());
  for (const auto token : tokens) {
    const auto value = parse_int(token);
    if (!value) return std::nullopt;
    nodes.push_back(static_cast<int>(*value));
  }
  return nodes;
}

std::vector<std::string> trimmed_lines(const std::string& text) {
  std::vector<std::string> lines;
  for (const auto line : split_lines(text)) {
    lines.emplace_back(trim(line));
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

const std::string& gold_of(const ProblemInstance& inst) {
  static const std::string empty;
  return inst.gold_answer ? *inst.gold_answer : empty;
}

CheckResult check_yes_no(const std::string& predicted,
                         const std::string& gold) {
  const std::string p = to_lower_ascii(trim(predicted));
  if (p != "yes" && p != "no") return wrong("format");
  return p == to_lower_ascii(trim(gold)) ? CheckResult{true, ""}
                                         : wrong("mismatch");
}

CheckResult check_exact_int(const std::string& predicted,
                            const std::string& gold) {
  const auto p = parse_int(trim(predicted));
  if (!p) return wrong("format");
  const auto g = parse_int(trim(gold));
  return (g && *p == *g) ? CheckResult{true, ""} : wrong("mismatch");
}

CheckResult check_numeric(const std::string& predicted,
                          const std::string& gold) {
  const auto p = parse_double(predicted);
  if (!p) return wrong("format");
  const auto g = parse_double(gold);
  if (!g) return wrong("mismatch");
  const double scale = std::max(1.0, std::fabs(*g));
  return std::fabs(*p - *g) <= kNumericRelTol * scale ? CheckResult{true, ""}
                                                      : wrong("mismatch");
}

CheckResult check_valid_order(const Graph& g, const std::string& predicted) {
  const auto nodes = parse_node_list(predicted);
  if (!nodes || nodes->empty()) return wrong("format");
  const int n = g.node_count();
  if (static_cast<int>(nodes->size()) != n) return wrong("invalid_order");
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    const int node = (*nodes)[i];
    if (node < 0 || node >= n || position[node] != -1) {
      return wrong("invalid_order");
    }
    position[node] = i;
  }
  for (const auto& e : g.edges()) {
    if (position[e.u] > position[e.v]) return wrong("invalid_order");
  }
  return {true, ""};
}

CheckResult check_valid_path(const Graph& g, const std::string& predicted,
                             const std::string& gold) {
  const std::string p = to_lower_ascii(trim(predicted));
  const bool gold_no = to_lower_ascii(trim(gold)) == "no";
  if (gold_no) return p == "no" ? CheckResult{true, ""} : wrong("mismatch");
  if (p == "no") return wrong("mismatch");
  const auto nodes = parse_node_list(predicted);
  if (!nodes || nodes->empty()) return wrong("format");
  const int n = g.node_count();
  if (static_cast<int>(nodes->size()) != n) return wrong("not_a_path");
  std::vector<char> seen(n, 0);
  for (const int node : *nodes) {
    if (node < 0 || node >= n || seen[node]) return wrong("not_a_path");
    seen[node] = 1;
  }
  for (std::size_t i = 1; i < nodes->size(); ++i) {
    if (!g.has_edge((*nodes)[i - 1], (*nodes)[i])) return wrong("not_a_path");
  }
  return {true, ""};
}

CheckResult check_valid_set(const Graph& g, const std::string& predicted,
                            const std::string& gold) {
  const auto nodes = parse_node_list(predicted);
  if (!nodes) return wrong("format");
  const int n = g.node_count();
  std::set<int> unique;
  for (const int node : *nodes) {
    if (node < 0 || node >= n || !unique.insert(node).second) {
      return wrong("format");
    }
  }
  for (const int a : *nodes) {
    for (const int b : *nodes) {
      if (a < b && g.has_edge(a, b)) return wrong("not_independent");
    }
  }
  const std::size_t optimal = split_ws(gold).size();
  return unique.size() == optimal ? CheckResult{true, ""}
                                  : wrong("suboptimal");
}

CheckResult check_multiline(const std::string& predicted,
                            const std::string& gold) {
  const auto p = trimmed_lines(predicted);
  if (p.empty()) return wrong("format");
  return p == trimmed_lines(gold) ? CheckResult{true, ""} : wrong("mismatch");
}

}  // namespace

CheckResult check_answer(const TaskSpec& spec, const std::string& predicted,
                         const ProblemInstance& inst) {
  const std::string& gold = gold_of(inst);
  try {
    switch (spec.checker) {
      case CheckerKind::yes_no:
        return check_yes_no(predicted, gold);
      case CheckerKind::exact_int:
        return check_exact_int(predicted, gold);
      case CheckerKind::numeric_tol:
        return check_numeric(predicted, gold);
      case CheckerKind::valid_order:
        return check_valid_order(instance_graph(spec, inst), predicted);
      case CheckerKind::valid_path_optimal:
        return check_valid_path(instance_graph(spec, inst), predicted, gold);
      case CheckerKind::valid_set_optimal:
        return check_valid_set(instance_graph(spec, inst), predicted, gold);
      case CheckerKind::exact_text_multiline:
        return check_multiline(predicted, gold);
    }
  } catch (const Error&) {
    return wrong("format");
  }
  return wrong("format");
}

}  // namespace grtc
