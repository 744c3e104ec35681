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

#include "graphrtc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include <fmt/core.h>

#include "graphrtc/strutil.hpp"

namespace grtc {

std::string normalize_label(const std::string& name) {
  std::string_view body = trim(name);
  if (body.empty()) throw ParseError("node name is empty after trimming");
  std::string out;
  bool in_gap = false;
  for (char c : body) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_gap = true;
      continue;
    }
    if (in_gap) {
      out.push_back('_');
      in_gap = false;
    }
    out.push_back(c);
  }
  return out;
}

Graph Graph::make(bool directed, int node_count, std::vector<Edge> edges,
                  bool weighted, std::vector<std::string> labels,
                  int index_base) {
  if (node_count < 0) throw Error("node_count must be non-negative");
  if (index_base != 0 && index_base != 1) {
    throw Error("index_base must be 0 or 1");
  }
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count) {
      throw ParseError(fmt::format(
          "edge ({},{}) endpoint outside declared range [0,{})", e.u, e.v,
          node_count));
    }
    if (e.weight.has_value() != weighted) {
      throw ParseError("mixed weighted/unweighted edge tuples");
    }
  }
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != node_count) {
      throw Error("label count does not match node_count");
    }
    std::set<std::string> seen;
    for (const std::string& label : labels) {
      if (!seen.insert(normalize_label(label)).second) {
        throw Error(fmt::format("duplicate node label '{}'", label));
      }
    }
  }

  // Canonical edge list: u <= v on undirected graphs, duplicates collapsed
  // keeping the minimum weight, sorted by (u, v).
  std::map<std::pair<int, int>, std::optional<long long>> canon;
  for (Edge& e : edges) {
    if (!directed && e.u > e.v) std::swap(e.u, e.v);
    auto key = std::make_pair(e.u, e.v);
    auto it = canon.find(key);
    if (it == canon.end()) {
      canon.emplace(key, e.weight);
    } else if (weighted && *e.weight < *it->second) {
      it->second = e.weight;
    }
  }

  Graph g;
  g.directed_ = directed;
  g.weighted_ = weighted;
  g.node_count_ = node_count;
  g.index_base_ = index_base;
  g.labels_ = std::move(labels);
  g.edges_.reserve(canon.size());
  for (const auto& [key, weight] : canon) {
    g.edges_.push_back(Edge{key.first, key.second, weight});
  }

  g.adj_.assign(node_count, {});
  g.radj_.assign(node_count, {});
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.radj_[e.v].push_back(e.u);
    if (!directed && e.u != e.v) {
      g.adj_[e.v].push_back(e.u);
      g.radj_[e.u].push_back(e.v);
    }
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  for (auto& list : g.radj_) std::sort(list.begin(), list.end());
  return g;
}

void Graph::check_node(int u) const {
  if (u < 0 || u >= node_count_) {
    throw OracleError(
        fmt::format("node {} out of range [0,{})", u, node_count_));
  }
}

bool Graph::has_edge(int u, int v) const {
  check_node(u);
  check_node(v);
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<long long> Graph::edge_weight(int u, int v) const {
  if (!has_edge(u, v)) return std::nullopt;
  int a = u, b = v;
  if (!directed_ && a > b) std::swap(a, b);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::make_pair(a, b),
      [](const Edge& e, const std::pair<int, int>& key) {
        return std::make_pair(e.u, e.v) < key;
      });
  return it->weight;
}

const std::vector<int>& Graph::neighbors(int u) const {
  check_node(u);
  return adj_[u];
}

const std::vector<int>& Graph::predecessors(int u) const {
  check_node(u);
  return radj_[u];
}

namespace {

bool is_integer_token(std::string_view s) { return parse_int(s).has_value(); }

// Placeholder tuples shown as notation in problem statements.
bool is_placeholder(const std::vector<std::string>& parts) {
  if (parts.size() == 2) return parts[0] == "i" && parts[1] == "j";
  if (parts.size() == 3) {
    return parts[0] == "i" && parts[1] == "j" && parts[2] == "k";
  }
  return false;
}

bool plausible_name(std::string_view s) {
  if (s.empty() || s.size() > 48) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != ' ' && c != '_' &&
        c != '.' && c != '-') {
      return false;
    }
  }
  return true;
}

Graph parse_standard_input(const std::vector<std::string_view>& lines,
                           bool directed, bool weighted) {
  std::size_t row = 0;
  auto next_line = [&]() -> std::string_view {
    while (row < lines.size() && trim(lines[row]).empty()) ++row;
    if (row >= lines.size()) throw ParseError("unexpected end of input");
    return lines[row++];
  };

  auto header = split_ws(next_line());
  long long n = *parse_int(header[0]);
  long long m = header.size() > 1 ? *parse_int(header[1]) : 0;
  if (n < 0 || m < 0) throw ParseError("negative sizes in header line");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  long long min_endpoint = n;
  long long max_endpoint = -1;
  for (long long i = 0; i < m; ++i) {
    auto tokens = split_ws(next_line());
    const std::size_t expect = weighted ? 3 : 2;
    if (tokens.size() != expect) {
      throw ParseError(fmt::format("edge line {} has {} tokens, expected {}",
                                   i + 1, tokens.size(), expect));
    }
    auto u = parse_int(tokens[0]);
    auto v = parse_int(tokens[1]);
    if (!u || !v) throw ParseError("non-integer edge endpoint");
    std::optional<long long> w;
    if (weighted) {
      w = parse_int(tokens[2]);
      if (!w) throw ParseError("non-integer edge weight");
    }
    min_endpoint = std::min({min_endpoint, *u, *v});
    max_endpoint = std::max({max_endpoint, *u, *v});
    edges.push_back(Edge{static_cast<int>(*u), static_cast<int>(*v), w});
  }

  // 1-based data shows itself by avoiding 0 and reaching n.
  int base = (!edges.empty() && min_endpoint >= 1 && max_endpoint == n) ? 1 : 0;
  for (Edge& e : edges) {
    e.u -= base;
    e.v -= base;
  }
  return Graph::make(directed, static_cast<int>(n), std::move(edges), weighted,
                     {}, base);
}

struct TupleScan {
  // parts are trimmed; weight validity checked by the caller.
  std::vector<std::vector<std::string>> tuples;
};

TupleScan scan_tuples(const std::string& text) {
  TupleScan scan;
  static const std::regex group_re(R"(\(([^()]*)\))");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), group_re);
       it != std::sregex_iterator(); ++it) {
    std::string inner = (*it)[1].str();
    if (inner.find(',') == std::string::npos) continue;
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= inner.size()) {
      std::size_t comma = inner.find(',', pos);
      std::string_view piece(inner.data() + pos,
                             (comma == std::string::npos ? inner.size() : comma) - pos);
      parts.emplace_back(trim(piece));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    scan.tuples.push_back(std::move(parts));
  }
  return scan;
}

}  // namespace

Graph parse_graph_text(const std::string& text, bool directed, bool weighted) {
  auto lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && trim(lines[first]).empty()) ++first;
  if (first < lines.size()) {
    auto tokens = split_ws(lines[first]);
    if (tokens.size() == 2 && is_integer_token(tokens[0]) &&
        is_integer_token(tokens[1])) {
      return parse_standard_input(lines, directed, weighted);
    }
  }

  // Prose mode. Look for a declared node range first.
  static const std::regex range_re(
      R"((?:numbered\s+from|numbered|nodes)\s+(\d+)\s+to\s+(\d+))",
      std::regex::icase);
  std::smatch range;
  const bool has_range = std::regex_search(text, range, range_re);

  TupleScan scan = scan_tuples(text);
  const std::size_t arity = weighted ? 3 : 2;

  if (has_range) {
    long long lo = *parse_int(range[1].str());
    long long hi = *parse_int(range[2].str());
    if (hi < lo) throw ParseError("node range upper bound below lower bound");
    const long long n = hi - lo + 1;
    std::vector<Edge> edges;
    for (const auto& parts : scan.tuples) {
      if (is_placeholder(parts)) continue;
      bool all_int = std::all_of(parts.begin(), parts.end(), [](const auto& p) {
        return is_integer_token(p);
      });
      if (!all_int) continue;  // parenthesized prose
      if (parts.size() != arity) {
        if (parts.size() == 2 || parts.size() == 3) {
          throw ParseError(fmt::format(
              "edge tuple with {} fields in a {} graph", parts.size(),
              weighted ? "weighted" : "unweighted"));
        }
        throw ParseError(
            fmt::format("malformed edge tuple arity {}", parts.size()));
      }
      long long u = *parse_int(parts[0]) - lo;
      long long v = *parse_int(parts[1]) - lo;
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw ParseError(fmt::format("edge ({},{}) outside declared range {}..{}",
                                     parts[0], parts[1], lo, hi));
      }
      std::optional<long long> w;
      if (weighted) w = *parse_int(parts[2]);
      edges.push_back(
          Edge{static_cast<int>(u), static_cast<int>(v), w});
    }
    return Graph::make(directed, static_cast<int>(n), std::move(edges),
                       weighted, {}, static_cast<int>(lo));
  }

  // Named-node mode: indices follow first appearance order.
  std::vector<std::string> names;
  std::map<std::string, int> name_to_index;
  auto index_of = [&](const std::string& raw) {
    std::string label = normalize_label(raw);
    auto it = name_to_index.find(label);
    if (it != name_to_index.end()) return it->second;
    int idx = static_cast<int>(names.size());
    names.push_back(label);
    name_to_index.emplace(std::move(label), idx);
    return idx;
  };

  std::vector<Edge> edges;
  for (const auto& parts : scan.tuples) {
    if (is_placeholder(parts)) continue;
    if (parts.size() != arity) continue;
    if (!plausible_name(parts[0]) || !plausible_name(parts[1])) continue;
    std::optional<long long> w;
    if (weighted) {
      w = parse_int(parts[2]);
      if (!w) continue;
    }
    int u = index_of(parts[0]);
    int v = index_of(parts[1]);
    edges.push_back(Edge{u, v, w});
  }
  if (names.empty()) {
    throw ParseError("no node-range declaration or named edge tuples found");
  }
  const int node_count = static_cast<int>(names.size());
  return Graph::make(directed, node_count, std::move(edges), weighted,
                     std::move(names), 0);
}

StandardInput render_standard_input(const Graph& g,
                                    std::span<const int> query_nodes) {
  for (int q : query_nodes) {
    if (q < 0 || q >= g.node_count()) {
      throw Error(fmt::format("query node {} outside graph with {} nodes", q,
                              g.node_count()));
    }
  }
  const int base = g.index_base();
  std::string out =
      fmt::format("{} {}\n", g.node_count(), g.edge_count());
  for (const Edge& e : g.edges()) {
    if (g.weighted()) {
      out += fmt::format("{} {} {}\n", e.u + base, e.v + base, *e.weight);
    } else {
      out += fmt::format("{} {}\n", e.u + base, e.v + base);
    }
  }
  if (!query_nodes.empty()) {
    for (std::size_t i = 0; i < query_nodes.size(); ++i) {
      out += fmt::format("{}{}", i == 0 ? "" : " ", query_nodes[i] + base);
    }
    out += "\n";
  }
  return StandardInput{std::move(out)};
}

}  // namespace grtc
