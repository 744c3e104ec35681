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

#include "verify.hpp"

#include <algorithm>
#include <set>

namespace verify {
namespace {

bool in_range(const grtc::Graph& g, const std::vector<int>& nodes) {
  return std::all_of(nodes.begin(), nodes.end(), [&](int u) {
    return u >= 0 && u < g.node_count();
  });
}

bool all_distinct(const std::vector<int>& nodes) {
  std::set<int> seen(nodes.begin(), nodes.end());
  return seen.size() == nodes.size();
}

bool is_permutation_of_all(const grtc::Graph& g,
                           const std::vector<int>& nodes) {
  return static_cast<int>(nodes.size()) == g.node_count() &&
         in_range(g, nodes) && all_distinct(nodes);
}

long long step_cost(const grtc::Graph& g, int u, int v) {
  if (!g.weighted()) return 1;
  const auto w = g.edge_weight(u, v);
  return w ? *w : 0;
}

}  // namespace

bool path(const grtc::Graph& g, const std::vector<int>& nodes, int s, int t,
          long long cost) {
  if (nodes.empty() || !in_range(g, nodes) || !all_distinct(nodes)) {
    return false;
  }
  if (nodes.front() != s || nodes.back() != t) return false;
  long long total = 0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!g.has_edge(nodes[i], nodes[i + 1])) return false;
    total += step_cost(g, nodes[i], nodes[i + 1]);
  }
  return total == cost;
}

bool hamilton(const grtc::Graph& g, const std::vector<int>& nodes) {
  if (!is_permutation_of_all(g, nodes)) return false;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!g.has_edge(nodes[i], nodes[i + 1])) return false;
  }
  return true;
}

bool topo(const grtc::Graph& g, const std::vector<int>& order) {
  if (!is_permutation_of_all(g, order)) return false;
  std::vector<int> position(g.node_count(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = static_cast<int>(i);
  }
  for (const grtc::Edge& e : g.edges()) {
    if (position[e.u] >= position[e.v]) return false;
  }
  return true;
}

bool independent_set(const grtc::Graph& g, const std::vector<int>& nodes,
                     long long size) {
  if (static_cast<long long>(nodes.size()) != size || !in_range(g, nodes) ||
      !all_distinct(nodes)) {
    return false;
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (g.has_edge(nodes[i], nodes[j]) || g.has_edge(nodes[j], nodes[i])) {
        return false;
      }
    }
  }
  return true;
}

bool vertex_cover(const grtc::Graph& g, const std::vector<int>& nodes,
                  long long size) {
  if (static_cast<long long>(nodes.size()) != size || !in_range(g, nodes) ||
      !all_distinct(nodes)) {
    return false;
  }
  const std::set<int> cover(nodes.begin(), nodes.end());
  for (const grtc::Edge& e : g.edges()) {
    if (!cover.contains(e.u) && !cover.contains(e.v)) return false;
  }
  return true;
}

bool clique(const grtc::Graph& g, const std::vector<int>& nodes,
            long long size) {
  if (static_cast<long long>(nodes.size()) != size || !in_range(g, nodes) ||
      !all_distinct(nodes)) {
    return false;
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!g.has_edge(nodes[i], nodes[j])) return false;
    }
  }
  return true;
}

bool spanning_tree(const grtc::Graph& g,
                   const std::vector<std::pair<int, int>>& tree,
                   long long weight) {
  if (static_cast<int>(tree.size()) != g.node_count() - 1) return false;
  std::set<std::pair<int, int>> seen;
  long long total = 0;
  std::vector<int> group(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) group[i] = i;
  for (const auto& [u, v] : tree) {
    if (u < 0 || u >= g.node_count() || v < 0 || v >= g.node_count()) {
      return false;
    }
    if (!g.has_edge(u, v)) return false;
    const auto key = std::minmax(u, v);
    if (!seen.insert(key).second) return false;
    total += step_cost(g, u, v);
    const int from = group[u];
    const int to = group[v];
    if (from == to) return false;  // a repeated group means a cycle
    for (int& label : group) {
      if (label == from) label = to;
    }
  }
  return total == weight &&
         std::all_of(group.begin(), group.end(),
                     [&](int label) { return label == group[0]; });
}

bool tour(const grtc::Graph& g, const std::vector<int>& order,
          long long cost) {
  if (!is_permutation_of_all(g, order)) return false;
  long long total = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int u = order[i];
    const int v = order[(i + 1) % order.size()];
    if (!g.has_edge(u, v)) return false;
    total += step_cost(g, u, v);
  }
  return total == cost;
}

bool mapping(const grtc::Graph& pattern, const grtc::Graph& host,
             const std::vector<std::pair<int, int>>& pairs, bool induced) {
  if (static_cast<int>(pairs.size()) != pattern.node_count()) return false;
  std::vector<int> image(pattern.node_count(), -1);
  std::set<int> used;
  for (const auto& [from, to] : pairs) {
    if (from < 0 || from >= pattern.node_count() || to < 0 ||
        to >= host.node_count()) {
      return false;
    }
    if (image[from] != -1 || !used.insert(to).second) return false;
    image[from] = to;
  }
  for (int a = 0; a < pattern.node_count(); ++a) {
    for (int b = 0; b < pattern.node_count(); ++b) {
      if (a == b) continue;
      if (pattern.has_edge(a, b) && !host.has_edge(image[a], image[b])) {
        return false;
      }
      if (induced && !pattern.has_edge(a, b) &&
          host.has_edge(image[a], image[b])) {
        return false;
      }
    }
  }
  return true;
}

bool common_mapping(const grtc::Graph& g1, const grtc::Graph& g2,
                    const std::vector<std::pair<int, int>>& pairs) {
  std::set<int> left;
  std::set<int> right;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= g1.node_count() || b < 0 || b >= g2.node_count()) {
      return false;
    }
    if (!left.insert(a).second || !right.insert(b).second) return false;
  }
  for (const auto& [a1, b1] : pairs) {
    for (const auto& [a2, b2] : pairs) {
      if (a1 == a2) continue;
      if (g1.has_edge(a1, a2) != g2.has_edge(b1, b2)) return false;
    }
  }
  return true;
}

}  // namespace verify
