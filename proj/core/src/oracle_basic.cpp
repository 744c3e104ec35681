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

// Local and connectivity queries, cycle detection, topological order,
// bipartiteness with maximum matching, and PageRank.

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <set>

#include <fmt/core.h>

#include "graphrtc/oracle.hpp"

namespace grtc::oracle {

namespace {

std::string join_nodes(const std::vector<int>& nodes) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += fmt::format("{}", nodes[i]);
  }
  return out;
}

}  // namespace

std::string Answer::to_text() const {
  if (none) return "None";
  if (is_rational) {
    return fmt::format("{:.6f}", static_cast<double>(rational.first) /
                                     static_cast<double>(rational.second));
  }
  switch (kind) {
    case AnswerKind::boolean:
      return truth ? "Yes" : "No";
    case AnswerKind::integer:
    case AnswerKind::node:
    case AnswerKind::value_with_witness:
      return fmt::format("{}", value);
    case AnswerKind::node_set:
    case AnswerKind::node_sequence:
      return join_nodes(nodes);
  }
  return {};
}

Answer Answer::boolean(bool b) {
  Answer a;
  a.kind = AnswerKind::boolean;
  a.truth = b;
  return a;
}

Answer Answer::integer(long long v) {
  Answer a;
  a.kind = AnswerKind::integer;
  a.value = v;
  return a;
}

Answer Answer::node(long long index) {
  Answer a;
  a.kind = AnswerKind::node;
  a.value = index;
  return a;
}

// ---------------------------------------------------------------------------
// Local queries

Answer local_query(const Graph& g, const LocalQuery& q) {
  switch (q.kind) {
    case LocalQueryKind::node_count:
      return Answer::integer(g.node_count());
    case LocalQueryKind::edge_count:
      return Answer::integer(g.edge_count());
    case LocalQueryKind::edge_existence:
      return Answer::boolean(g.has_edge(q.u, q.v));
    case LocalQueryKind::degree:
      return Answer::integer(g.degree(q.u));
    case LocalQueryKind::neighbors:
    case LocalQueryKind::connected_nodes: {
      Answer a;
      a.kind = AnswerKind::node_set;
      a.nodes = g.neighbors(q.u);
      return a;
    }
    case LocalQueryKind::common_neighbors: {
      const auto& nu = g.neighbors(q.u);
      const auto& nv = g.neighbors(q.v);
      std::vector<int> common;
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                            std::back_inserter(common));
      return Answer::integer(static_cast<long long>(common.size()));
    }
    case LocalQueryKind::jaccard: {
      const auto& nu = g.neighbors(q.u);
      const auto& nv = g.neighbors(q.v);
      std::vector<int> common, all;
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                            std::back_inserter(common));
      std::set_union(nu.begin(), nu.end(), nv.begin(), nv.end(),
                     std::back_inserter(all));
      Answer a;
      a.kind = AnswerKind::value_with_witness;
      a.is_rational = true;
      if (all.empty()) {
        a.rational = {0, 1};
      } else {
        long long num = static_cast<long long>(common.size());
        long long den = static_cast<long long>(all.size());
        long long d = std::gcd(num, den);
        a.rational = {num / (d == 0 ? 1 : d), den / (d == 0 ? 1 : d)};
      }
      return a;
    }
    case LocalQueryKind::triangle_count: {
      if (g.directed()) {
        throw OracleError("triangle_count requires an undirected graph");
      }
      long long count = 0;
      for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;
        const auto& nu = g.neighbors(e.u);
        const auto& nv = g.neighbors(e.v);
        std::vector<int> common;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                              std::back_inserter(common));
        for (int w : common) {
          if (w != e.u && w != e.v && w > e.v) ++count;
        }
      }
      return Answer::integer(count);
    }
    case LocalQueryKind::predecessors: {
      if (!g.directed()) {
        throw OracleError("predecessors requires a directed graph");
      }
      Answer a;
      a.kind = AnswerKind::node_set;
      a.nodes = g.predecessors(q.u);
      return a;
    }
  }
  throw OracleError("unknown local query kind");
}

// ---------------------------------------------------------------------------
// Connectivity queries

namespace {

// Component ids over the undirected view, numbered by smallest member.
std::vector<int> weak_components(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> comp(n, -1);
  int next_id = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next_id;
    std::deque<int> frontier{s};
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop_front();
      for (int v : g.neighbors(u)) {
        if (comp[v] == -1) {
          comp[v] = next_id;
          frontier.push_back(v);
        }
      }
      for (int v : g.predecessors(u)) {
        if (comp[v] == -1) {
          comp[v] = next_id;
          frontier.push_back(v);
        }
      }
    }
    ++next_id;
  }
  return comp;
}

std::vector<int> bfs_hops(const Graph& g, int start) {
  std::vector<int> dist(g.node_count(), -1);
  dist[start] = 0;
  std::deque<int> frontier{start};
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop_front();
    for (int v : g.neighbors(u)) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

Answer connectivity_query(const Graph& g, const ConnectivityQuery& q) {
  switch (q.kind) {
    case ConnectivityQueryKind::connected: {
      g.check_node(q.u);
      g.check_node(q.v);
      if (!g.directed()) {
        auto comp = weak_components(g);
        return Answer::boolean(comp[q.u] == comp[q.v]);
      }
      // Directed: reachability along arcs.
      std::vector<char> seen(g.node_count(), 0);
      std::deque<int> frontier{q.u};
      seen[q.u] = 1;
      while (!frontier.empty()) {
        int x = frontier.front();
        frontier.pop_front();
        if (x == q.v) return Answer::boolean(true);
        for (int y : g.neighbors(x)) {
          if (!seen[y]) {
            seen[y] = 1;
            frontier.push_back(y);
          }
        }
      }
      return Answer::boolean(seen[q.v] != 0);
    }
    case ConnectivityQueryKind::component_count: {
      auto comp = weak_components(g);
      int count = comp.empty() ? 0 : *std::max_element(comp.begin(),
                                                       comp.end()) + 1;
      return Answer::integer(count);
    }
    case ConnectivityQueryKind::components: {
      Answer a;
      a.kind = AnswerKind::node_sequence;
      a.nodes = weak_components(g);
      return a;
    }
    case ConnectivityQueryKind::diameter: {
      if (g.directed()) {
        throw OracleError("diameter requires an undirected graph");
      }
      if (g.node_count() == 0) throw OracleError("diameter of an empty graph");
      long long best = 0;
      for (int s = 0; s < g.node_count(); ++s) {
        auto dist = bfs_hops(g, s);
        for (int d : dist) {
          if (d == -1) {
            throw InfiniteDiameterError(
                "diameter is infinite: the graph is disconnected");
          }
          best = std::max<long long>(best, d);
        }
      }
      return Answer::integer(best);
    }
    case ConnectivityQueryKind::dfs_order: {
      g.check_node(q.start);
      Answer a;
      a.kind = AnswerKind::node_sequence;
      std::vector<char> seen(g.node_count(), 0);
      // Pushing neighbors in descending order pops the smallest first.
      std::vector<int> stack{q.start};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (seen[u]) continue;
        seen[u] = 1;
        a.nodes.push_back(u);
        const auto& nbrs = g.neighbors(u);
        for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
          if (!seen[*it]) stack.push_back(*it);
        }
      }
      return a;
    }
    case ConnectivityQueryKind::bfs_order: {
      g.check_node(q.start);
      Answer a;
      a.kind = AnswerKind::node_sequence;
      std::vector<char> seen(g.node_count(), 0);
      std::deque<int> frontier{q.start};
      seen[q.start] = 1;
      while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop_front();
        a.nodes.push_back(u);
        for (int v : g.neighbors(u)) {
          if (!seen[v]) {
            seen[v] = 1;
            frontier.push_back(v);
          }
        }
      }
      return a;
    }
  }
  throw OracleError("unknown connectivity query kind");
}

// ---------------------------------------------------------------------------
// Cycle detection

namespace {

bool directed_cycle_dfs(const Graph& g, int u, std::vector<int>& color,
                        std::vector<int>& stack, std::vector<int>& cycle) {
  color[u] = 1;
  stack.push_back(u);
  for (int v : g.neighbors(u)) {
    if (color[v] == 1) {
      auto start = std::find(stack.begin(), stack.end(), v);
      cycle.assign(start, stack.end());
      return true;
    }
    if (color[v] == 0 && directed_cycle_dfs(g, v, color, stack, cycle)) {
      return true;
    }
  }
  stack.pop_back();
  color[u] = 2;
  return false;
}

bool undirected_cycle_dfs(const Graph& g, int u, int parent,
                          std::vector<int>& color, std::vector<int>& stack,
                          std::vector<int>& cycle) {
  color[u] = 1;
  stack.push_back(u);
  for (int v : g.neighbors(u)) {
    if (v == u || v == parent) continue;  // self-loops are not cycles here
    if (color[v] == 1) {
      auto start = std::find(stack.begin(), stack.end(), v);
      cycle.assign(start, stack.end());
      return true;
    }
    if (color[v] == 0 &&
        undirected_cycle_dfs(g, v, u, color, stack, cycle)) {
      return true;
    }
  }
  stack.pop_back();
  color[u] = 2;
  return false;
}

}  // namespace

Answer detect_cycle(const Graph& g) {
  std::vector<int> color(g.node_count(), 0);
  std::vector<int> stack, cycle;
  for (int s = 0; s < g.node_count(); ++s) {
    if (color[s] != 0) continue;
    stack.clear();
    bool found = g.directed()
                     ? directed_cycle_dfs(g, s, color, stack, cycle)
                     : undirected_cycle_dfs(g, s, -1, color, stack, cycle);
    if (found) {
      Answer a = Answer::boolean(true);
      a.nodes = cycle;
      return a;
    }
  }
  return Answer::boolean(false);
}

// ---------------------------------------------------------------------------
// Topological order

Answer topological_order(const Graph& g) {
  if (!g.directed()) {
    throw OracleError("topological order requires a directed graph");
  }
  const int n = g.node_count();
  std::vector<int> indegree(n, 0);
  for (const Edge& e : g.edges()) ++indegree[e.v];

  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int u = 0; u < n; ++u) {
    if (indegree[u] == 0) ready.push(u);
  }

  Answer a;
  a.kind = AnswerKind::node_sequence;
  while (!ready.empty()) {
    int u = ready.top();
    ready.pop();
    a.nodes.push_back(u);
    for (int v : g.neighbors(u)) {
      if (--indegree[v] == 0) ready.push(v);
    }
  }
  if (static_cast<int>(a.nodes.size()) != n) {
    a.nodes.clear();
    a.none = true;
  }
  return a;
}

// ---------------------------------------------------------------------------
// Bipartiteness and maximum matching

namespace {

// Kuhn's augmenting-path matching over the color classes.
bool try_augment(const Graph& g, int u, const std::vector<int>& side,
                 std::vector<char>& visited, std::vector<int>& match) {
  for (int v : g.neighbors(u)) {
    if (side[v] == 0 || visited[v]) continue;
    visited[v] = 1;
    if (match[v] == -1 || try_augment(g, match[v], side, visited, match)) {
      match[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

Answer bipartite(const Graph& g) {
  if (g.directed()) {
    throw OracleError("bipartiteness requires an undirected graph");
  }
  const int n = g.node_count();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<int> frontier{s};
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop_front();
      for (int v : g.neighbors(u)) {
        if (v == u) return Answer::boolean(false);  // self-loop
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          frontier.push_back(v);
        } else if (side[v] == side[u]) {
          return Answer::boolean(false);
        }
      }
    }
  }

  std::vector<int> match(n, -1);
  long long matching = 0;
  for (int u = 0; u < n; ++u) {
    if (side[u] != 0) continue;
    std::vector<char> visited(n, 0);
    if (try_augment(g, u, side, visited, match)) ++matching;
  }

  Answer a = Answer::boolean(true);
  a.value = matching;
  a.nodes = side;
  return a;
}

// ---------------------------------------------------------------------------
// PageRank

Answer pagerank(const Graph& g, double damping, int iterations) {
  if (!g.directed()) throw OracleError("pagerank requires a directed graph");
  if (g.node_count() == 0) throw OracleError("pagerank of an empty graph");
  if (!(damping > 0.0 && damping < 1.0)) {
    throw OracleError("damping must lie in (0, 1)");
  }
  if (iterations < 1) throw OracleError("iterations must be positive");

  const int n = g.node_count();
  const double inv_n = 1.0 / n;
  std::vector<double> rank(n, inv_n), next(n);
  for (int step = 0; step < iterations; ++step) {
    double dangling = 0.0;
    for (int u = 0; u < n; ++u) {
      if (g.out_degree(u) == 0) dangling += rank[u];
    }
    std::fill(next.begin(), next.end(),
              (1.0 - damping) * inv_n + damping * dangling * inv_n);
    for (int u = 0; u < n; ++u) {
      const int deg = g.out_degree(u);
      if (deg == 0) continue;
      const double share = damping * rank[u] / deg;
      for (int v : g.neighbors(u)) next[v] += share;
    }
    rank.swap(next);
  }

  int best = 0;
  for (int u = 1; u < n; ++u) {
    if (rank[u] > rank[best]) best = u;
  }
  Answer a = Answer::node(best);
  a.scores = rank;
  return a;
}

}  // namespace grtc::oracle
