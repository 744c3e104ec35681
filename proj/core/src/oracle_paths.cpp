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

// Shortest path, max flow, minimum spanning tree, Hamiltonian path, and
// the Held-Karp TSP solver.

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <vector>

#include <fmt/core.h>

#include "graphrtc/oracle.hpp"

namespace grtc::oracle {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

long long weight_of(const Graph& g, const Edge& e) {
  return g.weighted() ? *e.weight : 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Shortest path: array-scan Dijkstra, O(n^2) regardless of density.

Answer shortest_path(const Graph& g, int s, int t) {
  g.check_node(s);
  g.check_node(t);
  if (g.weighted()) {
    for (const Edge& e : g.edges()) {
      if (*e.weight < 0) {
        throw OracleError("negative edge weights are unsupported");
      }
    }
  }

  const int n = g.node_count();
  std::vector<long long> dist(n, kInf);
  std::vector<int> parent(n, -1);
  std::vector<char> done(n, 0);
  dist[s] = 0;
  for (int round = 0; round < n; ++round) {
    int u = -1;
    for (int i = 0; i < n; ++i) {
      if (!done[i] && dist[i] < kInf && (u == -1 || dist[i] < dist[u])) {
        u = i;
      }
    }
    if (u == -1) break;
    done[u] = 1;
    if (u == t) break;
    for (int v : g.neighbors(u)) {
      long long w = g.weighted() ? *g.edge_weight(u, v) : 1;
      if (!done[v] && dist[u] + w < dist[v]) {
        dist[v] = dist[u] + w;
        parent[v] = u;
      }
    }
  }

  if (dist[t] >= kInf) return Answer::integer(-1);

  Answer a = Answer::integer(dist[t]);
  std::vector<int> path;
  for (int v = t; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  a.nodes = std::move(path);
  return a;
}

// ---------------------------------------------------------------------------
// Max flow: Dinic. Undirected edges become two opposite arcs.

namespace {

struct FlowNetwork {
  struct Arc {
    int to;
    long long cap;
    int rev;  // index of the reverse arc in arcs[to]
  };
  std::vector<std::vector<Arc>> arcs;

  explicit FlowNetwork(int n) : arcs(n) {}

  void add_arc(int u, int v, long long cap) {
    arcs[u].push_back({v, cap, static_cast<int>(arcs[v].size())});
    arcs[v].push_back({u, 0, static_cast<int>(arcs[u].size()) - 1});
  }

  bool build_levels(int s, int t, std::vector<int>& level) {
    std::fill(level.begin(), level.end(), -1);
    level[s] = 0;
    std::deque<int> frontier{s};
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop_front();
      for (const Arc& a : arcs[u]) {
        if (a.cap > 0 && level[a.to] == -1) {
          level[a.to] = level[u] + 1;
          frontier.push_back(a.to);
        }
      }
    }
    return level[t] != -1;
  }

  long long push(int u, int t, long long limit, const std::vector<int>& level,
                 std::vector<std::size_t>& next) {
    if (u == t) return limit;
    for (; next[u] < arcs[u].size(); ++next[u]) {
      Arc& a = arcs[u][next[u]];
      if (a.cap <= 0 || level[a.to] != level[u] + 1) continue;
      long long sent = push(a.to, t, std::min(limit, a.cap), level, next);
      if (sent > 0) {
        a.cap -= sent;
        arcs[a.to][a.rev].cap += sent;
        return sent;
      }
    }
    return 0;
  }

  long long max_flow(int s, int t) {
    long long total = 0;
    std::vector<int> level(arcs.size());
    while (build_levels(s, t, level)) {
      std::vector<std::size_t> next(arcs.size(), 0);
      while (long long sent = push(s, t, kInf, level, next)) total += sent;
    }
    return total;
  }
};

}  // namespace

Answer max_flow(const Graph& g, int s, int t) {
  g.check_node(s);
  g.check_node(t);
  if (s == t) throw OracleError("max flow requires distinct source and sink");

  FlowNetwork net(g.node_count());
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    long long cap = weight_of(g, e);
    if (cap < 0) throw OracleError("negative capacities are unsupported");
    net.add_arc(e.u, e.v, cap);
    if (!g.directed()) net.add_arc(e.v, e.u, cap);
  }
  return Answer::integer(net.max_flow(s, t));
}

// ---------------------------------------------------------------------------
// Minimum spanning tree: Kruskal with (weight, u, v) ordering.

namespace {

struct DisjointSets {
  std::vector<int> parent;

  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Answer mst_weight(const Graph& g) {
  if (g.directed()) throw OracleError("MST requires an undirected graph");
  if (!g.weighted()) throw OracleError("MST requires edge weights");
  if (g.node_count() == 0) throw OracleError("MST of an empty graph");

  std::vector<Edge> edges = g.edges();
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) {
                     return std::tuple(*a.weight, a.u, a.v) <
                            std::tuple(*b.weight, b.u, b.v);
                   });

  DisjointSets sets(g.node_count());
  Answer a = Answer::integer(0);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    if (sets.unite(e.u, e.v)) {
      a.value += *e.weight;
      a.edge_pairs.emplace_back(e.u, e.v);
    }
  }
  if (static_cast<int>(a.edge_pairs.size()) != g.node_count() - 1) {
    throw OracleError("MST requires a connected graph");
  }
  return a;
}

// ---------------------------------------------------------------------------
// Hamiltonian path: backtracking that keeps searching after a dead end.

namespace {

bool hamilton_dfs(const Graph& g, int u, std::vector<char>& used,
                  std::vector<int>& path) {
  if (static_cast<int>(path.size()) == g.node_count()) return true;
  for (int v : g.neighbors(u)) {
    if (used[v]) continue;
    used[v] = 1;
    path.push_back(v);
    if (hamilton_dfs(g, v, used, path)) return true;
    // A failed branch only prunes this extension, not the whole search.
    path.pop_back();
    used[v] = 0;
  }
  return false;
}

}  // namespace

Answer hamilton_path(const Graph& g) {
  if (g.directed()) {
    throw OracleError("Hamiltonian path search requires an undirected graph");
  }
  const int n = g.node_count();
  if (n == 0) return Answer::boolean(false);
  if (n == 1) {
    Answer a = Answer::boolean(true);
    a.nodes = {0};
    return a;
  }

  // A graph split into several components has no spanning path.
  {
    std::vector<char> seen(n, 0);
    std::deque<int> frontier{0};
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop_front();
      for (int v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          frontier.push_back(v);
        }
      }
    }
    if (reached != n) return Answer::boolean(false);
  }

  std::vector<char> used(n, 0);
  std::vector<int> path;
  for (int start = 0; start < n; ++start) {
    used.assign(n, 0);
    used[start] = 1;
    path.assign(1, start);
    if (hamilton_dfs(g, start, used, path)) {
      Answer a = Answer::boolean(true);
      a.nodes = path;
      return a;
    }
  }
  return Answer::boolean(false);
}

// ---------------------------------------------------------------------------
// TSP: bitmask dynamic programming over subsets containing node 0, with a
// connectivity pre-check, minimum-weight parallel-edge resolution, and the
// closing edge taken back to node 0. Infeasible tours answer -1.

Answer tsp_held_karp(const Graph& g) {
  if (g.directed()) throw OracleError("TSP requires an undirected graph");
  if (!g.weighted()) throw OracleError("TSP requires edge weights");
  const int n = g.node_count();
  if (n == 0) throw OracleError("TSP of an empty graph");
  if (n > kTspNodeLimit) {
    throw BudgetError(fmt::format("TSP limited to {} nodes, got {}",
                                  kTspNodeLimit, n));
  }

  std::vector<std::vector<long long>> dist(n,
                                           std::vector<long long>(n, kInf));
  for (const Edge& e : g.edges()) {
    if (*e.weight < 0) throw OracleError("negative edge weights unsupported");
    if (*e.weight < dist[e.u][e.v]) {
      dist[e.u][e.v] = *e.weight;
      dist[e.v][e.u] = *e.weight;
    }
  }

  // Unreachable nodes make any tour impossible.
  {
    std::vector<char> visited(n, 0);
    std::deque<int> frontier{0};
    visited[0] = 1;
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop_front();
      for (int v = 0; v < n; ++v) {
        if (dist[u][v] < kInf && !visited[v]) {
          visited[v] = 1;
          frontier.push_back(v);
        }
      }
    }
    if (std::any_of(visited.begin(), visited.end(),
                    [](char seen) { return !seen; })) {
      return Answer::integer(-1);
    }
  }

  // Every reachable mask contains node 0, so bit 0 is dropped from the
  // table index to halve the footprint.
  const std::size_t half = 1ull << (n - 1);
  auto idx = [&](unsigned mask, int v) {
    return static_cast<std::size_t>(mask >> 1) * n + v;
  };
  std::vector<long long> dp(half * n, kInf);
  std::vector<signed char> parent(half * n, -1);
  dp[idx(1u, 0)] = 0;

  const unsigned full = (1u << n) - 1;
  for (unsigned mask = 1; mask <= full; mask += 2) {
    for (int u = 0; u < n; ++u) {
      if ((mask & (1u << u)) == 0) continue;
      const long long here = dp[idx(mask, u)];
      if (here >= kInf) continue;
      for (int v = 0; v < n; ++v) {
        if (mask & (1u << v)) continue;
        if (dist[u][v] >= kInf) continue;
        const unsigned next = mask | (1u << v);
        if (here + dist[u][v] < dp[idx(next, v)]) {
          dp[idx(next, v)] = here + dist[u][v];
          parent[idx(next, v)] = static_cast<signed char>(u);
        }
      }
    }
  }

  long long best = kInf;
  int last = -1;
  for (int u = 0; u < n; ++u) {
    if (dp[idx(full, u)] < kInf && dist[u][0] < kInf &&
        dp[idx(full, u)] + dist[u][0] < best) {
      best = dp[idx(full, u)] + dist[u][0];
      last = u;
    }
  }
  if (best >= kInf) return Answer::integer(-1);

  Answer a = Answer::integer(best);
  std::vector<int> tour;
  unsigned mask = full;
  for (int v = last; v != -1;) {
    tour.push_back(v);
    int prev = parent[idx(mask, v)];
    mask &= ~(1u << v);
    v = prev;
  }
  std::reverse(tour.begin(), tour.end());
  a.nodes = std::move(tour);
  return a;
}

}  // namespace grtc::oracle
