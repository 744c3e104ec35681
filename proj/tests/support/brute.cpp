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

#include "brute.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>

namespace brute {
namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Minimum-weight adjacency matrix; kInf marks absent edges.
std::vector<std::vector<long long>> weight_matrix(
    int n, const std::vector<Edge>& edges, bool directed) {
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, kInf));
  for (const Edge& e : edges) {
    w[e.u][e.v] = std::min(w[e.u][e.v], e.w);
    if (!directed) w[e.v][e.u] = std::min(w[e.v][e.u], e.w);
  }
  return w;
}

std::vector<std::vector<bool>> bool_matrix(int n,
                                           const std::vector<Edge>& edges,
                                           bool directed) {
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (const Edge& e : edges) {
    a[e.u][e.v] = true;
    if (!directed) a[e.v][e.u] = true;
  }
  return a;
}

void path_dfs(const std::vector<std::vector<long long>>& w, int at, int t,
              long long cost, std::vector<bool>& used, long long& best) {
  if (at == t) {
    best = std::min(best, cost);
    return;
  }
  const int n = static_cast<int>(w.size());
  for (int next = 0; next < n; ++next) {
    if (used[next] || w[at][next] == kInf) continue;
    if (cost + w[at][next] >= best) continue;
    used[next] = true;
    path_dfs(w, next, t, cost + w[at][next], used, best);
    used[next] = false;
  }
}

std::vector<std::vector<bool>> closure(std::vector<std::vector<bool>> r) {
  const int n = static_cast<int>(r.size());
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!r[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

int component_count(int n, const std::vector<Edge>& edges) {
  auto r = bool_matrix(n, edges, /*directed=*/false);
  for (int i = 0; i < n; ++i) r[i][i] = true;
  r = closure(std::move(r));
  int count = 0;
  for (int i = 0; i < n; ++i) {
    bool lowest = true;
    for (int j = 0; j < i; ++j) {
      if (r[i][j]) lowest = false;
    }
    if (lowest) ++count;
  }
  return count;
}

bool injection_dfs(const std::vector<std::vector<bool>>& p,
                   const std::vector<std::vector<bool>>& h,
                   std::vector<int>& assign, std::vector<bool>& taken,
                   std::size_t depth, bool induced) {
  const std::size_t pn = p.size();
  if (depth == pn) return true;
  const std::size_t hn = h.size();
  for (std::size_t cand = 0; cand < hn; ++cand) {
    if (taken[cand]) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < depth && ok; ++prev) {
      const int img = assign[prev];
      if (p[depth][prev] && !h[cand][img]) ok = false;
      if (p[prev][depth] && !h[img][cand]) ok = false;
      if (induced) {
        if (!p[depth][prev] && h[cand][img]) ok = false;
        if (!p[prev][depth] && h[img][cand]) ok = false;
      }
    }
    if (!ok) continue;
    assign[depth] = static_cast<int>(cand);
    taken[cand] = true;
    if (injection_dfs(p, h, assign, taken, depth + 1, induced)) return true;
    taken[cand] = false;
  }
  return false;
}

}  // namespace

long long path_min_cost(int n, const std::vector<Edge>& edges, bool directed,
                        int s, int t) {
  const auto w = weight_matrix(n, edges, directed);
  std::vector<bool> used(n, false);
  used[s] = true;
  long long best = kInf;
  path_dfs(w, s, t, 0, used, best);
  return best == kInf ? -1 : best;
}

long long min_cut(int n, const std::vector<Edge>& edges, bool directed, int s,
                  int t) {
  std::vector<std::vector<long long>> cap(n, std::vector<long long>(n, 0));
  for (const Edge& e : edges) {
    cap[e.u][e.v] += e.w;
    if (!directed) cap[e.v][e.u] += e.w;
  }
  long long best = kInf;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t side = 0; side < limit; ++side) {
    if (!(side & (1u << s)) || (side & (1u << t))) continue;
    long long cut = 0;
    for (int u = 0; u < n; ++u) {
      if (!(side & (1u << u))) continue;
      for (int v = 0; v < n; ++v) {
        if (!(side & (1u << v))) cut += cap[u][v];
      }
    }
    best = std::min(best, cut);
  }
  return best;
}

long long spanning_min_weight(int n, const std::vector<Edge>& edges) {
  if (n == 1) return 0;
  const int m = static_cast<int>(edges.size());
  if (m < n - 1) return -1;
  long long best = kInf;
  // Each permutation of the selector picks one (n-1)-edge combination.
  std::vector<char> take(m, 0);
  std::fill(take.end() - (n - 1), take.end(), 1);
  std::sort(take.begin(), take.end());
  do {
    std::vector<Edge> chosen;
    long long total = 0;
    for (int i = 0; i < m; ++i) {
      if (take[i]) {
        chosen.push_back(edges[i]);
        total += edges[i].w;
      }
    }
    if (total < best && component_count(n, chosen) == 1) best = total;
  } while (std::next_permutation(take.begin(), take.end()));
  return best == kInf ? -1 : best;
}

int best_independent_set(int n, const std::vector<Edge>& edges) {
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : edges) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  int best = 0;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t pick = 0; pick < limit; ++pick) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if ((pick & (1u << i)) && (adj[i] & pick)) ok = false;
    }
    if (ok) best = std::max(best, std::popcount(pick));
  }
  return best;
}

int best_vertex_cover(int n, const std::vector<Edge>& edges) {
  int best = n;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t pick = 0; pick < limit; ++pick) {
    bool covers = true;
    for (const Edge& e : edges) {
      if (!(pick & (1u << e.u)) && !(pick & (1u << e.v))) {
        covers = false;
        break;
      }
    }
    if (covers) best = std::min(best, std::popcount(pick));
  }
  return best;
}

int best_clique(int n, const std::vector<Edge>& edges) {
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : edges) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  int best = 0;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t pick = 0; pick < limit; ++pick) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if ((pick & (1u << i)) &&
          ((adj[i] | (1u << i)) & pick) != pick) {
        ok = false;
      }
    }
    if (ok) best = std::max(best, std::popcount(pick));
  }
  return best;
}

long long tour_min_cost(int n, const std::vector<Edge>& edges) {
  if (n == 1) return 0;
  const auto w = weight_matrix(n, edges, /*directed=*/false);
  std::vector<int> order(n - 1);
  std::iota(order.begin(), order.end(), 1);
  long long best = kInf;
  do {
    long long cost = 0;
    int at = 0;
    bool feasible = true;
    for (int next : order) {
      if (w[at][next] == kInf) {
        feasible = false;
        break;
      }
      cost += w[at][next];
      at = next;
    }
    if (feasible && w[at][0] != kInf) best = std::min(best, cost + w[at][0]);
  } while (std::next_permutation(order.begin(), order.end()));
  return best == kInf ? -1 : best;
}

bool has_injection(int pattern_n, const std::vector<Edge>& pattern_edges,
                   int host_n, const std::vector<Edge>& host_edges,
                   bool directed, bool induced) {
  if (pattern_n > host_n) return false;
  const auto p = bool_matrix(pattern_n, pattern_edges, directed);
  const auto h = bool_matrix(host_n, host_edges, directed);
  std::vector<int> assign(pattern_n, -1);
  std::vector<bool> taken(host_n, false);
  return injection_dfs(p, h, assign, taken, 0, induced);
}

bool exists_hamilton_path(int n, const std::vector<Edge>& edges,
                          bool directed) {
  const auto a = bool_matrix(n, edges, directed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) {
      if (!a[order[i]][order[i + 1]]) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

bool acyclic_directed(int n, const std::vector<Edge>& edges) {
  const auto r = closure(bool_matrix(n, edges, /*directed=*/true));
  for (int i = 0; i < n; ++i) {
    if (r[i][i]) return false;
  }
  return true;
}

bool forest_undirected(int n, const std::vector<Edge>& edges) {
  // Count distinct undirected pairs; parallel inputs collapse.
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  int m = 0;
  for (const Edge& e : edges) {
    const int a = std::min(e.u, e.v);
    const int b = std::max(e.u, e.v);
    if (!seen[a][b]) {
      seen[a][b] = true;
      ++m;
    }
  }
  return m == n - component_count(n, edges);
}

long long floyd_diameter(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<long long>> d(n, std::vector<long long>(n, kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : edges) {
    d[e.u][e.v] = 1;
    d[e.v][e.u] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  long long best = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (d[i][j] == kInf) return -1;
      best = std::max(best, d[i][j]);
    }
  }
  return best;
}

long long count_triangles(int n, const std::vector<Edge>& edges) {
  const auto a = bool_matrix(n, edges, /*directed=*/false);
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!a[i][j]) continue;
      for (int k = j + 1; k < n; ++k) {
        if (a[i][k] && a[j][k]) ++total;
      }
    }
  }
  return total;
}

std::vector<double> power_iteration(int n, const std::vector<Edge>& edges,
                                    bool directed, double damping,
                                    int iterations) {
  const auto a = bool_matrix(n, edges, directed);
  std::vector<int> out(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (a[u][v]) ++out[u];
    }
  }
  std::vector<long double> rank(n, 1.0L / n);
  for (int round = 0; round < iterations; ++round) {
    long double dangling = 0;
    for (int u = 0; u < n; ++u) {
      if (out[u] == 0) dangling += rank[u];
    }
    std::vector<long double> next(n, (1.0L - damping) / n +
                                         damping * dangling / n);
    for (int u = 0; u < n; ++u) {
      if (out[u] == 0) continue;
      const long double share = damping * rank[u] / out[u];
      for (int v = 0; v < n; ++v) {
        if (a[u][v]) next[v] += share;
      }
    }
    rank = std::move(next);
  }
  return std::vector<double>(rank.begin(), rank.end());
}

}  // namespace brute
