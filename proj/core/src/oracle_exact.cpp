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

// Exact search solvers: subgraph matching, maximum clique, maximum
// independent set, minimum vertex cover, and maximum common subgraph.

#include <bit>
#include <cstdint>
#include <vector>

#include <fmt/core.h>

#include "graphrtc/oracle.hpp"

namespace grtc::oracle {

namespace {

// ---------------------------------------------------------------------------
// Injection search shared by subgraph matching and common-subgraph checks.

struct EmbeddingSearch {
  const Graph& pattern;
  const Graph& host;
  SubgraphMode mode;
  std::vector<int> map;    // pattern node -> host node
  std::vector<char> used;  // host nodes already taken

  EmbeddingSearch(const Graph& p, const Graph& h, SubgraphMode m)
      : pattern(p), host(h), mode(m), map(p.node_count(), -1),
        used(h.node_count(), 0) {}

  bool arc_consistent(bool pattern_edge, bool host_edge) const {
    if (pattern_edge && !host_edge) return false;
    if (mode == SubgraphMode::induced_isomorphism && !pattern_edge &&
        host_edge) {
      return false;
    }
    return true;
  }

  bool consistent(int p, int h) const {
    if (mode == SubgraphMode::monomorphism) {
      if (pattern.degree(p) > host.degree(h)) return false;
      if (pattern.directed() && pattern.in_degree(p) > host.in_degree(h)) {
        return false;
      }
    }
    if (!arc_consistent(pattern.has_edge(p, p), host.has_edge(h, h))) {
      return false;
    }
    for (int q = 0; q < p; ++q) {
      const int hq = map[q];
      if (!arc_consistent(pattern.has_edge(p, q), host.has_edge(h, hq))) {
        return false;
      }
      if (!arc_consistent(pattern.has_edge(q, p), host.has_edge(hq, h))) {
        return false;
      }
    }
    return true;
  }

  bool search(int p) {
    if (p == pattern.node_count()) return true;
    for (int h = 0; h < host.node_count(); ++h) {
      if (used[h] || !consistent(p, h)) continue;
      map[p] = h;
      used[h] = 1;
      if (search(p + 1)) return true;
      used[h] = 0;
      map[p] = -1;
    }
    return false;
  }
};

// ---------------------------------------------------------------------------
// Branch-and-bound maximum clique with a greedy-coloring upper bound.

class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(std::vector<std::uint64_t> adjacency)
      : adj_(std::move(adjacency)), n_(static_cast<int>(adj_.size())) {}

  std::uint64_t run() {
    if (n_ == 0) return 0;
    std::uint64_t all =
        n_ == 64 ? ~0ull : ((1ull << n_) - 1);
    expand(0, 0, all);
    return best_mask_;
  }

 private:
  void expand(std::uint64_t clique, int size, std::uint64_t cand) {
    if (cand == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_mask_ = clique;
      }
      return;
    }
    // Greedy coloring: nodes of one color class are pairwise non-adjacent,
    // so `size + color` bounds any clique extending through them.
    int order[64];
    int bound[64];
    int count = 0;
    std::uint64_t uncolored = cand;
    int color = 0;
    while (uncolored) {
      ++color;
      std::uint64_t avail = uncolored;
      while (avail) {
        const int v = std::countr_zero(avail);
        avail &= ~(adj_[v] | (1ull << v));
        uncolored &= ~(1ull << v);
        order[count] = v;
        bound[count] = color;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (size + bound[i] <= best_size_) return;
      const int v = order[i];
      cand &= ~(1ull << v);
      expand(clique | (1ull << v), size + 1, cand & adj_[v]);
    }
  }

  std::vector<std::uint64_t> adj_;
  int n_;
  int best_size_ = 0;
  std::uint64_t best_mask_ = 0;
};

// Adjacency bitmasks without the diagonal.
std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.node_count(), 0);
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    adj[e.u] |= 1ull << e.v;
    adj[e.v] |= 1ull << e.u;
  }
  return adj;
}

void require_branch_and_bound_size(const Graph& g, const char* what) {
  if (g.node_count() > kBranchAndBoundNodeLimit) {
    throw BudgetError(fmt::format("{} limited to {} nodes, got {}", what,
                                  kBranchAndBoundNodeLimit, g.node_count()));
  }
  if (g.directed()) {
    throw OracleError(fmt::format("{} requires an undirected graph", what));
  }
}

Answer set_answer(std::uint64_t mask) {
  Answer a;
  a.kind = AnswerKind::node_set;
  for (std::uint64_t bits = mask; bits;) {
    const int v = std::countr_zero(bits);
    a.nodes.push_back(v);
    bits &= bits - 1;
  }
  a.value = static_cast<long long>(a.nodes.size());
  return a;
}

std::uint64_t mis_mask(const Graph& g) {
  const int n = g.node_count();
  auto adj = adjacency_masks(g);
  const std::uint64_t all = n == 64 ? ~0ull : ((1ull << n) - 1);
  // An independent set is a clique of the complement graph.
  std::vector<std::uint64_t> complement(n);
  for (int v = 0; v < n; ++v) {
    complement[v] = all & ~(adj[v] | (1ull << v));
  }
  return MaxCliqueSearch(std::move(complement)).run();
}

}  // namespace

Answer subgraph_match(const Graph& pattern, const Graph& host,
                      SubgraphMode mode) {
  if (pattern.directed() != host.directed()) {
    throw OracleError("pattern and host graphs must share directedness");
  }
  if (host.node_count() > kSubgraphNodeLimit ||
      pattern.node_count() > kSubgraphNodeLimit) {
    throw BudgetError(fmt::format("subgraph matching limited to {} nodes",
                                  kSubgraphNodeLimit));
  }
  if (pattern.node_count() > host.node_count()) {
    return Answer::boolean(false);
  }
  EmbeddingSearch search(pattern, host, mode);
  Answer a = Answer::boolean(search.search(0));
  if (a.truth) {
    for (int p = 0; p < pattern.node_count(); ++p) {
      a.edge_pairs.emplace_back(p, search.map[p]);
    }
  }
  return a;
}

Answer max_clique(const Graph& g) {
  require_branch_and_bound_size(g, "maximum clique");
  return set_answer(MaxCliqueSearch(adjacency_masks(g)).run());
}

Answer exact_mis(const Graph& g) {
  require_branch_and_bound_size(g, "maximum independent set");
  return set_answer(mis_mask(g));
}

Answer exact_mvc(const Graph& g) {
  require_branch_and_bound_size(g, "minimum vertex cover");
  const int n = g.node_count();
  const std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~0ull : (1ull << n) - 1);
  return set_answer(all & ~mis_mask(g));
}

Answer max_common_subgraph(const Graph& g1, const Graph& g2) {
  if (g1.directed() || g2.directed()) {
    throw OracleError("common subgraph search requires undirected graphs");
  }
  const bool g1_small = g1.node_count() <= g2.node_count();
  const Graph& small = g1_small ? g1 : g2;
  const Graph& large = g1_small ? g2 : g1;
  if (small.node_count() > kCommonSubgraphNodeLimit) {
    throw BudgetError(
        fmt::format("common subgraph limited to a smaller side of {} nodes",
                    kCommonSubgraphNodeLimit));
  }

  const int sn = small.node_count();
  for (int k = sn; k >= 0; --k) {
    for (std::uint64_t subset = 0; subset < (1ull << sn); ++subset) {
      if (std::popcount(subset) != k) continue;
      // Induce the subset of the smaller graph, preserving node order.
      std::vector<int> chosen;
      for (std::uint64_t bits = subset; bits;) {
        chosen.push_back(std::countr_zero(bits));
        bits &= bits - 1;
      }
      std::vector<int> position(sn, -1);
      for (int i = 0; i < k; ++i) position[chosen[i]] = i;
      std::vector<Edge> edges;
      for (const Edge& e : small.edges()) {
        if (position[e.u] != -1 && position[e.v] != -1) {
          edges.push_back(Edge{position[e.u], position[e.v], std::nullopt});
        }
      }
      Graph induced = Graph::make(false, k, std::move(edges));

      EmbeddingSearch search(induced, large,
                             SubgraphMode::induced_isomorphism);
      if (!search.search(0)) continue;

      Answer a = Answer::integer(k);
      for (int i = 0; i < k; ++i) {
        const int small_node = chosen[i];
        const int large_node = search.map[i];
        if (g1_small) {
          a.edge_pairs.emplace_back(small_node, large_node);
        } else {
          a.edge_pairs.emplace_back(large_node, small_node);
        }
      }
      return a;
    }
  }
  return Answer::integer(0);
}

}  // namespace grtc::oracle
