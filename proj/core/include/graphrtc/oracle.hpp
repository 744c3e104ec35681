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

#ifndef GRAPHRTC_ORACLE_HPP_
#define GRAPHRTC_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graphrtc/graph.hpp"

// Exact reference solvers for every supported task family. All functions
// are pure and deterministic: ties are broken by lowest node index so
// identical inputs produce byte-identical answers.
namespace grtc::oracle {

enum class AnswerKind {
  boolean,
  integer,
  node,
  node_set,
  node_sequence,
  value_with_witness,
};

struct Answer {
  AnswerKind kind = AnswerKind::integer;
  bool truth = false;
  long long value = 0;  // integer result, or the node index for kind node
  bool none = false;    // e.g. no topological order exists

  // Witness payloads; which ones are populated depends on the operation.
  std::vector<int> nodes;                        // path / set / order
  std::vector<std::pair<int, int>> edge_pairs;   // tree edges or mappings
  std::vector<double> scores;                    // score vector (pagerank)
  std::pair<long long, long long> rational{0, 1};
  bool is_rational = false;  // render rational as a 6-decimal value

  // Canonical textual rendering used for gold answers.
  std::string to_text() const;

  static Answer boolean(bool b);
  static Answer integer(long long v);
  static Answer node(long long index);
};

// ---------------------------------------------------------------------------
// Local queries

enum class LocalQueryKind {
  node_count,
  edge_count,
  edge_existence,    // (u, v)
  degree,            // (u)
  neighbors,         // (u)
  connected_nodes,   // (u); alias of neighbors, matching benchmark phrasing
  common_neighbors,  // (u, v)
  jaccard,           // (u, v)
  triangle_count,
  predecessors,      // (u); directed graphs only
};

struct LocalQuery {
  LocalQueryKind kind = LocalQueryKind::node_count;
  int u = -1;
  int v = -1;
};

Answer local_query(const Graph& g, const LocalQuery& q);

// ---------------------------------------------------------------------------
// Connectivity queries

enum class ConnectivityQueryKind {
  connected,        // (u, v)
  component_count,
  components,       // per-node component id, smallest-index labeling
  diameter,         // connected undirected graphs only
  dfs_order,        // (start); ascending-neighbor tie-break
  bfs_order,        // (start)
};

struct ConnectivityQuery {
  ConnectivityQueryKind kind = ConnectivityQueryKind::component_count;
  int u = -1;
  int v = -1;
  int start = 0;
};

Answer connectivity_query(const Graph& g, const ConnectivityQuery& q);

// ---------------------------------------------------------------------------
// Per-task solvers

// Undirected: cycle of length >= 3; directed: any directed cycle.
// On true the witness in `nodes` lists the cycle once, closing edge implied.
Answer detect_cycle(const Graph& g);

// Directed only. `none` set when the graph is cyclic; otherwise the
// smallest-index-first valid order.
Answer topological_order(const Graph& g);

// Distance in `value` (-1 when unreachable), witness path in `nodes`.
// Unweighted edges count as weight 1; negative weights are rejected.
Answer shortest_path(const Graph& g, int s, int t);

// Exact max-flow value. Undirected inputs become two opposite arcs.
Answer max_flow(const Graph& g, int s, int t);

// truth = 2-colorable; when bipartite, `value` holds the maximum matching
// size and `nodes` the color classes (color of each node).
Answer bipartite(const Graph& g);

// truth = a Hamiltonian path exists; witness path in `nodes` when true.
Answer hamilton_path(const Graph& g);

enum class SubgraphMode {
  induced_isomorphism,  // edges and non-edges preserved
  monomorphism,         // edges preserved
};

// truth = an embedding exists; when true, `edge_pairs` holds the witness
// (pattern node, host node) mapping.
Answer subgraph_match(const Graph& pattern, const Graph& host, SubgraphMode mode);

// Synchronous power iteration with uniform dangling-mass redistribution.
// `value` = argmax node (lowest index on ties), `scores` = final vector.
Answer pagerank(const Graph& g, double damping, int iterations);

// Total weight in `value`, tree edges in `edge_pairs`.
Answer mst_weight(const Graph& g);

// Maximum independent set / minimum vertex cover / maximum clique, as node
// sets in `nodes` with |set| in `value`.
Answer exact_mis(const Graph& g);
Answer exact_mvc(const Graph& g);
Answer max_clique(const Graph& g);

// Maximum common induced subgraph: size in `value`, node mapping
// (g1 node, g2 node) in `edge_pairs`.
Answer max_common_subgraph(const Graph& g1, const Graph& g2);

// Exact TSP over the dense min-weight distance matrix: bitmask DP over
// subsets containing node 0 after a connectivity pre-check. `value` is the
// minimal cycle cost or -1 when no closed tour exists; when a tour exists
// `nodes` holds one optimal visiting order starting at node 0.
Answer tsp_held_karp(const Graph& g);

// Exact-search size bounds. Exceeding one raises BudgetError.
inline constexpr int kSubgraphNodeLimit = 16;
inline constexpr int kBranchAndBoundNodeLimit = 40;
inline constexpr int kCommonSubgraphNodeLimit = 10;
inline constexpr int kTspNodeLimit = 20;

}  // namespace grtc::oracle

#endif  // GRAPHRTC_ORACLE_HPP_
