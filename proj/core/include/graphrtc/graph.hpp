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

#ifndef GRAPHRTC_GRAPH_HPP_
#define GRAPHRTC_GRAPH_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphrtc/error.hpp"

namespace grtc {

struct Edge {
  int u = 0;
  int v = 0;
  std::optional<long long> weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable graph. Nodes are 0-based internally; `index_base` records the
// numbering used by the source text (0 or 1) so rendering can restore it.
//
// Canonical form, established at construction:
//   - undirected edges are stored with u <= v and deduplicated (minimum
//     weight wins when weighted),
//   - the edge list is sorted by (u, v),
//   - either every edge carries a weight or none does.
class Graph {
 public:
  Graph() = default;

  // Validates and canonicalizes. `weighted` disambiguates the empty edge
  // list; it must match the edges given. Labels, when non-empty, must have
  // one entry per node and be unique after normalize_label().
  static Graph make(bool directed, int node_count, std::vector<Edge> edges,
                    bool weighted = false, std::vector<std::string> labels = {},
                    int index_base = 0);

  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }
  int node_count() const { return node_count_; }
  int index_base() const { return index_base_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Directed graphs: has_edge(u, v) means an arc u -> v.
  bool has_edge(int u, int v) const;
  std::optional<long long> edge_weight(int u, int v) const;

  // Sorted ascending. Out-neighbors on directed graphs.
  const std::vector<int>& neighbors(int u) const;
  // Sorted ascending. In-neighbors; equals neighbors() on undirected graphs.
  const std::vector<int>& predecessors(int u) const;

  int degree(int u) const { return static_cast<int>(neighbors(u).size()); }
  int out_degree(int u) const { return degree(u); }
  int in_degree(int u) const { return static_cast<int>(predecessors(u).size()); }

  void check_node(int u) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  bool directed_ = false;
  bool weighted_ = false;
  int node_count_ = 0;
  int index_base_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> radj_;
};

// Canonical line-based encoding consumed by generated solvers: a sizes
// line, one record per edge, then an optional trailing query line.
struct StandardInput {
  std::string text;

  friend bool operator==(const StandardInput&, const StandardInput&) = default;
};

// Parses a natural-language problem text, or a previously rendered
// standard input, into a Graph.
//
// Prose texts must either declare a node range ("numbered from a to b")
// or use named nodes inside the edge tuples. Placeholder tuples such as
// (i,j) and (i,j,k) are dropped. Node names are normalized with
// normalize_label() and indexed in order of first appearance.
Graph parse_graph_text(const std::string& text, bool directed, bool weighted);

// Renders the canonical standard input: "n m" line, m edge lines sorted by
// (u, v), then the query nodes on a trailing line when given. Indices are
// shifted back by the graph's index_base. Lines are newline-terminated and
// carry no trailing spaces.
StandardInput render_standard_input(const Graph& g,
                                    std::span<const int> query_nodes = {});

// Trims surrounding whitespace and replaces interior whitespace runs with a
// single '_'. Periods and other interior characters are preserved.
std::string normalize_label(const std::string& name);

}  // namespace grtc

#endif  // GRAPHRTC_GRAPH_HPP_
