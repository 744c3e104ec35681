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

#ifndef GRAPHRTC_TESTS_SUPPORT_BRUTE_HPP_
#define GRAPHRTC_TESTS_SUPPORT_BRUTE_HPP_

#include <vector>

// Exhaustive reference solvers used to cross-check the library's exact
// solvers. They share no code with the library: everything here works on
// plain edge lists and enumerates candidate solutions outright, so a bug
// would have to appear independently in two unrelated implementations to
// slip through.
namespace brute {

struct Edge {
  int u = 0;
  int v = 0;
  long long w = 1;
};

// Minimum cost over all simple paths from s to t; -1 when none exists.
long long path_min_cost(int n, const std::vector<Edge>& edges, bool directed,
                        int s, int t);

// Minimum s-t cut over all vertex subsets; equals the maximum flow.
// Undirected edges count as a pair of opposite arcs.
long long min_cut(int n, const std::vector<Edge>& edges, bool directed, int s,
                  int t);

// Minimum total weight over all spanning subsets of n-1 edges; -1 when the
// graph is disconnected. n == 1 yields 0.
long long spanning_min_weight(int n, const std::vector<Edge>& edges);

// Optimal set sizes by full subset enumeration; n <= 20.
int best_independent_set(int n, const std::vector<Edge>& edges);
int best_vertex_cover(int n, const std::vector<Edge>& edges);
int best_clique(int n, const std::vector<Edge>& edges);

// Minimum closed-tour cost by permutation enumeration over the dense
// minimum-weight distance matrix; -1 when no tour closes. n <= 10.
long long tour_min_cost(int n, const std::vector<Edge>& edges);

// Whether any injective node mapping embeds the pattern in the host.
// `induced` additionally requires pattern non-edges to map to non-edges.
bool has_injection(int pattern_n, const std::vector<Edge>& pattern_edges,
                   int host_n, const std::vector<Edge>& host_edges,
                   bool directed, bool induced);

// Whether some permutation of all nodes is a path; n <= 9.
bool exists_hamilton_path(int n, const std::vector<Edge>& edges, bool directed);

// Directed acyclicity via transitive-closure self-reachability.
bool acyclic_directed(int n, const std::vector<Edge>& edges);

// Undirected acyclicity via the forest identity m == n - components, with
// components taken from the reachability closure.
bool forest_undirected(int n, const std::vector<Edge>& edges);

// Unweighted undirected eccentricity maximum via Floyd-Warshall; -1 when
// disconnected.
long long floyd_diameter(int n, const std::vector<Edge>& edges);

long long count_triangles(int n, const std::vector<Edge>& edges);

// Synchronous power iteration with uniform dangling-mass redistribution,
// written against the adjacency matrix in long double.
std::vector<double> power_iteration(int n, const std::vector<Edge>& edges,
                                    bool directed, double damping,
                                    int iterations);

}  // namespace brute

#endif  // GRAPHRTC_TESTS_SUPPORT_BRUTE_HPP_
