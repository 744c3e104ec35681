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

#ifndef GRAPHRTC_TESTS_SUPPORT_RANDGRAPH_HPP_
#define GRAPHRTC_TESTS_SUPPORT_RANDGRAPH_HPP_

#include <cstdint>
#include <vector>

#include "brute.hpp"
#include "graphrtc/generator.hpp"
#include "graphrtc/graph.hpp"

namespace testenv {

// A random graph in both representations: the plain edge list the brute
// solvers consume and the canonical Graph the library solvers consume.
struct SampledGraph {
  int n = 0;
  std::vector<brute::Edge> edges;
  grtc::Graph graph;
};

// Uniform node count in [min_n, max_n], uniform edge count over all
// possible sizes, distinct edges, uniform weights in [weight_min,
// weight_max] when weighted. No duplicate (u, v) pairs are produced, so
// the two representations describe the same graph.
inline SampledGraph sample_graph(grtc::DeterministicRng& rng, int min_n,
                                 int max_n, bool directed, bool weighted,
                                 long long weight_min = 1,
                                 long long weight_max = 20) {
  SampledGraph out;
  out.n = static_cast<int>(rng.between(min_n, max_n));
  const std::uint64_t n = static_cast<std::uint64_t>(out.n);
  const std::uint64_t pairs = directed ? n * (n - 1) : n * (n - 1) / 2;
  const std::uint64_t m = pairs == 0 ? 0 : rng.below(pairs + 1);

  std::vector<grtc::Edge> graph_edges;
  for (std::uint64_t code : rng.sample_distinct(pairs, m)) {
    int u;
    int v;
    if (directed) {
      u = static_cast<int>(code / (n - 1));
      v = static_cast<int>(code % (n - 1));
      if (v >= u) ++v;  // skip the diagonal
    } else {
      // Decode the rank within the strictly-upper-triangular pairs.
      u = 0;
      std::uint64_t skip = n - 1;
      while (code >= skip) {
        code -= skip;
        ++u;
        --skip;
      }
      v = u + 1 + static_cast<int>(code);
    }
    const long long w = weighted ? rng.between(weight_min, weight_max) : 1;
    out.edges.push_back({u, v, w});
    grtc::Edge e;
    e.u = u;
    e.v = v;
    if (weighted) e.weight = w;
    graph_edges.push_back(e);
  }
  out.graph = grtc::Graph::make(directed, out.n, std::move(graph_edges),
                                weighted);
  return out;
}

}  // namespace testenv

#endif  // GRAPHRTC_TESTS_SUPPORT_RANDGRAPH_HPP_
