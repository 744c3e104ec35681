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

#include "graphrtc/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

#include "brute.hpp"
#include "graphrtc/error.hpp"
#include "verify.hpp"

using namespace grtc;
using oracle::Answer;
using oracle::AnswerKind;

namespace {

Edge we(int u, int v, long long w) { return Edge{u, v, w}; }
Edge ue(int u, int v) { return Edge{u, v, std::nullopt}; }

// The recurring worked example: 10 nodes, 12 weighted undirected edges.
Graph worked_example() {
  return Graph::make(false, 10,
                     {we(0, 4, 2), we(0, 8, 1), we(0, 7, 7), we(0, 6, 3),
                      we(0, 3, 1), we(3, 4, 4), we(3, 7, 7), we(3, 8, 1),
                      we(3, 6, 10), we(4, 5, 3), we(5, 6, 3), we(6, 8, 1)},
                     true);
}

// A five-node instance once mislabeled "No" in a public dataset; a valid
// path is (2,0,1,3,4).
Graph mislabeled_hamilton() {
  return Graph::make(false, 5,
                     {ue(0, 1), ue(0, 3), ue(0, 4), ue(0, 2), ue(1, 3),
                      ue(3, 4)},
                     false);
}

// A five-node directed instance once mislabeled "<1>"; node 4 is dangling.
Graph mislabeled_pagerank() {
  return Graph::make(true, 5,
                     {ue(3, 2), ue(3, 1), ue(2, 0), ue(2, 1), ue(2, 4),
                      ue(1, 3), ue(1, 0), ue(0, 2)},
                     false);
}

}  // namespace

TEST_CASE("answers render canonically") {
  CHECK(Answer::boolean(true).to_text() == "Yes");
  CHECK(Answer::boolean(false).to_text() == "No");
  CHECK(Answer::integer(-1).to_text() == "-1");
  CHECK(Answer::node(3).to_text() == "3");

  Answer order;
  order.kind = AnswerKind::node_sequence;
  order.nodes = {3, 0, 2};
  CHECK(order.to_text() == "3 0 2");

  Answer missing;
  missing.none = true;
  CHECK(missing.to_text() == "None");

  Answer ratio;
  ratio.is_rational = true;
  ratio.rational = {1, 3};
  CHECK(ratio.to_text() == "0.333333");
}

TEST_CASE("local queries answer the worked example") {
  const Graph g = worked_example();
  CHECK(oracle::local_query(g, {oracle::LocalQueryKind::node_count}).value ==
        10);
  CHECK(oracle::local_query(g, {oracle::LocalQueryKind::edge_count}).value ==
        12);
  CHECK(oracle::local_query(g, {oracle::LocalQueryKind::degree, 0}).value == 5);
  CHECK(oracle::local_query(g, {oracle::LocalQueryKind::edge_existence, 0, 4})
            .truth);
  CHECK(!oracle::local_query(g, {oracle::LocalQueryKind::edge_existence, 0, 5})
             .truth);
  CHECK(oracle::local_query(g, {oracle::LocalQueryKind::neighbors, 3}).to_text() ==
        "0 4 6 7 8");
  CHECK(oracle::local_query(g, {oracle::LocalQueryKind::connected_nodes, 3})
            .to_text() == "0 4 6 7 8");
  // Neighbor sets of 0 and 3: {3,4,6,7,8} and {0,4,6,7,8} share {4,6,7,8}.
  CHECK(oracle::local_query(g, {oracle::LocalQueryKind::common_neighbors, 0, 3})
            .value == 4);
}

TEST_CASE("jaccard reduces and renders with six decimals") {
  const Graph g = Graph::make(false, 4, {ue(0, 1), ue(0, 2), ue(3, 1)}, false);
  // Neighbors: 1 -> {0, 3}, 2 -> {0}; intersection 1, union 2.
  const Answer a =
      oracle::local_query(g, {oracle::LocalQueryKind::jaccard, 1, 2});
  CHECK(a.rational == std::pair<long long, long long>{1, 2});
  CHECK(a.to_text() == "0.500000");

  const Answer empty =
      oracle::local_query(g, {oracle::LocalQueryKind::jaccard, 3, 3});
  CHECK(empty.to_text() == "1.000000");
}

TEST_CASE("triangle counting matches the brute count") {
  const Graph g = Graph::make(
      false, 6,
      {ue(0, 1), ue(1, 2), ue(0, 2), ue(2, 3), ue(3, 4), ue(2, 4), ue(4, 5)},
      false);
  const Answer a = oracle::local_query(g, {oracle::LocalQueryKind::triangle_count});
  CHECK(a.value == 2);
  CHECK(a.value == brute::count_triangles(
                       6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1},
                           {3, 4, 1}, {2, 4, 1}, {4, 5, 1}}));
}

TEST_CASE("predecessors query is directed-only") {
  const Graph d = Graph::make(true, 3, {ue(0, 2), ue(1, 2)}, false);
  CHECK(oracle::local_query(d, {oracle::LocalQueryKind::predecessors, 2})
            .to_text() == "0 1");
  const Graph u = Graph::make(false, 3, {ue(0, 2)}, false);
  CHECK_THROWS_AS((void)oracle::local_query(
                      u, {oracle::LocalQueryKind::predecessors, 2}),
                  OracleError);
}

TEST_CASE("connectivity queries cover components and traversals") {
  const Graph g = Graph::make(
      false, 6, {ue(0, 1), ue(1, 2), ue(3, 4)}, false);
  oracle::ConnectivityQuery q;

  q.kind = oracle::ConnectivityQueryKind::connected;
  q.u = 0;
  q.v = 2;
  CHECK(oracle::connectivity_query(g, q).truth);
  q.v = 3;
  CHECK(!oracle::connectivity_query(g, q).truth);

  q.kind = oracle::ConnectivityQueryKind::component_count;
  CHECK(oracle::connectivity_query(g, q).value == 3);

  // Component ids count up in order of first appearance, not by member label.
  q.kind = oracle::ConnectivityQueryKind::components;
  CHECK(oracle::connectivity_query(g, q).to_text() == "0 0 0 1 1 2");

  q.kind = oracle::ConnectivityQueryKind::bfs_order;
  q.start = 0;
  const Graph h = Graph::make(
      false, 5, {ue(0, 2), ue(0, 1), ue(1, 3), ue(2, 3), ue(3, 4)}, false);
  CHECK(oracle::connectivity_query(h, q).to_text() == "0 1 2 3 4");
  q.kind = oracle::ConnectivityQueryKind::dfs_order;
  CHECK(oracle::connectivity_query(h, q).to_text() == "0 1 3 2 4");
}

TEST_CASE("diameter answers the path graph and rejects disconnection") {
  const Graph path =
      Graph::make(false, 4, {ue(0, 1), ue(1, 2), ue(2, 3)}, false);
  oracle::ConnectivityQuery q;
  q.kind = oracle::ConnectivityQueryKind::diameter;
  CHECK(oracle::connectivity_query(path, q).value == 3);
  CHECK(oracle::connectivity_query(path, q).value ==
        brute::floyd_diameter(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}));

  const Graph split = Graph::make(false, 3, {ue(0, 1)}, false);
  CHECK_THROWS_AS((void)oracle::connectivity_query(split, q),
                  InfiniteDiameterError);
}

TEST_CASE("cycle detection distinguishes trees, cycles, and arc loops") {
  const Graph tree =
      Graph::make(false, 4, {ue(0, 1), ue(0, 2), ue(2, 3)}, false);
  CHECK(!oracle::detect_cycle(tree).truth);

  const Graph triangle =
      Graph::make(false, 3, {ue(0, 1), ue(1, 2), ue(0, 2)}, false);
  const Answer found = oracle::detect_cycle(triangle);
  CHECK(found.truth);
  CHECK(found.nodes.size() >= 3);

  const Graph dag = Graph::make(true, 3, {ue(0, 1), ue(0, 2), ue(1, 2)}, false);
  CHECK(!oracle::detect_cycle(dag).truth);
  CHECK(brute::acyclic_directed(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}));

  const Graph loop = Graph::make(true, 2, {ue(0, 1), ue(1, 0)}, false);
  CHECK(oracle::detect_cycle(loop).truth);
  CHECK(!brute::acyclic_directed(2, {{0, 1, 1}, {1, 0, 1}}));

  // A directed pair is not an undirected cycle: length two never counts.
  const Graph pair = Graph::make(false, 2, {ue(0, 1)}, false);
  CHECK(!oracle::detect_cycle(pair).truth);
}

TEST_CASE("topological order prefers the smallest available node") {
  const Graph g = Graph::make(
      true, 5, {ue(2, 0), ue(0, 1), ue(0, 3), ue(1, 4), ue(3, 4)}, false);
  const Answer a = oracle::topological_order(g);
  CHECK(!a.none);
  CHECK(a.to_text() == "2 0 1 3 4");
  CHECK(verify::topo(g, a.nodes));

  const Graph cyclic = Graph::make(true, 2, {ue(0, 1), ue(1, 0)}, false);
  const Answer none = oracle::topological_order(cyclic);
  CHECK(none.none);
  CHECK(none.to_text() == "None");
}

TEST_CASE("shortest path solves the worked example") {
  const Graph g = worked_example();
  const Answer a = oracle::shortest_path(g, 8, 5);
  CHECK(a.value == 4);
  CHECK(verify::path(g, a.nodes, 8, 5, 4));
  CHECK(a.value == brute::path_min_cost(
                       10,
                       {{0, 4, 2}, {0, 8, 1}, {0, 7, 7}, {0, 6, 3}, {0, 3, 1},
                        {3, 4, 4}, {3, 7, 7}, {3, 8, 1}, {3, 6, 10}, {4, 5, 3},
                        {5, 6, 3}, {6, 8, 1}},
                       false, 8, 5));
}

TEST_CASE("shortest path reports unreachable pairs as -1") {
  const Graph g = Graph::make(false, 4, {we(0, 1, 5)}, true);
  const Answer a = oracle::shortest_path(g, 0, 3);
  CHECK(a.value == -1);
  CHECK(a.nodes.empty());
  CHECK(a.to_text() == "-1");
}

TEST_CASE("shortest path handles unweighted hops and rejects negatives") {
  const Graph g = Graph::make(false, 4, {ue(0, 1), ue(1, 2), ue(2, 3)}, false);
  CHECK(oracle::shortest_path(g, 0, 3).value == 3);
  CHECK(oracle::shortest_path(g, 2, 2).value == 0);

  const Graph negative = Graph::make(false, 2, {we(0, 1, -3)}, true);
  CHECK_THROWS_AS((void)oracle::shortest_path(negative, 0, 1), OracleError);
}

TEST_CASE("max flow matches the hand computation and the cut bound") {
  const Graph g = Graph::make(
      true, 4, {we(0, 1, 3), we(0, 2, 2), we(1, 2, 5), we(1, 3, 2),
                we(2, 3, 3)},
      true);
  const Answer a = oracle::max_flow(g, 0, 3);
  CHECK(a.value == 5);
  CHECK(a.value == brute::min_cut(4,
                                  {{0, 1, 3}, {0, 2, 2}, {1, 2, 5}, {1, 3, 2},
                                   {2, 3, 3}},
                                  true, 0, 3));
  // An undirected edge carries capacity both ways.
  const Graph u = Graph::make(false, 3, {we(0, 1, 4), we(1, 2, 2)}, true);
  CHECK(oracle::max_flow(u, 0, 2).value == 2);
  CHECK(oracle::max_flow(u, 2, 0).value == 2);
}

TEST_CASE("bipartite reports colorability and matching size") {
  const Graph even_cycle = Graph::make(
      false, 4, {ue(0, 1), ue(1, 2), ue(2, 3), ue(3, 0)}, false);
  const Answer yes = oracle::bipartite(even_cycle);
  CHECK(yes.truth);
  CHECK(yes.value == 2);

  const Graph triangle =
      Graph::make(false, 3, {ue(0, 1), ue(1, 2), ue(0, 2)}, false);
  CHECK(!oracle::bipartite(triangle).truth);

  const Graph star = Graph::make(
      false, 4, {ue(0, 1), ue(0, 2), ue(0, 3)}, false);
  const Answer s = oracle::bipartite(star);
  CHECK(s.truth);
  CHECK(s.value == 1);
}

TEST_CASE("hamilton path finds the mislabeled instance") {
  const Graph g = mislabeled_hamilton();
  const Answer a = oracle::hamilton_path(g);
  CHECK(a.truth);
  CHECK(verify::hamilton(g, a.nodes));
  // The published counterexample is itself a valid witness.
  CHECK(verify::hamilton(g, {2, 0, 1, 3, 4}));
}

TEST_CASE("hamilton path refuses a star") {
  const Graph star = Graph::make(
      false, 4, {ue(0, 1), ue(0, 2), ue(0, 3)}, false);
  const Answer a = oracle::hamilton_path(star);
  CHECK(!a.truth);
  CHECK(a.to_text() == "No");
  CHECK(!brute::exists_hamilton_path(
      4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}, false));
}

TEST_CASE("subgraph match separates the two embedding modes") {
  const Graph path = Graph::make(false, 3, {ue(0, 1), ue(1, 2)}, false);
  const Graph triangle =
      Graph::make(false, 3, {ue(0, 1), ue(1, 2), ue(0, 2)}, false);
  CHECK(oracle::subgraph_match(path, triangle,
                               oracle::SubgraphMode::monomorphism)
            .truth);
  CHECK(!oracle::subgraph_match(path, triangle,
                                oracle::SubgraphMode::induced_isomorphism)
             .truth);
  CHECK(oracle::subgraph_match(triangle, triangle,
                               oracle::SubgraphMode::induced_isomorphism)
            .truth);
  // A pattern larger than its host never embeds.
  const Graph big = Graph::make(false, 4, {ue(0, 1), ue(1, 2), ue(2, 3)},
                                false);
  CHECK(!oracle::subgraph_match(big, triangle,
                                oracle::SubgraphMode::monomorphism)
             .truth);
}

TEST_CASE("pagerank picks node 2 on the mislabeled instance") {
  const Graph g = mislabeled_pagerank();
  const Answer a = oracle::pagerank(g, 0.85, 3);
  CHECK(a.value == 2);
  REQUIRE(a.scores.size() == 5);

  const std::vector<double> reference = brute::power_iteration(
      5,
      {{3, 2, 1}, {3, 1, 1}, {2, 0, 1}, {2, 1, 1}, {2, 4, 1}, {1, 3, 1},
       {1, 0, 1}, {0, 2, 1}},
      true, 0.85, 3);
  double total = 0.0;
  for (int i = 0; i < 5; ++i) {
    CHECK(std::abs(a.scores[i] - reference[i]) < 1e-12);
    total += a.scores[i];
  }
  CHECK(std::abs(total - 1.0) < 1e-9);
}

TEST_CASE("mst totals the light spanning tree") {
  const Graph g = Graph::make(false, 4,
                              {we(0, 1, 1), we(1, 2, 2), we(2, 3, 3),
                               we(0, 3, 10), we(0, 2, 7)},
                              true);
  const Answer a = oracle::mst_weight(g);
  CHECK(a.value == 6);
  CHECK(verify::spanning_tree(g, a.edge_pairs, 6));
  CHECK(a.value == brute::spanning_min_weight(
                       4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {0, 3, 10},
                           {0, 2, 7}}));
  const Graph split = Graph::make(false, 3, {we(0, 1, 2)}, true);
  CHECK_THROWS_AS((void)oracle::mst_weight(split), OracleError);
}

TEST_CASE("set optimizers agree on the five-cycle") {
  const Graph c5 = Graph::make(
      false, 5, {ue(0, 1), ue(1, 2), ue(2, 3), ue(3, 4), ue(4, 0)}, false);
  const Answer mis = oracle::exact_mis(c5);
  CHECK(mis.value == 2);
  CHECK(verify::independent_set(c5, mis.nodes, mis.value));
  const Answer mvc = oracle::exact_mvc(c5);
  CHECK(mvc.value == 3);
  CHECK(verify::vertex_cover(c5, mvc.nodes, mvc.value));
  const Answer clique = oracle::max_clique(c5);
  CHECK(clique.value == 2);
  CHECK(verify::clique(c5, clique.nodes, clique.value));
}

TEST_CASE("set optimizers agree on the star") {
  const Graph star = Graph::make(
      false, 5, {ue(0, 1), ue(0, 2), ue(0, 3), ue(0, 4)}, false);
  CHECK(oracle::exact_mis(star).value == 4);
  CHECK(oracle::exact_mvc(star).value == 1);
  CHECK(oracle::max_clique(star).value == 2);
}

TEST_CASE("maximum common subgraph of isomorphic graphs is everything") {
  // Both are "paw" graphs: a triangle with one pendant node.
  const Graph a = Graph::make(
      false, 4, {ue(0, 1), ue(1, 2), ue(0, 2), ue(2, 3)}, false);
  const Graph b = Graph::make(
      false, 4, {ue(0, 3), ue(3, 2), ue(0, 2), ue(0, 1)}, false);
  const Answer common = oracle::max_common_subgraph(a, b);
  CHECK(common.value == 4);
  CHECK(common.edge_pairs.size() == 4);
  CHECK(verify::common_mapping(a, b, common.edge_pairs));
}

TEST_CASE("maximum common subgraph of the paw and the path is a short path") {
  const Graph paw = Graph::make(
      false, 4, {ue(0, 1), ue(1, 2), ue(0, 2), ue(2, 3)}, false);
  const Graph path = Graph::make(
      false, 4, {ue(0, 1), ue(1, 2), ue(2, 3)}, false);
  const Answer common = oracle::max_common_subgraph(paw, path);
  CHECK(common.value == 3);
  CHECK(common.edge_pairs.size() == 3);
  CHECK(verify::common_mapping(paw, path, common.edge_pairs));
}

TEST_CASE("tsp solves the four-city instance") {
  const Graph g = Graph::make(false, 4,
                              {we(0, 1, 1), we(0, 2, 4), we(0, 3, 3),
                               we(1, 2, 2), we(1, 3, 5), we(2, 3, 6)},
                              true);
  const Answer a = oracle::tsp_held_karp(g);
  CHECK(a.value == 12);
  CHECK(verify::tour(g, a.nodes, 12));
  CHECK(a.nodes.front() == 0);
  CHECK(a.value == brute::tour_min_cost(
                       4, {{0, 1, 1}, {0, 2, 4}, {0, 3, 3}, {1, 2, 2},
                           {1, 3, 5}, {2, 3, 6}}));
}

TEST_CASE("tsp reports -1 when no tour closes") {
  const Graph g = Graph::make(false, 4,
                              {we(0, 1, 1), we(1, 2, 1), we(2, 3, 1)}, true);
  CHECK(oracle::tsp_held_karp(g).value == -1);
  CHECK(brute::tour_min_cost(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}) == -1);
}

TEST_CASE("exact solvers enforce their size bounds") {
  std::vector<Edge> none;
  const Graph big41 = Graph::make(false, oracle::kBranchAndBoundNodeLimit + 1,
                                  none, false);
  CHECK_THROWS_AS((void)oracle::exact_mis(big41), BudgetError);
  CHECK_THROWS_AS((void)oracle::exact_mvc(big41), BudgetError);
  CHECK_THROWS_AS((void)oracle::max_clique(big41), BudgetError);

  const Graph big21 =
      Graph::make(false, oracle::kTspNodeLimit + 1, none, true);
  CHECK_THROWS_AS((void)oracle::tsp_held_karp(big21), BudgetError);

  const Graph big17 =
      Graph::make(false, oracle::kSubgraphNodeLimit + 1, none, false);
  const Graph tiny = Graph::make(false, 2, {ue(0, 1)}, false);
  CHECK_THROWS_AS((void)oracle::subgraph_match(
                      tiny, big17, oracle::SubgraphMode::monomorphism),
                  BudgetError);

  // The common-subgraph bound applies to the smaller side: a small graph
  // against a big host is fine, two oversized graphs are not.
  const Graph big11 =
      Graph::make(false, oracle::kCommonSubgraphNodeLimit + 1, none, false);
  CHECK_NOTHROW((void)oracle::max_common_subgraph(big11, tiny));
  CHECK_THROWS_AS((void)oracle::max_common_subgraph(big11, big11), BudgetError);
}
