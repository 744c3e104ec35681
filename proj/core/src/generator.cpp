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

#include "graphrtc/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <utility>

#include <fmt/core.h>

#include "graphrtc/oracle.hpp"
#include "graphrtc/strutil.hpp"

namespace grtc {
namespace {

struct FamilyInfo {
  std::string_view name;
  bool directed;
  bool weighted;
  CheckerKind checker;
};

FamilyInfo family_info(TaskFamily f) {
  switch (f) {
    case TaskFamily::shortest_path:
      return {"shortest_path", false, true, CheckerKind::exact_int};
    case TaskFamily::cycle_detect:
      return {"cycle_detect", true, false, CheckerKind::yes_no};
    case TaskFamily::topo_sort:
      return {"topo_sort", true, false, CheckerKind::valid_order};
    case TaskFamily::max_flow:
      return {"max_flow", true, true, CheckerKind::exact_int};
    case TaskFamily::hamilton_path:
      return {"hamilton_path", false, false, CheckerKind::valid_path_optimal};
    case TaskFamily::tsp:
      return {"tsp", false, true, CheckerKind::exact_int};
    case TaskFamily::mis:
      return {"mis", false, false, CheckerKind::valid_set_optimal};
    case TaskFamily::jaccard:
      return {"jaccard", false, false, CheckerKind::numeric_tol};
    case TaskFamily::degree_queries:
      return {"degree_queries", false, false,
              CheckerKind::exact_text_multiline};
    case TaskFamily::mst:
      return {"mst", false, true, CheckerKind::exact_int};
    case TaskFamily::diameter:
      return {"diameter", false, false, CheckerKind::exact_int};
    case TaskFamily::triangle_count:
      return {"triangle_count", false, false, CheckerKind::exact_int};
  }
  return {"shortest_path", false, true, CheckerKind::exact_int};
}

constexpr TaskFamily kAllFamilies[] = {
    TaskFamily::shortest_path, TaskFamily::cycle_detect,
    TaskFamily::topo_sort,     TaskFamily::max_flow,
    TaskFamily::hamilton_path, TaskFamily::tsp,
    TaskFamily::mis,           TaskFamily::jaccard,
    TaskFamily::degree_queries, TaskFamily::mst,
    TaskFamily::diameter,      TaskFamily::triangle_count,
};

int edge_target(const GeneratorParams& p) {
  const double exact = p.density * p.n * (p.n - 1) / 2.0;
  return static_cast<int>(std::floor(exact));
}

// Index decode over unordered pairs u < v of [0, n).
std::pair<int, int> undirected_pair(std::uint64_t k, int n) {
  for (int u = 0; u < n; ++u) {
    const std::uint64_t row = static_cast<std::uint64_t>(n - 1 - u);
    if (k < row) return {u, u + 1 + static_cast<int>(k)};
    k -= row;
  }
  return {0, 1};
}

// Index decode over ordered pairs u != v of [0, n).
std::pair<int, int> directed_pair(std::uint64_t k, int n) {
  const int u = static_cast<int>(k / static_cast<std::uint64_t>(n - 1));
  const int r = static_cast<int>(k % static_cast<std::uint64_t>(n - 1));
  return {u, r + (r >= u ? 1 : 0)};
}

std::string render_edges(const std::vector<Edge>& edges, bool weighted) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) out.push_back(' ');
    if (weighted) {
      out += fmt::format("({},{},{})", edges[i].u, edges[i].v,
                         *edges[i].weight);
    } else {
      out += fmt::format("({},{})", edges[i].u, edges[i].v);
    }
  }
  return out;
}

std::string join_nodes(const std::vector<int>& nodes) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(nodes[i]);
  }
  return out;
}

std::vector<Edge> weight_edges(std::vector<Edge> edges, DeterministicRng& rng,
                               const GeneratorParams& p) {
  for (auto& e : edges) {
    e.weight = rng.between(p.weight_min, p.weight_max);
  }
  return edges;
}

// m distinct edges sampled uniformly; undirected pairs or ordered pairs.
std::vector<Edge> sample_edges(DeterministicRng& rng, int n, int m,
                               bool directed) {
  const std::uint64_t pairs =
      directed ? static_cast<std::uint64_t>(n) * (n - 1)
               : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const auto picks = rng.sample_distinct(pairs, static_cast<std::size_t>(m));
  std::vector<Edge> edges;
  edges.reserve(picks.size());
  for (const auto k : picks) {
    const auto [u, v] = directed ? directed_pair(k, n) : undirected_pair(k, n);
    edges.push_back(Edge{u, v, std::nullopt});
  }
  return edges;
}

// Spanning tree plus uniform extra edges: every graph is connected.
std::vector<Edge> sample_connected_edges(DeterministicRng& rng, int n, int m) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);

  std::set<std::pair<int, int>> used;
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    const int a = order[i];
    const int b = order[static_cast<int>(rng.below(i))];
    const auto key = std::minmax(a, b);
    used.insert(key);
    edges.push_back(Edge{key.first, key.second, std::nullopt});
  }
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::vector<std::uint64_t> remaining;
  remaining.reserve(pairs - used.size());
  for (std::uint64_t k = 0; k < pairs; ++k) {
    const auto [u, v] = undirected_pair(k, n);
    if (!used.contains({u, v})) remaining.push_back(k);
  }
  const int extras = std::max(0, m - (n - 1));
  std::vector<int> idx(remaining.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  rng.shuffle(idx);
  for (int i = 0; i < extras && i < static_cast<int>(idx.size()); ++i) {
    const auto [u, v] = undirected_pair(remaining[idx[i]], n);
    edges.push_back(Edge{u, v, std::nullopt});
  }
  return edges;
}

// DAG: undirected pairs oriented by a hidden random permutation.
std::vector<Edge> orient_acyclic(std::vector<Edge> edges, DeterministicRng& rng,
                                 int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  for (auto& e : edges) {
    if (position[e.u] > position[e.v]) std::swap(e.u, e.v);
  }
  return edges;
}

std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back(Edge{u, v, std::nullopt});
  }
  return edges;
}

std::pair<int, int> distinct_nodes(DeterministicRng& rng, int n) {
  const int s = static_cast<int>(rng.below(n));
  int t = static_cast<int>(rng.below(n - 1));
  if (t >= s) ++t;
  return {s, t};
}

constexpr std::string_view kUndirectedWeighted =
    "In an undirected graph, (i,j,k) means that node i and node j are "
    "connected with an undirected edge with weight k.";
constexpr std::string_view kUndirectedPlain =
    "In an undirected graph, (i,j) means that node i and node j are "
    "connected with an undirected edge.";
constexpr std::string_view kDirectedWeighted =
    "In a directed graph, (i,j,k) means that node i and node j are connected "
    "with a directed edge from node i to node j with capacity k.";
constexpr std::string_view kDirectedPlain =
    "In a directed graph, (i,j) means that node i and node j are connected "
    "with a directed edge from node i to node j.";

std::string problem_body(std::string_view intro, std::string_view convention,
                         std::string_view task, int n,
                         const std::vector<Edge>& edges, bool weighted,
                         std::string_view question) {
  return fmt::format(
      "{} {} {} Q: The nodes are numbered from 0 to {}, and the edges are: "
      "{}. {}",
      intro, convention, task, n - 1, render_edges(edges, weighted), question);
}

struct Generated {
  std::string problem_text;
  std::string gold_answer;
  std::map<std::string, std::string> extra_meta;
  int edge_count = 0;
};

Generated generate_one(TaskFamily family, const GeneratorParams& params,
                       DeterministicRng& rng) {
  const FamilyInfo info = family_info(family);
  const int n = params.n;
  const int m = edge_target(params);
  Generated out;

  switch (family) {
    case TaskFamily::shortest_path: {
      auto edges = weight_edges(sample_edges(rng, n, m, false), rng, params);
      const auto [s, t] = distinct_nodes(rng, n);
      out.problem_text = problem_body(
          "Find the shortest path between two nodes in an undirected graph.",
          kUndirectedWeighted,
          "Given a graph and a pair of nodes, you need to output the shortest "
          "path between the two nodes.",
          n, edges, true,
          fmt::format(
              "Give the weight of the shortest path from node {} to node {}.",
              s, t));
      const Graph g = Graph::make(false, n, edges, true);
      out.gold_answer = std::to_string(oracle::shortest_path(g, s, t).value);
      out.extra_meta["s"] = std::to_string(s);
      out.extra_meta["t"] = std::to_string(t);
      out.edge_count = static_cast<int>(edges.size());
      break;
    }
    case TaskFamily::cycle_detect: {
      auto edges = sample_edges(rng, n, m, true);
      out.problem_text = problem_body(
          "Determine whether or not there is a cycle in a directed graph.",
          kDirectedPlain,
          "Given a graph, you need to output Yes or No, indicating whether "
          "there is a cycle in the graph.",
          n, edges, false, "Is there a cycle in this graph?");
      const Graph g = Graph::make(true, n, edges, false);
      out.gold_answer = oracle::detect_cycle(g).truth ? "Yes" : "No";
      out.edge_count = static_cast<int>(edges.size());
      break;
    }
    case TaskFamily::topo_sort: {
      auto edges = orient_acyclic(sample_edges(rng, n, m, false), rng, n);
      out.problem_text = problem_body(
          "Find one topological ordering of a directed acyclic graph.",
          kDirectedPlain,
          "Given a graph, you need to output a valid topological ordering of "
          "its nodes.",
          n, edges, false,
          "Give a valid topological ordering of the nodes, separated by "
          "spaces.");
      const Graph g = Graph::make(true, n, edges, false);
      out.gold_answer = join_nodes(oracle::topological_order(g).nodes);
      out.edge_count = static_cast<int>(edges.size());
      break;
    }
    case TaskFamily::max_flow: {
      auto edges = weight_edges(sample_edges(rng, n, m, true), rng, params);
      const auto [s, t] = distinct_nodes(rng, n);
      out.problem_text = problem_body(
          "Find the maximum flow between two nodes in a directed graph.",
          kDirectedWeighted,
          "Given a graph and a pair of nodes, you need to output the maximum "
          "flow between the two nodes.",
          n, edges, true,
          fmt::format("Give the maximum flow from node {} to node {}.", s, t));
      const Graph g = Graph::make(true, n, edges, true);
      out.gold_answer = std::to_string(oracle::max_flow(g, s, t).value);
      out.extra_meta["s"] = std::to_string(s);
      out.extra_meta["t"] = std::to_string(t);
      out.edge_count = static_cast<int>(edges.size());
      break;
    }
    case TaskFamily::hamilton_path: {
      auto edges = sample_edges(rng, n, m, false);
      out.problem_text = problem_body(
          "Determine whether or not there is a Hamiltonian path in an "
          "undirected graph.",
          kUndirectedPlain,
          "Given a graph, you need to determine whether there is a path that "
          "visits every node exactly once.",
          n, edges, false,
          "If there is a Hamiltonian path in this graph, give one as a "
          "sequence of nodes separated by spaces; otherwise output No.");
      const Graph g = Graph::make(false, n, edges, false);
      const auto ans = oracle::hamilton_path(g);
      out.gold_answer = ans.truth ? join_nodes(ans.nodes) : "No";
      out.edge_count = static_cast<int>(edges.size());
      break;
    }
    case TaskFamily::tsp: {
      auto edges = weight_edges(complete_edges(n), rng, params);
      out.problem_text = problem_body(
          "Solve the traveling salesman problem in a complete undirected "
          "graph.",
          kUndirectedWeighted,
          "Given a complete graph, you need to output the total weight of the "
          "shortest tour that visits every node exactly once and returns to "
          "the starting node.",
          n, edges, true, "Give the total weight of the shortest tour.");
      const Graph g = Graph::make(false, n, edges, true);
      out.gold_answer = std::to_string(oracle::tsp_held_karp(g).value);
      out.edge_count = static_cast<int>(edges.size());
      break;
    }
    case TaskFamily::mis: {
      auto edges = sample_edges(rng, n, m, false);
      out.problem_text = problem_body(
          "Find a maximum independent set in an undirected graph.",
          kUndirectedPlain,
          "Given a graph, you need to output a maximum independent set, a "
          "largest set of nodes no two of which are adjacent.",
          n, edges, false,
          "Give the nodes of a maximum independent set, separated by "
          "spaces.");
      const Graph g = Graph::make(false, n, edges, false);
      out.gold_answer = join_nodes(oracle::exact_mis(g).nodes);
      out.edge_count = static_cast<int>(edges.size());
      break;
    }
    case TaskFamily::jaccard: {
      auto edges = sample_edges(rng, n, m, false);
      const auto [u, v] = distinct_nodes(rng, n);
      out.problem_text = problem_body(
          "Compute the Jaccard coefficient of two nodes in an undirected "
          "graph.",
          kUndirectedPlain,
          "The Jaccard coefficient is the number of common neighbors divided "
          "by the number of nodes that are neighbors of at least one of the "
          "two. Given a graph and a pair of nodes, you need to output their "
          "Jaccard coefficient rounded to six decimal places.",
          n, edges, false,
          fmt::format(
              "Give the Jaccard coefficient of node {} and node {}.", u, v));
      const Graph g = Graph::make(false, n, edges, false);
      const auto ans = oracle::local_query(
          g, oracle::LocalQuery{oracle::LocalQueryKind::jaccard, u, v});
      out.gold_answer =
          fmt::format("{:.6f}", static_cast<double>(ans.rational.first) /
                                    static_cast<double>(ans.rational.second));
      out.extra_meta["u"] = std::to_string(u);
      out.extra_meta["v"] = std::to_string(v);
      out.edge_count = static_cast<int>(edges.size());
      break;
    }
    case TaskFamily::degree_queries: {
      auto edges = sample_edges(rng, n, m, false);
      const auto picks = rng.sample_distinct(n, std::min(3, n));
      std::vector<int> queries(picks.begin(), picks.end());
      out.problem_text = problem_body(
          "Count the degree of given nodes in an undirected graph.",
          kUndirectedPlain,
          "Given a graph and a list of nodes, you need to output the degree "
          "of each listed node on its own line.",
          n, edges, false,
          fmt::format("Give the degree of each of the following nodes, one "
                      "per line: {}.",
                      join_nodes(queries)));
      const Graph g = Graph::make(false, n, edges, false);
      std::string gold;
      for (std::size_t i = 0; i < queries.size(); ++i) {
        if (i > 0) gold.push_back('\n');
        gold += std::to_string(g.degree(queries[i]));
      }
      out.gold_answer = gold;
      out.extra_meta["queries"] = join_nodes(queries);
      out.edge_count = static_cast<int>(edges.size());
      break;
    }
    case TaskFamily::mst: {
      auto edges = weight_edges(sample_connected_edges(rng, n, m), rng, params);
      out.problem_text = problem_body(
          "Find the minimum spanning tree of a connected undirected graph.",
          kUndirectedWeighted,
          "Given a connected graph, you need to output the total weight of "
          "its minimum spanning tree.",
          n, edges, true,
          "Give the total weight of the minimum spanning tree.");
      const Graph g = Graph::make(false, n, edges, true);
      out.gold_answer = std::to_string(oracle::mst_weight(g).value);
      out.edge_count = static_cast<int>(edges.size());
      break;
    }
    case TaskFamily::diameter: {
      auto edges = sample_connected_edges(rng, n, m);
      out.problem_text = problem_body(
          "Compute the diameter of a connected undirected graph.",
          kUndirectedPlain,
          "The diameter is the greatest distance between any pair of nodes. "
          "Given a connected graph, you need to output its diameter.",
          n, edges, false, "Give the diameter of this graph.");
      const Graph g = Graph::make(false, n, edges, false);
      out.gold_answer = std::to_string(
          oracle::connectivity_query(
              g, oracle::ConnectivityQuery{
                     oracle::ConnectivityQueryKind::diameter, -1, -1, 0})
              .value);
      out.edge_count = static_cast<int>(edges.size());
      break;
    }
    case TaskFamily::triangle_count: {
      auto edges = sample_edges(rng, n, m, false);
      out.problem_text = problem_body(
          "Count the number of triangles in an undirected graph.",
          kUndirectedPlain,
          "Given a graph, you need to output the number of triangles in it.",
          n, edges, false, "Give the number of triangles in this graph.");
      const Graph g = Graph::make(false, n, edges, false);
      out.gold_answer = std::to_string(
          oracle::local_query(
              g, oracle::LocalQuery{oracle::LocalQueryKind::triangle_count})
              .value);
      out.edge_count = static_cast<int>(edges.size());
      break;
    }
  }
  (void)info;
  return out;
}

}  // namespace

std::string_view family_name(TaskFamily f) { return family_info(f).name; }

std::optional<TaskFamily> family_from_name(std::string_view name) {
  for (const TaskFamily f : kAllFamilies) {
    if (family_info(f).name == name) return f;
  }
  return std::nullopt;
}

bool family_directed(TaskFamily f) { return family_info(f).directed; }
bool family_weighted(TaskFamily f) { return family_info(f).weighted; }

std::string_view checker_kind_name(CheckerKind k) {
  switch (k) {
    case CheckerKind::yes_no:
      return "yes_no";
    case CheckerKind::exact_int:
      return "exact_int";
    case CheckerKind::numeric_tol:
      return "numeric_tol";
    case CheckerKind::valid_order:
      return "valid_order";
    case CheckerKind::valid_path_optimal:
      return "valid_path_optimal";
    case CheckerKind::valid_set_optimal:
      return "valid_set_optimal";
    case CheckerKind::exact_text_multiline:
      return "exact_text_multiline";
  }
  return "exact_int";
}

CheckerKind family_checker(TaskFamily f) { return family_info(f).checker; }

TaskSpec make_task_spec(TaskFamily family, GeneratorParams params) {
  TaskSpec spec;
  spec.task_id = std::string(family_name(family));
  spec.family = family;
  spec.checker = family_checker(family);
  spec.params = params;
  return spec;
}

TaskSpec resolve_task_spec(const ProblemInstance& inst) {
  const auto it = inst.meta.find("family");
  if (it == inst.meta.end()) {
    throw DatasetError(
        fmt::format("instance '{}' has no family metadata", inst.task_id));
  }
  const auto family = family_from_name(it->second);
  if (!family) {
    throw DatasetError(fmt::format("instance '{}' names unknown family '{}'",
                                   inst.task_id, it->second));
  }
  TaskSpec spec = make_task_spec(*family);
  spec.task_id = inst.task_id;
  if (const auto n = inst.meta.find("n"); n != inst.meta.end()) {
    if (const auto parsed = parse_int(n->second)) {
      spec.params.n = static_cast<int>(*parsed);
    }
  }
  if (const auto d = inst.meta.find("density"); d != inst.meta.end()) {
    spec.params.density = std::strtod(d->second.c_str(), nullptr);
  }
  if (const auto w = inst.meta.find("weight_min"); w != inst.meta.end()) {
    if (const auto parsed = parse_int(w->second)) {
      spec.params.weight_min = static_cast<int>(*parsed);
    }
  }
  if (const auto w = inst.meta.find("weight_max"); w != inst.meta.end()) {
    if (const auto parsed = parse_int(w->second)) {
      spec.params.weight_max = static_cast<int>(*parsed);
    }
  }
  return spec;
}

std::vector<ProblemInstance> generate_instances(const TaskSpec& spec,
                                                int count,
                                                std::uint64_t seed) {
  if (spec.params.n < 2) throw Error("generator needs at least two nodes");
  if (count < 0) throw Error("instance count cannot be negative");
  std::vector<ProblemInstance> out;
  out.reserve(static_cast<std::size_t>(count));
  const auto family_ordinal =
      static_cast<std::uint64_t>(static_cast<int>(spec.family));
  for (int i = 0; i < count; ++i) {
    // Per-instance stream: instance i is the same no matter the count.
    DeterministicRng rng(seed * 0x9e3779b97f4a7c15ull +
                         family_ordinal * 0x100000001b3ull +
                         static_cast<std::uint64_t>(i) * 0x2545f4914f6cdd1dull);
    Generated g = generate_one(spec.family, spec.params, rng);
    ProblemInstance inst;
    inst.task_id = spec.task_id;
    inst.problem_text = std::move(g.problem_text);
    inst.gold_answer = std::move(g.gold_answer);
    inst.meta["family"] = std::string(family_name(spec.family));
    inst.meta["n"] = std::to_string(spec.params.n);
    inst.meta["m"] = std::to_string(g.edge_count);
    inst.meta["density"] = fmt::format("{}", spec.params.density);
    inst.meta["weight_min"] = std::to_string(spec.params.weight_min);
    inst.meta["weight_max"] = std::to_string(spec.params.weight_max);
    inst.meta["seed"] = std::to_string(seed);
    inst.meta["index"] = std::to_string(i);
    for (auto& [key, value] : g.extra_meta) inst.meta[key] = value;
    out.push_back(std::move(inst));
  }
  return out;
}

Graph instance_graph(const TaskSpec& spec, const ProblemInstance& inst) {
  return parse_graph_text(inst.problem_text, family_directed(spec.family),
                          family_weighted(spec.family));
}

// ---------------------------------------------------------------------------
// DeterministicRng: splitmix64 stream with rejection sampling.

DeterministicRng::DeterministicRng(std::uint64_t seed) : state_(seed) {}

std::uint64_t DeterministicRng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t DeterministicRng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("DeterministicRng::below requires bound >= 1");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

long long DeterministicRng::between(long long lo, long long hi) {
  if (lo > hi) throw Error("DeterministicRng::between requires lo <= hi");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(below(span));
}

void DeterministicRng::shuffle(std::vector<int>& values) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(below(i));
    std::swap(values[i - 1], values[j]);
  }
}

std::vector<std::uint64_t> DeterministicRng::sample_distinct(
    std::uint64_t bound, std::size_t k) {
  if (k > bound) {
    throw Error(fmt::format("cannot sample {} distinct values below {}", k,
                            bound));
  }
  std::vector<std::uint64_t> pool(bound);
  for (std::uint64_t i = 0; i < bound; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t j = i + below(bound - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace grtc
