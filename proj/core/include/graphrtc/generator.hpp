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

#ifndef GRAPHRTC_GENERATOR_HPP_
#define GRAPHRTC_GENERATOR_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphrtc/graph.hpp"
#include "graphrtc/instance.hpp"

namespace grtc {

// Supported problem families. The first six form the standard offline
// evaluation suite; the rest widen checker coverage.
enum class TaskFamily {
  shortest_path,   // weighted undirected, distance s -> t, -1 unreachable
  cycle_detect,    // directed, Yes/No
  topo_sort,       // DAG, any valid order accepted
  max_flow,        // directed capacities, value s -> t
  hamilton_path,   // undirected, witness path or "No"
  tsp,             // complete weighted, optimal closed tour
  mis,             // undirected, maximum independent set
  jaccard,         // undirected, Jaccard coefficient of (u, v)
  degree_queries,  // undirected, one degree per query line
  mst,             // weighted undirected connected, total MST weight
  diameter,        // unweighted undirected connected
  triangle_count,  // undirected
};

inline constexpr TaskFamily kSuiteFamilies[] = {
    TaskFamily::shortest_path, TaskFamily::cycle_detect,
    TaskFamily::topo_sort,     TaskFamily::max_flow,
    TaskFamily::hamilton_path, TaskFamily::tsp,
};

std::string_view family_name(TaskFamily f);
std::optional<TaskFamily> family_from_name(std::string_view name);
bool family_directed(TaskFamily f);
bool family_weighted(TaskFamily f);

enum class CheckerKind {
  yes_no,
  exact_int,
  numeric_tol,
  valid_order,
  valid_path_optimal,
  valid_set_optimal,
  exact_text_multiline,
};

std::string_view checker_kind_name(CheckerKind k);
// The judge each family's answers are scored with.
CheckerKind family_checker(TaskFamily f);

struct GeneratorParams {
  int n = 10;
  double density = 0.3;
  int weight_min = 1;
  int weight_max = 100;

  friend bool operator==(const GeneratorParams&,
                         const GeneratorParams&) = default;
};

// Binds a task id to its family, judge, and generator settings. task_id
// defaults to the family name; instances generated from one spec share it.
struct TaskSpec {
  std::string task_id;
  TaskFamily family = TaskFamily::shortest_path;
  CheckerKind checker = CheckerKind::exact_int;
  GeneratorParams params;

  friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
};

TaskSpec make_task_spec(TaskFamily family, GeneratorParams params = {});

// Reconstructs the spec an instance was generated with from its metadata.
// Throws DatasetError when the metadata names no known family.
TaskSpec resolve_task_spec(const ProblemInstance& inst);

// Deterministic: identical (spec, count, seed) give byte-identical
// instances on every platform. Graphs draw exactly
// floor(density * n * (n-1) / 2) distinct edges uniformly; weights are
// uniform integers in [weight_min, weight_max]. Gold answers come from
// the exact reference solvers.
std::vector<ProblemInstance> generate_instances(const TaskSpec& spec,
                                                int count,
                                                std::uint64_t seed);

// Re-parses the graph embedded in an instance's problem text.
Graph instance_graph(const TaskSpec& spec, const ProblemInstance& inst);

// Deterministic uniform sampling helpers, independent of the standard
// library's distribution implementations so outputs never shift between
// platforms or library versions.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed);

  // Uniform in [0, bound), bound >= 1; rejection sampled, no modulo bias.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi] inclusive.
  long long between(long long lo, long long hi);
  // Fisher-Yates.
  void shuffle(std::vector<int>& values);
  // k distinct values from [0, bound), ascending.
  std::vector<std::uint64_t> sample_distinct(std::uint64_t bound,
                                             std::size_t k);

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

}  // namespace grtc

#endif  // GRAPHRTC_GENERATOR_HPP_
