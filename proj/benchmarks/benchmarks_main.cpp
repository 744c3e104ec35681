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

#include <benchmark/benchmark.h>

#include "graphrtc/generator.hpp"
#include "graphrtc/graph.hpp"
#include "graphrtc/oracle.hpp"

namespace {

using namespace grtc;

Graph random_graph(int n, double density, bool weighted, std::uint64_t seed) {
  GeneratorParams params;
  params.n = n;
  params.density = density;
  auto spec = make_task_spec(
      weighted ? TaskFamily::shortest_path : TaskFamily::mis, params);
  const auto instances = generate_instances(spec, 1, seed);
  return instance_graph(spec, instances.front());
}

void BM_ShortestPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 0.3, true, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::shortest_path(g, 0, n - 1).value);
  }
}
BENCHMARK(BM_ShortestPath)->Arg(50)->Arg(100)->Arg(200);

void BM_HeldKarpTsp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GeneratorParams params;
  params.n = n;
  const auto spec = make_task_spec(TaskFamily::tsp, params);
  const auto instances = generate_instances(spec, 1, 11);
  const Graph g = instance_graph(spec, instances.front());
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::tsp_held_karp(g).value);
  }
}
BENCHMARK(BM_HeldKarpTsp)->Arg(8)->Arg(12)->Arg(16);

void BM_MaxIndependentSet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 0.3, false, 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::exact_mis(g).value);
  }
}
BENCHMARK(BM_MaxIndependentSet)->Arg(20)->Arg(30)->Arg(40);

void BM_ParseProblemText(benchmark::State& state) {
  const auto spec = make_task_spec(TaskFamily::shortest_path);
  const auto instances = generate_instances(spec, 1, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        parse_graph_text(instances.front().problem_text, false, true));
  }
}
BENCHMARK(BM_ParseProblemText);

void BM_RenderStandardInput(benchmark::State& state) {
  const Graph g = random_graph(100, 0.3, true, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_standard_input(g));
  }
}
BENCHMARK(BM_RenderStandardInput);

}  // namespace

BENCHMARK_MAIN();
