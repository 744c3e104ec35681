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

#ifndef GRAPHRTC_EVALUATE_HPP_
#define GRAPHRTC_EVALUATE_HPP_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "graphrtc/instance.hpp"
#include "graphrtc/pipeline.hpp"

namespace grtc {

// Anything that turns an instance into an answer attempt.
class Solver {
 public:
  virtual ~Solver() = default;
  virtual SolveOutcome solve(const ProblemInstance& inst) = 0;
  virtual std::string_view name() const = 0;
};

// The full staged pipeline with caching and sandboxed execution.
class PipelineSolver : public Solver {
 public:
  PipelineSolver(std::shared_ptr<ChatBackend> backend, PipelineConfig config,
                 ArtifactCache* cache, sandbox::SandboxPool* pool = nullptr);

  SolveOutcome solve(const ProblemInstance& inst) override;
  std::string_view name() const override { return "pipeline"; }

 private:
  Pipeline pipeline_;
  ArtifactCache* cache_;
  sandbox::SandboxPool* pool_;
};

// Language-only baseline: one prompt per instance, the completion text is
// the answer. No extraction, no code, no cache.
class DirectSolver : public Solver {
 public:
  DirectSolver(std::shared_ptr<ChatBackend> backend, std::string model_id,
               int max_tokens = 4096, double temperature = 0.0);

  SolveOutcome solve(const ProblemInstance& inst) override;
  std::string_view name() const override { return "direct"; }

 private:
  std::shared_ptr<ChatBackend> backend_;
  std::string model_id_;
  int max_tokens_;
  double temperature_;
};

struct TaskReport {
  std::string task_id;
  int count = 0;
  int correct = 0;
  int wrong = 0;
  // Solve failures keyed by classification (e.g. "timeout",
  // "nonzero_exit", "backend_failure").
  std::map<std::string, int> failures;
  Usage usage;

  int failure_count() const;
  double accuracy() const;
  double wall_seconds_per_problem() const;
  double cost_per_problem() const;
};

struct EvalReport {
  std::vector<TaskReport> tasks;  // sorted by task_id
  int total_count = 0;
  int total_correct = 0;
  int total_wrong = 0;
  std::map<std::string, int> total_failures;
  Usage total_usage;

  // Micro: correct over all instances. Macro: mean of per-task accuracy.
  double micro_accuracy() const;
  double macro_accuracy() const;
  double wall_seconds_per_problem() const;
};

struct EvalOptions {
  int workers = 1;
};

// Runs every instance through the solver and judges the results. Task
// specs are reconstructed from instance metadata. Failures never abort
// the run; they are counted by kind. Row order is sorted by task_id, so
// reports are deterministic apart from wall-clock fields.
EvalReport evaluate(const std::vector<ProblemInstance>& dataset,
                    Solver& solver, const EvalOptions& options = {});

}  // namespace grtc

#endif  // GRAPHRTC_EVALUATE_HPP_
