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

#include "graphrtc/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "graphrtc/checker.hpp"
#include "graphrtc/generator.hpp"
#include "graphrtc/prompts.hpp"
#include "graphrtc/strutil.hpp"

namespace grtc {
namespace {

void add_usage(Usage& into, const Usage& u) {
  into.prompt_tokens += u.prompt_tokens;
  into.completion_tokens += u.completion_tokens;
  into.wall_seconds += u.wall_seconds;
  into.cost_currency_units += u.cost_currency_units;
}

// Failure bucket: the sandbox outcome when an execution failed, otherwise
// the solve status itself.
std::string failure_key(const SolveOutcome& outcome) {
  if (outcome.last_execution && !outcome.last_execution->ok()) {
    return std::string(sandbox::outcome_name(outcome.last_execution->outcome));
  }
  return std::string(solve_status_name(outcome.status));
}

}  // namespace

PipelineSolver::PipelineSolver(std::shared_ptr<ChatBackend> backend,
                               PipelineConfig config, ArtifactCache* cache,
                               sandbox::SandboxPool* pool)
    : pipeline_(std::move(backend), std::move(config)),
      cache_(cache),
      pool_(pool) {}

SolveOutcome PipelineSolver::solve(const ProblemInstance& inst) {
  return pipeline_.solve_instance(inst, cache_, pool_);
}

DirectSolver::DirectSolver(std::shared_ptr<ChatBackend> backend,
                           std::string model_id, int max_tokens,
                           double temperature)
    : backend_(std::move(backend)),
      model_id_(std::move(model_id)),
      max_tokens_(max_tokens),
      temperature_(temperature) {}

SolveOutcome DirectSolver::solve(const ProblemInstance& inst) {
  SolveOutcome out;
  ChatRequest request;
  request.stage = Stage::direct;
  request.prompt = prompts::render_direct(inst.problem_text);
  request.model_id = model_id_;
  request.max_tokens = max_tokens_;
  request.temperature = temperature_;
  request.task_key = inst.task_id;
  try {
    const Completion c = backend_->complete(request);
    out.status = SolveStatus::ok;
    out.answer_text = std::string(trim(c.text));
    out.usage = c.usage;
  } catch (const BackendError& e) {
    out.status = SolveStatus::backend_failure;
    out.failure_detail = e.what();
  }
  return out;
}

int TaskReport::failure_count() const {
  int total = 0;
  for (const auto& [key, value] : failures) total += value;
  return total;
}

double TaskReport::accuracy() const {
  return count > 0 ? static_cast<double>(correct) / count : 0.0;
}

double TaskReport::wall_seconds_per_problem() const {
  return count > 0 ? usage.wall_seconds / count : 0.0;
}

double TaskReport::cost_per_problem() const {
  return count > 0 ? usage.cost_currency_units / count : 0.0;
}

double EvalReport::micro_accuracy() const {
  return total_count > 0 ? static_cast<double>(total_correct) / total_count
                         : 0.0;
}

double EvalReport::macro_accuracy() const {
  if (tasks.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& t : tasks) sum += t.accuracy();
  return sum / static_cast<double>(tasks.size());
}

double EvalReport::wall_seconds_per_problem() const {
  return total_count > 0 ? total_usage.wall_seconds / total_count : 0.0;
}

EvalReport evaluate(const std::vector<ProblemInstance>& dataset,
                    Solver& solver, const EvalOptions& options) {
  std::vector<SolveOutcome> outcomes(dataset.size());
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= dataset.size()) return;
      try {
        outcomes[i] = solver.solve(dataset[i]);
      } catch (const std::exception& e) {
        outcomes[i] = SolveOutcome{};
        outcomes[i].status = SolveStatus::backend_failure;
        outcomes[i].failure_detail = e.what();
      }
    }
  };

  const int workers = std::clamp(
      options.workers, 1,
      std::max(1, static_cast<int>(dataset.size())));
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) threads.emplace_back(drain);
    for (auto& t : threads) t.join();
  }

  std::map<std::string, TaskReport> by_task;
  EvalReport report;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const ProblemInstance& inst = dataset[i];
    const SolveOutcome& outcome = outcomes[i];
    TaskReport& task = by_task[inst.task_id];
    task.task_id = inst.task_id;
    ++task.count;
    add_usage(task.usage, outcome.usage);

    if (!outcome.ok()) {
      ++task.failures[failure_key(outcome)];
      continue;
    }
    if (!inst.gold_answer) {
      ++task.failures["no_gold_answer"];
      continue;
    }
    CheckResult checked;
    try {
      checked = check_answer(resolve_task_spec(inst), outcome.answer_text,
                             inst);
    } catch (const DatasetError&) {
      ++task.failures["unknown_family"];
      continue;
    }
    if (checked.correct) {
      ++task.correct;
    } else {
      ++task.wrong;
    }
  }

  for (auto& [task_id, task] : by_task) {
    report.total_count += task.count;
    report.total_correct += task.correct;
    report.total_wrong += task.wrong;
    for (const auto& [key, value] : task.failures) {
      report.total_failures[key] += value;
    }
    add_usage(report.total_usage, task.usage);
    report.tasks.push_back(std::move(task));
  }
  return report;
}

}  // namespace grtc
