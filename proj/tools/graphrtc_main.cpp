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

#include <atomic>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "graphrtc/checker.hpp"
#include "graphrtc/config.hpp"
#include "graphrtc/dataset.hpp"
#include "graphrtc/evaluate.hpp"
#include "graphrtc/generator.hpp"
#include "graphrtc/http_backend.hpp"
#include "graphrtc/llm.hpp"
#include "graphrtc/pipeline.hpp"
#include "graphrtc/report.hpp"
#include "graphrtc/strutil.hpp"

namespace {

using namespace grtc;
using nlohmann::json;

// Shared backend selection flags for run and eval.
struct BackendArgs {
  std::string backend = "scripted";
  std::string fixtures;
  double latency = -1.0;  // <0: take the config value
  std::string config_path;
};

void add_backend_flags(CLI::App* cmd, BackendArgs* args) {
  cmd->add_option("--backend", args->backend, "Completion backend")
      ->check(CLI::IsMember({"scripted", "live"}))
      ->capture_default_str();
  cmd->add_option("--fixtures", args->fixtures,
                  "Fixture directory for the scripted backend");
  cmd->add_option("--latency", args->latency,
                  "Simulated seconds per scripted call");
  cmd->add_option("--config", args->config_path,
                  "Plain-text key=value configuration file");
}

Config load_config(const BackendArgs& args) {
  if (args.config_path.empty()) return Config{};
  return Config::load(args.config_path);
}

std::shared_ptr<ChatBackend> make_backend(const BackendArgs& args,
                                          const Config& config) {
  if (args.backend == "live") {
    HttpChatBackend::Options options = http_options_from(config);
    if (options.api_key.empty()) {
      throw ConfigError(fmt::format(
          "live backend needs the {} environment variable", kApiKeyEnvVar));
    }
    return std::make_shared<RetryingBackend>(
        std::make_shared<HttpChatBackend>(std::move(options)));
  }
  std::string fixtures = args.fixtures;
  if (fixtures.empty()) fixtures = config.get_or("scripted.fixture_dir", "");
  if (fixtures.empty()) {
    throw ConfigError(
        "scripted backend needs --fixtures or scripted.fixture_dir");
  }
  double latency = args.latency;
  if (latency < 0) latency = config.number_or("scripted.latency_seconds", 0.0);
  return std::make_shared<ScriptedBackend>(
      fixtures, std::chrono::duration<double>(latency));
}

json usage_to_json(const Usage& u) {
  return json{{"prompt_tokens", u.prompt_tokens},
              {"completion_tokens", u.completion_tokens},
              {"wall_seconds", u.wall_seconds},
              {"cost_currency_units", u.cost_currency_units}};
}

Usage usage_from_json(const json& j) {
  Usage u;
  u.prompt_tokens = j.value("prompt_tokens", 0LL);
  u.completion_tokens = j.value("completion_tokens", 0LL);
  u.wall_seconds = j.value("wall_seconds", 0.0);
  u.cost_currency_units = j.value("cost_currency_units", 0.0);
  return u;
}

json report_to_json(const EvalReport& report) {
  json tasks = json::array();
  for (const auto& t : report.tasks) {
    json failures = json::object();
    for (const auto& [key, value] : t.failures) failures[key] = value;
    tasks.push_back(json{{"task_id", t.task_id},
                         {"count", t.count},
                         {"correct", t.correct},
                         {"wrong", t.wrong},
                         {"failures", failures},
                         {"usage", usage_to_json(t.usage)}});
  }
  json failures = json::object();
  for (const auto& [key, value] : report.total_failures) failures[key] = value;
  return json{{"tasks", tasks},
              {"total_count", report.total_count},
              {"total_correct", report.total_correct},
              {"total_wrong", report.total_wrong},
              {"total_failures", failures},
              {"total_usage", usage_to_json(report.total_usage)}};
}

EvalReport report_from_json(const json& doc) {
  EvalReport report;
  for (const auto& entry : doc.value("tasks", json::array())) {
    TaskReport t;
    t.task_id = entry.value("task_id", std::string());
    t.count = entry.value("count", 0);
    t.correct = entry.value("correct", 0);
    t.wrong = entry.value("wrong", 0);
    for (const auto& [key, value] :
         entry.value("failures", json::object()).items()) {
      t.failures[key] = value.get<int>();
    }
    if (entry.contains("usage")) t.usage = usage_from_json(entry["usage"]);
    report.tasks.push_back(std::move(t));
  }
  report.total_count = doc.value("total_count", 0);
  report.total_correct = doc.value("total_correct", 0);
  report.total_wrong = doc.value("total_wrong", 0);
  for (const auto& [key, value] :
       doc.value("total_failures", json::object()).items()) {
    report.total_failures[key] = value.get<int>();
  }
  if (doc.contains("total_usage")) {
    report.total_usage = usage_from_json(doc["total_usage"]);
  }
  return report;
}

ReportFormat parse_format(const std::string& name) {
  return name == "csv" ? ReportFormat::csv : ReportFormat::plain_table;
}

std::unique_ptr<Solver> make_solver(const std::string& mode,
                                    std::shared_ptr<ChatBackend> backend,
                                    const Config& config, ArtifactCache* cache,
                                    sandbox::SandboxPool* pool) {
  if (mode == "direct") {
    return std::make_unique<DirectSolver>(
        std::move(backend), config.get_or("model.direct", "default"),
        static_cast<int>(config.number_or("max_tokens", 4096)),
        config.number_or("temperature", 0.0));
  }
  return std::make_unique<PipelineSolver>(
      std::move(backend), pipeline_config_from(config), cache, pool);
}

int run_gen(const std::string& task, int n, double density, int weight_min,
            int weight_max, int count, std::uint64_t seed,
            const std::string& out) {
  GeneratorParams params;
  params.n = n;
  params.density = density;
  params.weight_min = weight_min;
  params.weight_max = weight_max;

  std::vector<ProblemInstance> instances;
  if (task == "suite") {
    for (const TaskFamily family : kSuiteFamilies) {
      auto batch = generate_instances(make_task_spec(family, params), count,
                                      seed);
      instances.insert(instances.end(),
                       std::make_move_iterator(batch.begin()),
                       std::make_move_iterator(batch.end()));
    }
  } else {
    const auto family = family_from_name(task);
    if (!family) {
      throw Error(fmt::format("unknown task family '{}'", task));
    }
    instances = generate_instances(make_task_spec(*family, params), count,
                                   seed);
  }
  if (out == "-") {
    fmt::print("{}", serialize_dataset(instances));
  } else {
    save_dataset(out, instances);
    fmt::print("wrote {} instances to {}\n", instances.size(), out);
  }
  return 0;
}

struct RunArgs {
  std::string dataset;
  std::string mode = "pipeline";
  BackendArgs backend;
  std::string cache_dir;
  int workers = 1;
  std::string out;
};

int run_run(const RunArgs& args) {
  const Config config = load_config(args.backend);
  const auto backend = make_backend(args.backend, config);
  std::optional<ArtifactCache> cache;
  if (!args.cache_dir.empty()) cache.emplace(args.cache_dir);
  sandbox::SandboxPool pool(std::max(1, args.workers));
  const auto solver =
      make_solver(args.mode, backend, config,
                  cache ? &*cache : nullptr, &pool);

  const auto dataset = load_dataset(args.dataset);
  std::vector<SolveOutcome> outcomes(dataset.size());
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= dataset.size()) return;
      outcomes[i] = solver->solve(dataset[i]);
    }
  };
  const int workers = std::max(1, args.workers);
  if (workers == 1) {
    drain();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < workers; ++i) threads.emplace_back(drain);
    for (auto& t : threads) t.join();
  }

  std::string lines;
  int solved = 0;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto& outcome = outcomes[i];
    if (outcome.ok()) ++solved;
    json doc{{"index", i},
             {"task_id", dataset[i].task_id},
             {"status", std::string(solve_status_name(outcome.status))},
             {"answer_text", outcome.answer_text},
             {"failure_detail", outcome.failure_detail},
             {"usage", usage_to_json(outcome.usage)}};
    lines += doc.dump();
    lines.push_back('\n');
  }
  if (args.out.empty() || args.out == "-") {
    fmt::print("{}", lines);
  } else {
    write_text_file(args.out, lines);
  }
  fmt::print(stderr, "solved {}/{} instances\n", solved, dataset.size());
  return solved == static_cast<int>(dataset.size()) ? 0 : 1;
}

struct EvalArgs {
  RunArgs run;
  std::string format = "plain";
  std::string report_out;
  std::string json_out;
  bool no_timing = false;
};

int run_eval(const EvalArgs& args) {
  const Config config = load_config(args.run.backend);
  const auto backend = make_backend(args.run.backend, config);
  std::optional<ArtifactCache> cache;
  if (!args.run.cache_dir.empty()) cache.emplace(args.run.cache_dir);
  sandbox::SandboxPool pool(std::max(1, args.run.workers));
  const auto solver =
      make_solver(args.run.mode, backend, config,
                  cache ? &*cache : nullptr, &pool);

  const auto dataset = load_dataset(args.run.dataset);
  EvalOptions options;
  options.workers = args.run.workers;
  const EvalReport report = evaluate(dataset, *solver, options);

  ReportOptions render;
  render.format = parse_format(args.format);
  render.include_timing = !args.no_timing;
  const std::string text = format_report(report, render);
  fmt::print("{}", text);
  if (!args.report_out.empty()) write_text_file(args.report_out, text);
  if (!args.json_out.empty()) {
    write_text_file(args.json_out, report_to_json(report).dump(2) + "\n");
  }
  return 0;
}

int run_report(const std::string& json_in, const std::string& format,
               const std::string& out, bool no_timing) {
  const json doc = json::parse(read_text_file(json_in));
  const EvalReport report = report_from_json(doc);
  ReportOptions render;
  render.format = parse_format(format);
  render.include_timing = !no_timing;
  const std::string text = format_report(report, render);
  if (out.empty() || out == "-") {
    fmt::print("{}", text);
  } else {
    write_text_file(out, text);
  }
  return 0;
}

int run_inspect(const std::string& cache_dir, const std::string& key) {
  ArtifactCache cache(cache_dir);
  if (key.empty()) {
    for (const auto& digest : cache.keys()) fmt::print("{}\n", digest);
    return 0;
  }
  const auto artifacts = cache.lookup(CacheKey{key});
  if (!artifacts) {
    fmt::print(stderr, "no bundle for key {}\n", key);
    return 1;
  }
  fmt::print("created_at: {}\n", artifacts->created_at);
  fmt::print("formulation:\n{}\n", artifacts->formulation.to_text());
  fmt::print("pseudocode bytes: {}\n", artifacts->pseudocode.text.size());
  fmt::print("extractor bytes: {}\n", artifacts->extractor.source.size());
  fmt::print("solver bytes: {}\n", artifacts->solver.source.size());
  for (const auto& p : artifacts->provenance) {
    fmt::print("stage {}: model={} prompt_tokens={} completion_tokens={} "
               "wall={:.3f}s cost={:.6f}\n",
               stage_name(p.stage), p.model_id, p.usage.prompt_tokens,
               p.usage.completion_tokens, p.usage.wall_seconds,
               p.usage.cost_currency_units);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Staged natural-language graph problem solver"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate problem instances");
  std::string gen_task = "suite";
  int gen_n = 10;
  double gen_density = 0.3;
  int gen_weight_min = 1;
  int gen_weight_max = 100;
  int gen_count = 10;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "-";
  gen->add_option("--task", gen_task,
                  "Task family name, or 'suite' for the standard six")
      ->capture_default_str();
  gen->add_option("--n", gen_n, "Node count")->capture_default_str();
  gen->add_option("--density", gen_density, "Edge density in [0, 1]")
      ->capture_default_str();
  gen->add_option("--weight-min", gen_weight_min, "Minimum edge weight")
      ->capture_default_str();
  gen->add_option("--weight-max", gen_weight_max, "Maximum edge weight")
      ->capture_default_str();
  gen->add_option("--count", gen_count, "Instances per family")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output JSONL path, '-' for stdout")
      ->capture_default_str();

  // run
  auto* run = app.add_subcommand("run", "Solve a dataset, print raw results");
  RunArgs run_args;
  run->add_option("--dataset", run_args.dataset, "Input JSONL dataset")
      ->required();
  run->add_option("--mode", run_args.mode, "Solver mode")
      ->check(CLI::IsMember({"pipeline", "direct"}))
      ->capture_default_str();
  add_backend_flags(run, &run_args.backend);
  run->add_option("--cache", run_args.cache_dir, "Artifact cache directory");
  run->add_option("--workers", run_args.workers, "Concurrent solvers")
      ->capture_default_str();
  run->add_option("--out", run_args.out, "Results JSONL path, '-' for stdout");

  // eval
  auto* eval = app.add_subcommand("eval", "Solve a dataset and score it");
  EvalArgs eval_args;
  eval->add_option("--dataset", eval_args.run.dataset, "Input JSONL dataset")
      ->required();
  eval->add_option("--mode", eval_args.run.mode, "Solver mode")
      ->check(CLI::IsMember({"pipeline", "direct"}))
      ->capture_default_str();
  add_backend_flags(eval, &eval_args.run.backend);
  eval->add_option("--cache", eval_args.run.cache_dir,
                   "Artifact cache directory");
  eval->add_option("--workers", eval_args.run.workers, "Concurrent solvers")
      ->capture_default_str();
  eval->add_option("--format", eval_args.format, "Report format")
      ->check(CLI::IsMember({"plain", "csv"}))
      ->capture_default_str();
  eval->add_option("--report", eval_args.report_out,
                   "Also write the formatted report here");
  eval->add_option("--json", eval_args.json_out,
                   "Also write the report as JSON here");
  eval->add_flag("--no-timing", eval_args.no_timing,
                 "Omit wall-clock and cost columns");

  // report
  auto* rep = app.add_subcommand("report", "Render a saved report JSON");
  std::string rep_json;
  std::string rep_format = "plain";
  std::string rep_out;
  bool rep_no_timing = false;
  rep->add_option("--json", rep_json, "Report JSON from eval --json")
      ->required();
  rep->add_option("--format", rep_format, "Report format")
      ->check(CLI::IsMember({"plain", "csv"}))
      ->capture_default_str();
  rep->add_option("--out", rep_out, "Output path, '-' for stdout");
  rep->add_flag("--no-timing", rep_no_timing,
                "Omit wall-clock and cost columns");

  // inspect-cache
  auto* inspect = app.add_subcommand("inspect-cache",
                                     "List or dump cache bundles");
  std::string inspect_cache_dir;
  std::string inspect_key;
  inspect->add_option("--cache", inspect_cache_dir, "Artifact cache directory")
      ->required();
  inspect->add_option("--key", inspect_key,
                      "Bundle digest; omit to list all keys");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return run_gen(gen_task, gen_n, gen_density, gen_weight_min,
                     gen_weight_max, gen_count, gen_seed, gen_out);
    }
    if (run->parsed()) return run_run(run_args);
    if (eval->parsed()) return run_eval(eval_args);
    if (rep->parsed()) {
      return run_report(rep_json, rep_format, rep_out, rep_no_timing);
    }
    if (inspect->parsed()) return run_inspect(inspect_cache_dir, inspect_key);
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
