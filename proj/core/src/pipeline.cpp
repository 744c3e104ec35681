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

#include "graphrtc/pipeline.hpp"

#include <cctype>
#include <cstdio>
#include <ctime>
#include <random>
#include <system_error>

#include <fmt/core.h>

#include "graphrtc/prompts.hpp"
#include "graphrtc/strutil.hpp"

namespace grtc {
namespace {

namespace fs = std::filesystem;

std::string strip_trailing_whitespace(std::string s) {
  while (!s.empty() &&
         std::isspace(static_cast<unsigned char>(s.back())) != 0) {
    s.pop_back();
  }
  return s;
}

std::string join_lines(const std::vector<std::string_view>& lines,
                       std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out.push_back('\n');
    out.append(lines[i]);
  }
  return out;
}

std::string now_rfc3339() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

fs::path make_scratch_dir() {
  const fs::path base = fs::temp_directory_path();
  std::random_device rd;
  for (int attempt = 0; attempt < 16; ++attempt) {
    fs::path p = base / fmt::format("graphrtc-io-{:08x}{:08x}", rd(), rd());
    std::error_code ec;
    if (fs::create_directory(p, ec)) return p;
  }
  throw Error("cannot create extractor scratch directory");
}

}  // namespace

MalformedCompletionError::MalformedCompletionError(Stage stage,
                                                   const std::string& message)
    : Error(fmt::format("{} stage: {}", stage_name(stage), message)),
      stage_(stage) {}

std::string extract_fenced_code(const std::string& completion, Stage stage) {
  const auto lines = split_lines(completion);
  std::string last_block;
  bool found = false;
  bool open = false;
  std::size_t block_start = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!trim(lines[i]).starts_with("```")) continue;
    if (!open) {
      open = true;
      block_start = i + 1;
    } else {
      last_block = join_lines(lines, block_start, i);
      found = true;
      open = false;
    }
  }
  if (!found) {
    throw MalformedCompletionError(stage,
                                   "completion has no closed ``` code block");
  }
  return last_block;
}

std::string capture_after_sentinel(const std::string& completion,
                                   std::string_view sentinel, Stage stage) {
  const auto lines = split_lines(completion);
  std::size_t sentinel_line = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]) == sentinel) sentinel_line = i;
  }
  if (sentinel_line == lines.size()) {
    throw MalformedCompletionError(
        stage, fmt::format("completion has no '{}' line", sentinel));
  }
  return std::string(
      trim(join_lines(lines, sentinel_line + 1, lines.size())));
}

InputOutputSections parse_input_output_sections(
    const std::string& completion) {
  const auto lines = split_lines(completion);
  std::size_t output_line = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]) == prompts::kOutputHeader) output_line = i;
  }
  if (output_line == lines.size()) {
    throw MalformedCompletionError(Stage::formatting,
                                   "completion has no 'Output' line");
  }
  std::size_t input_line = lines.size();
  for (std::size_t i = 0; i < output_line; ++i) {
    if (trim(lines[i]) == prompts::kInputHeader) input_line = i;
  }
  if (input_line == lines.size()) {
    throw MalformedCompletionError(
        Stage::formatting, "completion has no 'Input' line before 'Output'");
  }
  InputOutputSections sections;
  sections.input_description =
      std::string(trim(join_lines(lines, input_line + 1, output_line)));
  sections.output_description =
      std::string(trim(join_lines(lines, output_line + 1, lines.size())));
  if (sections.input_description.empty() ||
      sections.output_description.empty()) {
    throw MalformedCompletionError(Stage::formatting,
                                   "empty input or output description");
  }
  return sections;
}

// ---------------------------------------------------------------------------

Pipeline::Pipeline(std::shared_ptr<ChatBackend> backend, PipelineConfig config)
    : backend_(std::move(backend)), config_(std::move(config)) {
  if (config_.coding_model.empty()) config_.coding_model = "default";
  if (config_.formatting_model.empty()) {
    config_.formatting_model = config_.coding_model;
  }
  if (config_.extracting_model.empty()) {
    config_.extracting_model = config_.coding_model;
  }
  if (config_.reasoning_model.empty()) {
    config_.reasoning_model = config_.coding_model;
  }
}

Completion Pipeline::call(Stage stage, const std::string& prompt,
                          const std::string& task_key,
                          std::vector<StageProvenance>* provenance,
                          const std::string& model_id) {
  ChatRequest request;
  request.stage = stage;
  request.prompt = prompt;
  request.model_id = model_id;
  request.max_tokens = config_.max_tokens;
  request.temperature = config_.temperature;
  request.task_key = task_key;
  Completion completion = backend_->complete(request);
  if (provenance != nullptr) {
    provenance->push_back({stage, model_id, completion.usage});
  }
  return completion;
}

ProblemFormulation Pipeline::format_problem(
    const std::string& problem_text, const std::string& task_key,
    std::vector<StageProvenance>* provenance) {
  const Completion formatted =
      call(Stage::formatting, prompts::render_formatting(problem_text),
           task_key, provenance, config_.formatting_model);
  const InputOutputSections sections =
      parse_input_output_sections(formatted.text);

  const Completion pure =
      call(Stage::pure_problem,
           prompts::render_pure_problem(problem_text,
                                        sections.input_description,
                                        sections.output_description),
           task_key, provenance, config_.formatting_model);
  ProblemFormulation f;
  f.pure_problem = capture_after_sentinel(
      pure.text, prompts::kPureProblemSentinel, Stage::pure_problem);
  f.input_description = sections.input_description;
  f.output_description = sections.output_description;
  f.validate();
  return f;
}

Program Pipeline::build_extractor(const ProblemFormulation& f,
                                  const std::string& task_key,
                                  std::vector<StageProvenance>* provenance) {
  const Completion c = call(Stage::extracting, prompts::render_extracting(f),
                            task_key, provenance, config_.extracting_model);
  return Program{extract_fenced_code(c.text, Stage::extracting),
                 ProgramKind::extractor};
}

Pseudocode Pipeline::reason_pseudocode(
    const ProblemFormulation& f, const std::string& task_key,
    std::vector<StageProvenance>* provenance) {
  const Completion c = call(Stage::reasoning, prompts::render_reasoning(f),
                            task_key, provenance, config_.reasoning_model);
  return Pseudocode{capture_after_sentinel(
      c.text, prompts::kPseudocodeSentinel, Stage::reasoning)};
}

Program Pipeline::code_solution(const ProblemFormulation& f,
                                const Pseudocode& p,
                                const std::string& task_key,
                                std::vector<StageProvenance>* provenance) {
  const Completion c = call(Stage::coding, prompts::render_coding(f, p),
                            task_key, provenance, config_.coding_model);
  return Program{extract_fenced_code(c.text, Stage::coding),
                 ProgramKind::solver};
}

Program Pipeline::repair_solution(const ProblemFormulation& f,
                                  const Pseudocode& p, const Program& failed,
                                  const sandbox::ExecutionResult& err,
                                  const std::string& task_key,
                                  std::vector<StageProvenance>* provenance) {
  (void)failed;
  if (err.ok()) {
    throw Error("repair_solution requires a failed execution result");
  }
  const Completion c = call(Stage::repair, prompts::render_repair(f, p, err),
                            task_key, provenance, config_.coding_model);
  return Program{extract_fenced_code(c.text, Stage::repair),
                 ProgramKind::solver};
}

PipelineArtifacts Pipeline::build_artifacts(const std::string& problem_text,
                                            const std::string& task_key) {
  PipelineArtifacts a;
  std::vector<StageProvenance> prov;
  a.formulation = format_problem(problem_text, task_key, &prov);
  a.extractor = build_extractor(a.formulation, task_key, &prov);
  a.pseudocode = reason_pseudocode(a.formulation, task_key, &prov);
  a.solver = code_solution(a.formulation, a.pseudocode, task_key, &prov);
  a.provenance = std::move(prov);
  a.created_at = now_rfc3339();
  return a;
}

sandbox::ExecutionResult Pipeline::run_extractor(
    const Program& extractor, const std::string& problem_text,
    std::string* standard_input, sandbox::SandboxPool* pool) {
  const fs::path dir = make_scratch_dir();
  const fs::path problem_path = dir / "problem.txt";
  const fs::path input_path = dir / "standard_input.txt";
  write_text_file(problem_path, problem_text);
  const std::vector<std::string> args{problem_path.string(),
                                      input_path.string()};
  sandbox::ExecutionResult result =
      pool != nullptr
          ? pool->run(config_.interpreter, extractor.source, "",
                      config_.extractor_limits, args)
          : sandbox::execute(config_.interpreter, extractor.source, "",
                             config_.extractor_limits, args);
  standard_input->clear();
  std::error_code ec;
  if (fs::is_regular_file(input_path, ec)) {
    try {
      *standard_input = read_text_file(input_path);
    } catch (const Error&) {
      // Unreadable output counts as no output.
    }
  }
  fs::remove_all(dir, ec);
  return result;
}

sandbox::ExecutionResult Pipeline::run_solver(const Program& solver,
                                              const std::string& standard_input,
                                              sandbox::SandboxPool* pool) {
  return pool != nullptr
             ? pool->run(config_.interpreter, solver.source, standard_input,
                         config_.solver_limits)
             : sandbox::execute(config_.interpreter, solver.source,
                                standard_input, config_.solver_limits);
}

SolveOutcome Pipeline::solve_instance(const ProblemInstance& inst,
                                      ArtifactCache* cache,
                                      sandbox::SandboxPool* pool) {
  SolveOutcome out;
  std::vector<StageProvenance> prov;
  std::vector<CacheKey> claimed;
  double sandbox_wall = 0.0;

  auto release_claims = [&] {
    if (cache != nullptr) {
      for (const auto& key : claimed) cache->abandon(key);
    }
    claimed.clear();
  };
  auto finish = [&](SolveStatus status, const std::string& detail) {
    out.status = status;
    out.failure_detail = detail;
    std::vector<Usage> usages;
    usages.reserve(prov.size());
    for (const auto& p : prov) usages.push_back(p.usage);
    out.usage = account(usages);
    out.usage.wall_seconds += sandbox_wall;
    return out;
  };

  PipelineArtifacts artifacts;
  bool have = false;

  const CacheKey task_key = CacheKey::of_task_id(inst.task_id);
  if (cache != nullptr) {
    if (auto found = cache->lookup_or_claim(task_key)) {
      artifacts = std::move(*found);
      have = true;
    } else {
      claimed.push_back(task_key);
    }
  }

  try {
    if (!have) {
      artifacts.formulation =
          format_problem(inst.problem_text, inst.task_id, &prov);
      if (cache != nullptr) {
        const CacheKey fkey =
            canonical_formulation_hash(artifacts.formulation);
        if (fkey != task_key) {
          if (auto found = cache->lookup_or_claim(fkey)) {
            artifacts = std::move(*found);
            have = true;
          } else {
            claimed.push_back(fkey);
          }
        }
      }
      if (!have) {
        artifacts.extractor =
            build_extractor(artifacts.formulation, inst.task_id, &prov);
        artifacts.pseudocode =
            reason_pseudocode(artifacts.formulation, inst.task_id, &prov);
        artifacts.solver = code_solution(artifacts.formulation,
                                         artifacts.pseudocode, inst.task_id,
                                         &prov);
        artifacts.provenance = prov;
        artifacts.created_at = now_rfc3339();
      }
      if (cache != nullptr) {
        for (const auto& key : claimed) cache->store(key, artifacts);
        claimed.clear();
      }
    }
  } catch (const BackendError& e) {
    release_claims();
    return finish(SolveStatus::backend_failure, e.what());
  } catch (const MalformedCompletionError& e) {
    release_claims();
    return finish(SolveStatus::malformed_completion, e.what());
  } catch (const Error& e) {
    // Covers formulation validation and cache I/O failures.
    release_claims();
    return finish(SolveStatus::malformed_completion, e.what());
  }
  out.artifacts = artifacts;

  std::string standard_input;
  const sandbox::ExecutionResult extraction =
      run_extractor(artifacts.extractor, inst.problem_text, &standard_input,
                    pool);
  sandbox_wall += extraction.wall_seconds;
  if (!extraction.ok() || trim(standard_input).empty()) {
    out.last_execution = extraction;
    const std::string detail =
        extraction.ok()
            ? "extractor wrote no standard input"
            : fmt::format("extractor {}: {}",
                          sandbox::outcome_name(extraction.outcome),
                          strip_trailing_whitespace(extraction.stderr_text));
    return finish(SolveStatus::empty_extraction, detail);
  }

  Program solver = artifacts.solver;
  Pseudocode pseudo = artifacts.pseudocode;
  int repairs_left = config_.code_repairs;
  int reasons_left = config_.reason_repairs;
  sandbox::ExecutionResult exec = run_solver(solver, standard_input, pool);
  sandbox_wall += exec.wall_seconds;
  try {
    while (!exec.ok()) {
      if (repairs_left > 0) {
        --repairs_left;
        solver = repair_solution(artifacts.formulation, pseudo, solver, exec,
                                 inst.task_id, &prov);
      } else if (reasons_left > 0) {
        --reasons_left;
        repairs_left = config_.code_repairs;
        pseudo = reason_pseudocode(artifacts.formulation, inst.task_id, &prov);
        solver = code_solution(artifacts.formulation, pseudo, inst.task_id,
                               &prov);
      } else {
        out.last_execution = exec;
        return finish(SolveStatus::execution_failure,
                      fmt::format("solver {} after {} coding attempts",
                                  sandbox::outcome_name(exec.outcome),
                                  1 + config_.code_repairs +
                                      config_.reason_repairs *
                                          (1 + config_.code_repairs)));
      }
      exec = run_solver(solver, standard_input, pool);
      sandbox_wall += exec.wall_seconds;
    }
  } catch (const BackendError& e) {
    out.last_execution = exec;
    return finish(SolveStatus::backend_failure, e.what());
  } catch (const MalformedCompletionError& e) {
    out.last_execution = exec;
    return finish(SolveStatus::malformed_completion, e.what());
  }

  out.answer_text = strip_trailing_whitespace(exec.stdout_text);
  out.last_execution = exec;
  return finish(SolveStatus::ok, "");
}

std::string_view solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::ok:
      return "ok";
    case SolveStatus::backend_failure:
      return "backend_failure";
    case SolveStatus::malformed_completion:
      return "malformed_completion";
    case SolveStatus::empty_extraction:
      return "empty_extraction";
    case SolveStatus::execution_failure:
      return "execution_failure";
  }
  return "unknown";
}

}  // namespace grtc
