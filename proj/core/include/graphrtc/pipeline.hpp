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

#ifndef GRAPHRTC_PIPELINE_HPP_
#define GRAPHRTC_PIPELINE_HPP_

#include <condition_variable>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "graphrtc/formulation.hpp"
#include "graphrtc/instance.hpp"
#include "graphrtc/llm.hpp"
#include "graphrtc/sandbox.hpp"

namespace grtc {

// Algorithm description captured after the "Pseudocode" sentinel of a
// reasoning completion.
struct Pseudocode {
  std::string text;

  friend bool operator==(const Pseudocode&, const Pseudocode&) = default;
};

enum class ProgramKind { extractor, solver };

struct Program {
  std::string source;
  ProgramKind kind = ProgramKind::solver;

  friend bool operator==(const Program&, const Program&) = default;
};

struct StageProvenance {
  Stage stage = Stage::formatting;
  std::string model_id;
  Usage usage;

  friend bool operator==(const StageProvenance&,
                         const StageProvenance&) = default;
};

// Everything the build stages produce for one problem type. Cached and
// reused across instances sharing a key.
struct PipelineArtifacts {
  ProblemFormulation formulation;
  Program extractor{"", ProgramKind::extractor};
  Pseudocode pseudocode;
  Program solver{"", ProgramKind::solver};
  std::vector<StageProvenance> provenance;
  std::string created_at;  // UTC, RFC 3339

  friend bool operator==(const PipelineArtifacts&,
                         const PipelineArtifacts&) = default;
};

// A completion arrived without the structure its stage requires (missing
// sentinel line or fenced code block).
class MalformedCompletionError : public Error {
 public:
  MalformedCompletionError(Stage stage, const std::string& message);
  Stage stage() const { return stage_; }

 private:
  Stage stage_;
};

// ---------------------------------------------------------------------------
// Completion parsing

// Returns the body of the last ```-fenced block. The opening fence may
// carry a language tag. Throws MalformedCompletionError when none closes.
std::string extract_fenced_code(const std::string& completion, Stage stage);

// Returns the text after the last line that equals `sentinel` exactly
// (surrounding whitespace ignored, case sensitive), trimmed. Throws
// MalformedCompletionError when the sentinel never appears.
std::string capture_after_sentinel(const std::string& completion,
                                   std::string_view sentinel, Stage stage);

struct InputOutputSections {
  std::string input_description;
  std::string output_description;
};

// Splits a formatting completion at its "Input" and "Output" header lines.
InputOutputSections parse_input_output_sections(const std::string& completion);

// ---------------------------------------------------------------------------
// Artifact cache

// Directory-backed store of PipelineArtifacts, one bundle per key digest
// with human-readable files (formulation.txt, extractor.py, pseudocode.txt,
// solver.py, provenance.json). Concurrent readers are fine; writers are
// serialized, and a key being built by one thread blocks other claimants
// until the build stores or abandons.
class ArtifactCache {
 public:
  explicit ArtifactCache(std::filesystem::path root);

  std::optional<PipelineArtifacts> lookup(const CacheKey& key) const;

  // Returns the cached artifacts if present, waiting out any in-flight
  // build of `key` first. Returns nullopt when the caller now owns the
  // build and must finish with store() or abandon().
  std::optional<PipelineArtifacts> lookup_or_claim(const CacheKey& key);

  void store(const CacheKey& key, const PipelineArtifacts& artifacts);
  void abandon(const CacheKey& key);

  std::vector<std::string> keys() const;
  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path bundle_dir(const CacheKey& key) const;

  std::filesystem::path root_;
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::set<std::string> in_flight_;
};

// ---------------------------------------------------------------------------
// Orchestration

struct PipelineConfig {
  // Stage models. Formatting and extracting default to the coding model.
  std::string formatting_model;
  std::string extracting_model;
  std::string reasoning_model;
  std::string coding_model = "default";
  int max_tokens = 4096;
  double temperature = 0.0;

  // Repair budgets: after the first solver fails, up to code_repairs
  // re-prompts with error context; if all fail, one reasoning retry
  // regenerates the pseudocode and the coding attempts start over.
  int code_repairs = 2;
  int reason_repairs = 1;

  sandbox::InterpreterCommand interpreter{{"python3", "{program}"}};
  sandbox::ExecutionLimits extractor_limits{sandbox::kExtractorWallTimeout};
  sandbox::ExecutionLimits solver_limits{sandbox::kSolverWallTimeout};
};

// How one instance's solve attempt ended.
enum class SolveStatus {
  ok,
  backend_failure,        // completion provider gave up
  malformed_completion,   // stage output missing its structure
  empty_extraction,       // extractor produced no standard input
  execution_failure,      // solver never produced a usable answer
};

std::string_view solve_status_name(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::ok;
  std::string answer_text;  // solver stdout, trailing whitespace stripped
  std::optional<PipelineArtifacts> artifacts;
  Usage usage;  // stage usages plus sandbox wall time
  std::string failure_detail;
  std::optional<sandbox::ExecutionResult> last_execution;

  bool ok() const { return status == SolveStatus::ok; }
};

// The Formatting -> Extracting -> Reasoning -> Coding orchestrator with
// artifact caching and bounded repair.
class Pipeline {
 public:
  Pipeline(std::shared_ptr<ChatBackend> backend, PipelineConfig config);

  // Two backend calls: one for the input/output descriptions, one for the
  // data-free problem statement.
  ProblemFormulation format_problem(const std::string& problem_text,
                                    const std::string& task_key,
                                    std::vector<StageProvenance>* provenance =
                                        nullptr);
  Program build_extractor(const ProblemFormulation& f,
                          const std::string& task_key,
                          std::vector<StageProvenance>* provenance = nullptr);
  Pseudocode reason_pseudocode(const ProblemFormulation& f,
                               const std::string& task_key,
                               std::vector<StageProvenance>* provenance =
                                   nullptr);
  Program code_solution(const ProblemFormulation& f, const Pseudocode& p,
                        const std::string& task_key,
                        std::vector<StageProvenance>* provenance = nullptr);
  // Coding prompt re-issued with the failure's outcome and stderr attached.
  // Requires err.outcome != ok.
  Program repair_solution(const ProblemFormulation& f, const Pseudocode& p,
                          const Program& failed,
                          const sandbox::ExecutionResult& err,
                          const std::string& task_key,
                          std::vector<StageProvenance>* provenance = nullptr);

  // Full solve: cache lookup by task_id, then by formulation hash after
  // formatting; on miss every stage runs and the artifacts are stored.
  // The extractor then the solver run in the sandbox, with repair on
  // solver failure. Never throws for per-instance failures; the outcome
  // carries the classification instead.
  SolveOutcome solve_instance(const ProblemInstance& inst,
                              ArtifactCache* cache,
                              sandbox::SandboxPool* pool = nullptr);

  const PipelineConfig& config() const { return config_; }

 private:
  Completion call(Stage stage, const std::string& prompt,
                  const std::string& task_key,
                  std::vector<StageProvenance>* provenance,
                  const std::string& model_id);
  PipelineArtifacts build_artifacts(const std::string& problem_text,
                                    const std::string& task_key);
  sandbox::ExecutionResult run_extractor(const Program& extractor,
                                         const std::string& problem_text,
                                         std::string* standard_input,
                                         sandbox::SandboxPool* pool);
  sandbox::ExecutionResult run_solver(const Program& solver,
                                      const std::string& standard_input,
                                      sandbox::SandboxPool* pool);

  std::shared_ptr<ChatBackend> backend_;
  PipelineConfig config_;
};

}  // namespace grtc

#endif  // GRAPHRTC_PIPELINE_HPP_
