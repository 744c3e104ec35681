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

#ifndef GRAPHRTC_SANDBOX_HPP_
#define GRAPHRTC_SANDBOX_HPP_

#include <chrono>
#include <cstdint>
#include <semaphore>
#include <string>
#include <string_view>
#include <vector>

#include "graphrtc/error.hpp"

// Runs generated programs in a child process with a wall-clock deadline,
// output truncation, and a best-effort memory cap. This contains accidents
// (infinite loops, runaway allocation, floods of output); it is not a
// security boundary against hostile code.
namespace grtc::sandbox {

struct ExecutionLimits {
  std::chrono::duration<double> wall_timeout = std::chrono::seconds(60);
  std::uint64_t max_output_bytes = 8ull << 20;
  // 0 disables the address-space cap. Best effort: when the cap cannot be
  // applied the run proceeds and memory_limited reports false.
  std::uint64_t max_memory_bytes = 0;
};

inline constexpr std::chrono::seconds kExtractorWallTimeout{30};
inline constexpr std::chrono::seconds kSolverWallTimeout{60};

enum class Outcome {
  ok,               // exit status 0
  nonzero_exit,     // nonzero status, including death by signal
  timeout,          // killed at the wall-clock deadline
  output_overflow,  // a stream exceeded max_output_bytes
  spawn_failure,    // interpreter missing or exec failed
};

std::string_view outcome_name(Outcome o);

struct ExecutionResult {
  Outcome outcome = Outcome::spawn_failure;
  int exit_code = -1;     // 128 + signal number for signal deaths
  int term_signal = 0;    // nonzero when the child died on a signal
  std::string stdout_text;
  std::string stderr_text;
  double wall_seconds = 0.0;
  bool memory_limited = false;  // the address-space cap was applied

  bool ok() const { return outcome == Outcome::ok; }
};

// Interpreter invocation template, e.g. "python3 {program}". The program
// path replaces the {program} placeholder; other tokens pass through.
struct InterpreterCommand {
  std::vector<std::string> argv_template;

  static InterpreterCommand parse(const std::string& command_line);
  std::vector<std::string> argv_for(const std::string& program_path) const;
};

// Writes `program_source` into a fresh private directory, feeds
// `stdin_data` on standard input, and enforces the limits. `extra_args`
// follow the program path on the command line. The child runs in its own
// process group, which is killed wholesale at the deadline; the directory
// is removed before returning.
ExecutionResult execute(const InterpreterCommand& interpreter,
                        const std::string& program_source,
                        const std::string& stdin_data,
                        const ExecutionLimits& limits,
                        const std::vector<std::string>& extra_args = {});

// Caps how many sandboxed programs run at once.
class SandboxPool {
 public:
  explicit SandboxPool(int max_concurrent);

  ExecutionResult run(const InterpreterCommand& interpreter,
                      const std::string& program_source,
                      const std::string& stdin_data,
                      const ExecutionLimits& limits,
                      const std::vector<std::string>& extra_args = {});

 private:
  std::counting_semaphore<256> slots_;
};

}  // namespace grtc::sandbox

#endif  // GRAPHRTC_SANDBOX_HPP_
