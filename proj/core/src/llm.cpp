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

#include "graphrtc/llm.hpp"

#include <thread>

#include <fmt/core.h>

#include "graphrtc/strutil.hpp"

namespace grtc {

std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::formatting:
      return "formatting";
    case Stage::pure_problem:
      return "pure_problem";
    case Stage::extracting:
      return "extracting";
    case Stage::reasoning:
      return "reasoning";
    case Stage::coding:
      return "coding";
    case Stage::repair:
      return "repair";
    case Stage::direct:
      return "direct";
  }
  return "unknown";
}

Usage account(std::span<const Usage> usages) {
  Usage total;
  for (const Usage& u : usages) {
    total.prompt_tokens += u.prompt_tokens;
    total.completion_tokens += u.completion_tokens;
    total.wall_seconds += u.wall_seconds;
    total.cost_currency_units += u.cost_currency_units;
  }
  return total;
}

// ---------------------------------------------------------------------------
// ScriptedBackend

ScriptedBackend::ScriptedBackend(std::filesystem::path fixture_dir,
                                 std::chrono::duration<double> latency)
    : dir_(std::move(fixture_dir)), latency_(latency) {}

Completion ScriptedBackend::complete(const ChatRequest& request) {
  if (request.prompt.empty()) {
    throw BackendError(BackendError::Kind::malformed, "empty prompt");
  }
  const auto start = std::chrono::steady_clock::now();

  int call_number;
  {
    std::lock_guard<std::mutex> lock(mu_);
    call_number = ++seen_[{request.stage, request.task_key}];
  }

  // Highest variant at or below the call number answers it.
  std::filesystem::path reply_path;
  for (int variant = call_number; variant >= 1; --variant) {
    std::filesystem::path candidate =
        variant == 1
            ? dir_ / fmt::format("{}.{}.txt", request.task_key,
                                 stage_name(request.stage))
            : dir_ / fmt::format("{}.{}.{}.txt", request.task_key,
                                 stage_name(request.stage), variant);
    if (std::filesystem::exists(candidate)) {
      reply_path = candidate;
      break;
    }
  }
  if (reply_path.empty()) {
    throw BackendError(
        BackendError::Kind::fixture_miss,
        fmt::format("no fixture for stage '{}' and key '{}' under {}",
                    stage_name(request.stage), request.task_key,
                    dir_.string()));
  }

  if (latency_.count() > 0) std::this_thread::sleep_for(latency_);

  Completion completion;
  completion.text = read_text_file(reply_path);
  completion.usage.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  counters_[static_cast<int>(request.stage)].fetch_add(
      1, std::memory_order_relaxed);
  return completion;
}

long long ScriptedBackend::calls(Stage s) const {
  return counters_[static_cast<int>(s)].load(std::memory_order_relaxed);
}

long long ScriptedBackend::total_calls() const {
  long long total = 0;
  for (const auto& counter : counters_) {
    total += counter.load(std::memory_order_relaxed);
  }
  return total;
}

long long ScriptedBackend::build_stage_calls() const {
  return calls(Stage::extracting) + calls(Stage::reasoning) +
         calls(Stage::coding) + calls(Stage::repair);
}

// ---------------------------------------------------------------------------
// RetryingBackend

RetryingBackend::RetryingBackend(std::shared_ptr<ChatBackend> inner,
                                 int max_retries,
                                 std::chrono::duration<double> base_delay)
    : inner_(std::move(inner)), max_retries_(max_retries),
      base_delay_(base_delay) {}

Completion RetryingBackend::complete(const ChatRequest& request) {
  for (int attempt = 0;; ++attempt) {
    try {
      return inner_->complete(request);
    } catch (const BackendError& err) {
      if (!err.retryable() || attempt >= max_retries_) throw;
      std::this_thread::sleep_for(base_delay_ * (1 << attempt));
    }
  }
}

}  // namespace grtc
