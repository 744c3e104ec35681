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

#ifndef GRAPHRTC_LLM_HPP_
#define GRAPHRTC_LLM_HPP_

#include <array>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "graphrtc/error.hpp"

namespace grtc {

// Pipeline stage a completion request belongs to. `repair` marks coding
// prompts re-issued with execution-failure context; `direct` is the
// single-prompt language-only baseline used for comparison runs.
enum class Stage {
  formatting,
  pure_problem,
  extracting,
  reasoning,
  coding,
  repair,
  direct,
};

inline constexpr int kStageCount = 7;

std::string_view stage_name(Stage s);

struct ChatRequest {
  Stage stage = Stage::formatting;
  std::string prompt;
  std::string model_id;
  int max_tokens = 4096;
  double temperature = 0.0;
  // Identifies the task the request serves. The scripted backend keys its
  // fixture lookup on (stage, task_key); live backends ignore it.
  std::string task_key;
};

struct Usage {
  long long prompt_tokens = 0;
  long long completion_tokens = 0;
  double wall_seconds = 0.0;
  double cost_currency_units = 0.0;

  friend bool operator==(const Usage&, const Usage&) = default;
};

// Field-wise sum; the identity of `account({})` is the all-zero Usage.
Usage account(std::span<const Usage> usages);

struct Completion {
  std::string text;
  Usage usage;
  bool truncated = false;  // stopped at max_tokens
};

// Per-token prices in dollars.
struct PriceTable {
  double input_per_token = 0.0;
  double output_per_token = 0.0;

  double cost(long long prompt_tokens, long long completion_tokens) const {
    return static_cast<double>(prompt_tokens) * input_per_token +
           static_cast<double>(completion_tokens) * output_per_token;
  }
};

class BackendError : public Error {
 public:
  enum class Kind {
    transport,     // connection failure, 5xx, timeout
    auth,          // rejected credential
    fixture_miss,  // scripted backend has no reply for this request
    malformed,     // unparseable response body
  };

  BackendError(Kind kind, const std::string& message)
      : Error(message), kind_(kind) {}

  Kind kind() const { return kind_; }
  // Only transport failures are transient; the rest repeat identically.
  bool retryable() const { return kind_ == Kind::transport; }

 private:
  Kind kind_;
};

// Completion provider. Implementations must be safe to call from multiple
// threads at once.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  virtual Completion complete(const ChatRequest& request) = 0;
  virtual std::string_view name() const = 0;
};

// Replays canned completions from a fixture directory. Replies live in
// files named <task_key>.<stage>.txt; when a (stage, task_key) request
// repeats, numbered variants <task_key>.<stage>.2.txt, .3.txt, ... serve
// the later calls and the highest variant answers every call past it.
class ScriptedBackend : public ChatBackend {
 public:
  // `latency` simulates upstream time per call: complete() sleeps for it
  // and reports it in usage.wall_seconds. Cost is always zero.
  explicit ScriptedBackend(std::filesystem::path fixture_dir,
                           std::chrono::duration<double> latency =
                               std::chrono::seconds(0));

  Completion complete(const ChatRequest& request) override;
  std::string_view name() const override { return "scripted"; }

  // Completed calls for the stage since construction.
  long long calls(Stage s) const;
  long long total_calls() const;
  // Calls across the three artifact-building stages plus repair, the ones
  // a warm cache must avoid entirely.
  long long build_stage_calls() const;

 private:
  std::filesystem::path dir_;
  std::chrono::duration<double> latency_;
  mutable std::mutex mu_;
  std::map<std::pair<Stage, std::string>, int> seen_;
  std::array<std::atomic<long long>, kStageCount> counters_{};
};

// Wraps a backend with bounded retry on transport errors. Waits
// base_delay * 2^attempt between tries; other error kinds pass through
// immediately because they are deterministic.
class RetryingBackend : public ChatBackend {
 public:
  RetryingBackend(std::shared_ptr<ChatBackend> inner, int max_retries = 3,
                  std::chrono::duration<double> base_delay =
                      std::chrono::seconds(1));

  Completion complete(const ChatRequest& request) override;
  std::string_view name() const override { return inner_->name(); }

 private:
  std::shared_ptr<ChatBackend> inner_;
  int max_retries_;
  std::chrono::duration<double> base_delay_;
};

}  // namespace grtc

#endif  // GRAPHRTC_LLM_HPP_
