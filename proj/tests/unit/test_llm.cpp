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

#include <doctest.h>

#include <array>
#include <chrono>
#include <memory>

#include "graphrtc/strutil.hpp"
#include "testenv.hpp"

using namespace grtc;

namespace {

ChatRequest request_for(Stage stage, const std::string& key) {
  ChatRequest r;
  r.stage = stage;
  r.task_key = key;
  r.prompt = "prompt body";
  return r;
}

// Fails with a chosen error kind a fixed number of times, then succeeds.
class FlakyBackend : public ChatBackend {
 public:
  FlakyBackend(int failures, BackendError::Kind kind)
      : failures_left_(failures), kind_(kind) {}

  Completion complete(const ChatRequest&) override {
    ++attempts_;
    if (failures_left_ > 0) {
      --failures_left_;
      throw BackendError(kind_, "synthetic failure");
    }
    Completion c;
    c.text = "done";
    return c;
  }
  std::string_view name() const override { return "flaky"; }

  int attempts() const { return attempts_; }

 private:
  int attempts_ = 0;
  int failures_left_;
  BackendError::Kind kind_;
};

}  // namespace

TEST_CASE("stage names cover every stage") {
  CHECK(stage_name(Stage::formatting) == "formatting");
  CHECK(stage_name(Stage::pure_problem) == "pure_problem");
  CHECK(stage_name(Stage::extracting) == "extracting");
  CHECK(stage_name(Stage::reasoning) == "reasoning");
  CHECK(stage_name(Stage::coding) == "coding");
  CHECK(stage_name(Stage::repair) == "repair");
  CHECK(stage_name(Stage::direct) == "direct");
}

TEST_CASE("account sums field-wise with a zero identity") {
  CHECK(account({}) == Usage{});
  const std::array<Usage, 2> parts{Usage{10, 4, 0.5, 0.01},
                                   Usage{3, 2, 1.0, 0.02}};
  const Usage total = account(parts);
  CHECK(total.prompt_tokens == 13);
  CHECK(total.completion_tokens == 6);
  CHECK(total.wall_seconds == doctest::Approx(1.5));
  CHECK(total.cost_currency_units == doctest::Approx(0.03));
}

TEST_CASE("price table multiplies token counts") {
  const PriceTable prices{1e-6, 2e-6};
  CHECK(prices.cost(1000, 500) == doctest::Approx(0.002));
  CHECK(PriceTable{}.cost(1000, 500) == 0.0);
}

TEST_CASE("scripted backend replays fixtures and counts calls") {
  ScriptedBackend backend(testenv::fixtures_dir("direct"));
  const Completion c = backend.complete(request_for(Stage::direct, "tiny_yes"));
  CHECK(trim(c.text) == "Yes");
  CHECK(backend.calls(Stage::direct) == 1);
  CHECK(backend.total_calls() == 1);
  CHECK(backend.build_stage_calls() == 0);

  backend.complete(request_for(Stage::direct, "tiny_int"));
  CHECK(backend.calls(Stage::direct) == 2);
}

TEST_CASE("scripted backend serves numbered variants in call order") {
  testenv::TempDir dir;
  write_text_file(dir.path() / "job.coding.txt", "first\n");
  write_text_file(dir.path() / "job.coding.3.txt", "third\n");
  ScriptedBackend backend(dir.path());

  const auto ask = [&] {
    return trim(backend.complete(request_for(Stage::coding, "job")).text);
  };
  CHECK(ask() == "first");
  // No .2 variant exists, so the highest variant at or below 2 answers.
  CHECK(ask() == "first");
  CHECK(ask() == "third");
  CHECK(ask() == "third");
  CHECK(backend.calls(Stage::coding) == 4);
  CHECK(backend.build_stage_calls() == 4);
}

TEST_CASE("scripted backend counts repeats per stage and key") {
  testenv::TempDir dir;
  write_text_file(dir.path() / "a.coding.txt", "a1\n");
  write_text_file(dir.path() / "a.coding.2.txt", "a2\n");
  write_text_file(dir.path() / "b.coding.txt", "b1\n");
  write_text_file(dir.path() / "a.reasoning.txt", "r1\n");
  ScriptedBackend backend(dir.path());

  CHECK(trim(backend.complete(request_for(Stage::coding, "a")).text) == "a1");
  CHECK(trim(backend.complete(request_for(Stage::coding, "b")).text) == "b1");
  CHECK(trim(backend.complete(request_for(Stage::reasoning, "a")).text) ==
        "r1");
  // Only the second (coding, a) call advances to the .2 variant.
  CHECK(trim(backend.complete(request_for(Stage::coding, "a")).text) == "a2");
}

TEST_CASE("scripted backend reports a fixture miss") {
  ScriptedBackend backend(testenv::fixtures_dir("direct"));
  try {
    backend.complete(request_for(Stage::direct, "no_such_task"));
    FAIL("expected a BackendError");
  } catch (const BackendError& e) {
    CHECK(e.kind() == BackendError::Kind::fixture_miss);
    CHECK(!e.retryable());
  }
  CHECK(backend.total_calls() == 0);
}

TEST_CASE("scripted backend rejects an empty prompt") {
  ScriptedBackend backend(testenv::fixtures_dir("direct"));
  ChatRequest r = request_for(Stage::direct, "tiny_yes");
  r.prompt.clear();
  CHECK_THROWS_AS((void)backend.complete(r), BackendError);
}

TEST_CASE("scripted latency lands in reported usage") {
  ScriptedBackend backend(testenv::fixtures_dir("direct"),
                          std::chrono::milliseconds(50));
  const Completion c = backend.complete(request_for(Stage::direct, "tiny_yes"));
  CHECK(c.usage.wall_seconds >= 0.05);
  CHECK(c.usage.cost_currency_units == 0.0);
}

TEST_CASE("retrying backend retries transport errors only") {
  auto flaky =
      std::make_shared<FlakyBackend>(2, BackendError::Kind::transport);
  RetryingBackend retrying(flaky, 3, std::chrono::milliseconds(1));
  const Completion c = retrying.complete(request_for(Stage::direct, "x"));
  CHECK(c.text == "done");
  CHECK(flaky->attempts() == 3);
}

TEST_CASE("retrying backend gives up after max retries") {
  auto flaky =
      std::make_shared<FlakyBackend>(10, BackendError::Kind::transport);
  RetryingBackend retrying(flaky, 2, std::chrono::milliseconds(1));
  CHECK_THROWS_AS((void)retrying.complete(request_for(Stage::direct, "x")),
                  BackendError);
  CHECK(flaky->attempts() == 3);
}

TEST_CASE("retrying backend passes deterministic failures through") {
  for (const auto kind :
       {BackendError::Kind::auth, BackendError::Kind::fixture_miss,
        BackendError::Kind::malformed}) {
    auto flaky = std::make_shared<FlakyBackend>(1, kind);
    RetryingBackend retrying(flaky, 5, std::chrono::milliseconds(1));
    CHECK_THROWS_AS((void)retrying.complete(request_for(Stage::direct, "x")),
                    BackendError);
    CHECK(flaky->attempts() == 1);
  }
}
