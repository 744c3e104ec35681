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

#include "graphrtc/http_backend.hpp"

#include <chrono>
#include <semaphore>

#include <fmt/core.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

namespace grtc {

namespace {

using nlohmann::json;

// Error text deliberately excludes request headers so the credential can
// never leak through logs or test output.
[[noreturn]] void fail(BackendError::Kind kind, const std::string& message) {
  throw BackendError(kind, message);
}

}  // namespace

struct HttpChatBackend::Impl {
  Options options;
  httplib::Client client;
  std::counting_semaphore<256> slots;

  explicit Impl(Options opts)
      : options(std::move(opts)), client(options.endpoint),
        slots(std::max(1, options.max_concurrent)) {
    const auto seconds =
        std::chrono::duration_cast<std::chrono::seconds>(options.timeout);
    client.set_connection_timeout(seconds.count(), 0);
    client.set_read_timeout(seconds.count(), 0);
    client.set_write_timeout(seconds.count(), 0);
    if (!options.api_key.empty()) {
      client.set_bearer_token_auth(options.api_key);
    }
  }
};

HttpChatBackend::HttpChatBackend(Options options)
    : impl_(std::make_unique<Impl>(std::move(options))) {}

HttpChatBackend::~HttpChatBackend() = default;

Completion HttpChatBackend::complete(const ChatRequest& request) {
  if (request.prompt.empty()) {
    fail(BackendError::Kind::malformed, "empty prompt");
  }

  const json body = {
      {"model", request.model_id},
      {"messages", json::array({json{{"role", "user"},
                                     {"content", request.prompt}}})},
      {"max_tokens", request.max_tokens},
      {"temperature", request.temperature},
  };

  impl_->slots.acquire();
  const auto start = std::chrono::steady_clock::now();
  auto result =
      impl_->client.Post(impl_->options.path, body.dump(), "application/json");
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  impl_->slots.release();

  if (!result) {
    fail(BackendError::Kind::transport,
         fmt::format("request failed: {}", httplib::to_string(result.error())));
  }
  if (result->status == 401 || result->status == 403) {
    fail(BackendError::Kind::auth,
         fmt::format("credential rejected (HTTP {})", result->status));
  }
  if (result->status == 429 || result->status >= 500) {
    fail(BackendError::Kind::transport,
         fmt::format("HTTP {} from completion endpoint", result->status));
  }
  if (result->status != 200) {
    fail(BackendError::Kind::malformed,
         fmt::format("HTTP {} from completion endpoint", result->status));
  }

  json payload = json::parse(result->body, nullptr, false);
  if (payload.is_discarded()) {
    fail(BackendError::Kind::malformed, "response body is not JSON");
  }

  Completion completion;
  try {
    const json& choice = payload.at("choices").at(0);
    completion.text = choice.at("message").at("content").get<std::string>();
    completion.truncated =
        choice.value("finish_reason", std::string("stop")) == "length";
    if (payload.contains("usage")) {
      const json& usage = payload["usage"];
      completion.usage.prompt_tokens = usage.value("prompt_tokens", 0ll);
      completion.usage.completion_tokens =
          usage.value("completion_tokens", 0ll);
    }
  } catch (const json::exception& e) {
    fail(BackendError::Kind::malformed,
         fmt::format("unexpected response shape: {}", e.what()));
  }

  completion.usage.wall_seconds = wall;
  auto price = impl_->options.prices.find(request.model_id);
  if (price != impl_->options.prices.end()) {
    completion.usage.cost_currency_units = price->second.cost(
        completion.usage.prompt_tokens, completion.usage.completion_tokens);
  }
  return completion;
}

}  // namespace grtc
