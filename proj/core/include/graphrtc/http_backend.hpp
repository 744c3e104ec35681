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

#ifndef GRAPHRTC_HTTP_BACKEND_HPP_
#define GRAPHRTC_HTTP_BACKEND_HPP_

#include <chrono>
#include <map>
#include <memory>
#include <string>

#include "graphrtc/llm.hpp"

namespace grtc {

// Talks to an OpenAI-compatible chat completions endpoint. The credential
// comes in through Options::api_key and is only ever placed in the
// Authorization header; it is never logged or echoed in errors.
class HttpChatBackend : public ChatBackend {
 public:
  struct Options {
    std::string endpoint = "https://api.openai.com";
    std::string path = "/v1/chat/completions";
    std::string api_key;
    // Cost lookup by model id; unknown models cost zero.
    std::map<std::string, PriceTable> prices;
    int max_concurrent = 4;
    std::chrono::duration<double> timeout = std::chrono::seconds(120);
  };

  explicit HttpChatBackend(Options options);
  ~HttpChatBackend() override;

  Completion complete(const ChatRequest& request) override;
  std::string_view name() const override { return "http"; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace grtc

#endif  // GRAPHRTC_HTTP_BACKEND_HPP_
