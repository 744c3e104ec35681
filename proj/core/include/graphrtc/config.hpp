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

#ifndef GRAPHRTC_CONFIG_HPP_
#define GRAPHRTC_CONFIG_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "graphrtc/http_backend.hpp"
#include "graphrtc/pipeline.hpp"

namespace grtc {

// Plain-text key=value configuration. '#' starts a comment, blank lines
// are skipped, keys are dotted lowercase. Unknown keys are kept so callers
// can look up their own settings.
class Config {
 public:
  Config() = default;

  static Config parse(const std::string& text);
  static Config load(const std::filesystem::path& path);

  bool has(const std::string& key) const;
  std::optional<std::string> get(const std::string& key) const;
  std::string get_or(const std::string& key, std::string fallback) const;
  double number_or(const std::string& key, double fallback) const;
  void set(const std::string& key, std::string value);

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

// Environment variable holding the live-mode API credential. The value is
// read at backend construction and never logged.
inline constexpr const char* kApiKeyEnvVar = "GRAPHRTC_API_KEY";

// Reads kApiKeyEnvVar; empty optional when unset or blank.
std::optional<std::string> api_key_from_env();

// Recognized keys (all optional):
//   model.formatting / model.extracting / model.reasoning / model.coding
//   model.direct
//   max_tokens, temperature, repair.code, repair.reason
//   interpreter              e.g. "python3 {program}"
//   limits.extractor_seconds, limits.solver_seconds,
//   limits.output_bytes, limits.memory_bytes
//   endpoint, endpoint.path, timeout_seconds, max_concurrent
//   scripted.fixture_dir, scripted.latency_seconds
//   price.<model>.input, price.<model>.output   (dollars per token)
PipelineConfig pipeline_config_from(const Config& config);
HttpChatBackend::Options http_options_from(const Config& config);
std::map<std::string, PriceTable> price_tables_from(const Config& config);

}  // namespace grtc

#endif  // GRAPHRTC_CONFIG_HPP_
