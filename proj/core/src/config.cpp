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

#include "graphrtc/config.hpp"

#include <cstdlib>

#include <fmt/core.h>

#include "graphrtc/strutil.hpp"

namespace grtc {

Config Config::parse(const std::string& text) {
  Config config;
  std::size_t line_number = 0;
  for (const auto raw : split_lines(text)) {
    ++line_number;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(
          fmt::format("line {}: expected key=value, got '{}'", line_number,
                      line));
    }
    const std::string key{trim(line.substr(0, eq))};
    if (key.empty()) {
      throw ConfigError(fmt::format("line {}: empty key", line_number));
    }
    config.values_[key] = std::string(trim(line.substr(eq + 1)));
  }
  return config;
}

Config Config::load(const std::filesystem::path& path) {
  return parse(read_text_file(path));
}

bool Config::has(const std::string& key) const {
  return values_.contains(key);
}

std::optional<std::string> Config::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string Config::get_or(const std::string& key,
                           std::string fallback) const {
  const auto it = values_.find(key);
  return it != values_.end() ? it->second : std::move(fallback);
}

double Config::number_or(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  char* end = nullptr;
  const double value = std::strtod(it->second.c_str(), &end);
  if (end != it->second.c_str() + it->second.size() || it->second.empty()) {
    throw ConfigError(
        fmt::format("key '{}' has non-numeric value '{}'", key, it->second));
  }
  return value;
}

void Config::set(const std::string& key, std::string value) {
  values_[key] = std::move(value);
}

std::optional<std::string> api_key_from_env() {
  const char* value = std::getenv(kApiKeyEnvVar);
  if (value == nullptr) return std::nullopt;
  const std::string key{trim(value)};
  if (key.empty()) return std::nullopt;
  return key;
}

PipelineConfig pipeline_config_from(const Config& config) {
  PipelineConfig pc;
  pc.coding_model = config.get_or("model.coding", pc.coding_model);
  pc.formatting_model = config.get_or("model.formatting", "");
  pc.extracting_model = config.get_or("model.extracting", "");
  pc.reasoning_model = config.get_or("model.reasoning", "");
  pc.max_tokens =
      static_cast<int>(config.number_or("max_tokens", pc.max_tokens));
  pc.temperature = config.number_or("temperature", pc.temperature);
  pc.code_repairs =
      static_cast<int>(config.number_or("repair.code", pc.code_repairs));
  pc.reason_repairs =
      static_cast<int>(config.number_or("repair.reason", pc.reason_repairs));
  if (const auto interpreter = config.get("interpreter")) {
    pc.interpreter = sandbox::InterpreterCommand::parse(*interpreter);
  }
  pc.extractor_limits.wall_timeout = std::chrono::duration<double>(
      config.number_or("limits.extractor_seconds",
                       pc.extractor_limits.wall_timeout.count()));
  pc.solver_limits.wall_timeout = std::chrono::duration<double>(
      config.number_or("limits.solver_seconds",
                       pc.solver_limits.wall_timeout.count()));
  const double output_bytes = config.number_or(
      "limits.output_bytes",
      static_cast<double>(pc.solver_limits.max_output_bytes));
  pc.extractor_limits.max_output_bytes =
      static_cast<std::uint64_t>(output_bytes);
  pc.solver_limits.max_output_bytes = static_cast<std::uint64_t>(output_bytes);
  const double memory_bytes = config.number_or(
      "limits.memory_bytes",
      static_cast<double>(pc.solver_limits.max_memory_bytes));
  pc.extractor_limits.max_memory_bytes =
      static_cast<std::uint64_t>(memory_bytes);
  pc.solver_limits.max_memory_bytes = static_cast<std::uint64_t>(memory_bytes);
  return pc;
}

HttpChatBackend::Options http_options_from(const Config& config) {
  HttpChatBackend::Options options;
  options.endpoint = config.get_or("endpoint", options.endpoint);
  options.path = config.get_or("endpoint.path", options.path);
  if (const auto key = api_key_from_env()) options.api_key = *key;
  options.max_concurrent = static_cast<int>(
      config.number_or("max_concurrent", options.max_concurrent));
  options.timeout = std::chrono::duration<double>(
      config.number_or("timeout_seconds", options.timeout.count()));
  options.prices = price_tables_from(config);
  return options;
}

std::map<std::string, PriceTable> price_tables_from(const Config& config) {
  std::map<std::string, PriceTable> prices;
  constexpr std::string_view kPrefix = "price.";
  for (const auto& [key, value] : config.values()) {
    if (!key.starts_with(kPrefix)) continue;
    const std::string rest = key.substr(kPrefix.size());
    const auto dot = rest.rfind('.');
    if (dot == std::string::npos) {
      throw ConfigError(fmt::format(
          "price key '{}' must look like price.<model>.input", key));
    }
    const std::string model = rest.substr(0, dot);
    const std::string field = rest.substr(dot + 1);
    const double amount = config.number_or(key, 0.0);
    if (field == "input") {
      prices[model].input_per_token = amount;
    } else if (field == "output") {
      prices[model].output_per_token = amount;
    } else {
      throw ConfigError(fmt::format(
          "price key '{}' must end in .input or .output", key));
    }
  }
  return prices;
}

}  // namespace grtc
