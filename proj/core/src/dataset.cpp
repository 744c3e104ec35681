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

#include "graphrtc/dataset.hpp"

#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "graphrtc/error.hpp"
#include "graphrtc/strutil.hpp"

namespace grtc {
namespace {

using nlohmann::json;

ProblemInstance instance_from_json(const json& doc, std::size_t line_number) {
  if (!doc.is_object()) {
    throw DatasetError(
        fmt::format("line {}: expected a JSON object", line_number));
  }
  ProblemInstance inst;
  if (!doc.contains("task_id") || !doc["task_id"].is_string()) {
    throw DatasetError(
        fmt::format("line {}: missing string field task_id", line_number));
  }
  inst.task_id = doc["task_id"].get<std::string>();
  if (!doc.contains("problem_text") || !doc["problem_text"].is_string()) {
    throw DatasetError(fmt::format("line {}: missing string field problem_text",
                                   line_number));
  }
  inst.problem_text = doc["problem_text"].get<std::string>();
  if (doc.contains("gold_answer") && !doc["gold_answer"].is_null()) {
    if (!doc["gold_answer"].is_string()) {
      throw DatasetError(
          fmt::format("line {}: gold_answer must be a string", line_number));
    }
    inst.gold_answer = doc["gold_answer"].get<std::string>();
  }
  if (doc.contains("meta")) {
    if (!doc["meta"].is_object()) {
      throw DatasetError(
          fmt::format("line {}: meta must be an object", line_number));
    }
    for (const auto& [key, value] : doc["meta"].items()) {
      if (!value.is_string()) {
        throw DatasetError(fmt::format(
            "line {}: meta value for '{}' must be a string", line_number,
            key));
      }
      inst.meta[key] = value.get<std::string>();
    }
  }
  return inst;
}

json instance_to_json(const ProblemInstance& inst) {
  json doc;
  doc["task_id"] = inst.task_id;
  doc["problem_text"] = inst.problem_text;
  if (inst.gold_answer) doc["gold_answer"] = *inst.gold_answer;
  json meta = json::object();
  for (const auto& [key, value] : inst.meta) meta[key] = value;
  doc["meta"] = meta;
  return doc;
}

}  // namespace

std::vector<ProblemInstance> parse_dataset(const std::string& text) {
  std::vector<ProblemInstance> out;
  std::size_t line_number = 0;
  for (const auto line : split_lines(text)) {
    ++line_number;
    if (trim(line).empty()) continue;
    json doc = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
      throw DatasetError(
          fmt::format("line {}: invalid JSON", line_number));
    }
    out.push_back(instance_from_json(doc, line_number));
  }
  return out;
}

std::vector<ProblemInstance> load_dataset(const std::filesystem::path& path) {
  return parse_dataset(read_text_file(path));
}

std::string serialize_dataset(const std::vector<ProblemInstance>& instances) {
  std::string out;
  for (const auto& inst : instances) {
    out += instance_to_json(inst).dump();
    out.push_back('\n');
  }
  return out;
}

void save_dataset(const std::filesystem::path& path,
                  const std::vector<ProblemInstance>& instances) {
  write_text_file(path, serialize_dataset(instances));
}

}  // namespace grtc
