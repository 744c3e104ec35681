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

#ifndef GRAPHRTC_DATASET_HPP_
#define GRAPHRTC_DATASET_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "graphrtc/instance.hpp"

namespace grtc {

// Datasets are JSON Lines: one object per line with fields task_id,
// problem_text, optional gold_answer, and a string-valued meta object.
// Unknown meta keys survive a load/save round trip.

std::vector<ProblemInstance> load_dataset(const std::filesystem::path& path);
std::vector<ProblemInstance> parse_dataset(const std::string& text);

void save_dataset(const std::filesystem::path& path,
                  const std::vector<ProblemInstance>& instances);
std::string serialize_dataset(const std::vector<ProblemInstance>& instances);

}  // namespace grtc

#endif  // GRAPHRTC_DATASET_HPP_
