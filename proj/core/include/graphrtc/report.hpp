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

#ifndef GRAPHRTC_REPORT_HPP_
#define GRAPHRTC_REPORT_HPP_

#include <filesystem>
#include <string>

#include "graphrtc/evaluate.hpp"

namespace grtc {

enum class ReportFormat { plain_table, csv };

struct ReportOptions {
  ReportFormat format = ReportFormat::plain_table;
  // Timing and cost columns are wall-clock dependent; golden-file tests
  // switch them off to get byte-stable output.
  bool include_timing = true;
};

// Columns: task, count, accuracy%, failures by outcome, then (optional)
// time and cost per problem. Accuracy prints with one decimal. A summary
// block carries micro and macro averages.
std::string format_report(const EvalReport& report,
                          const ReportOptions& options = {});

void write_report(const EvalReport& report, const std::filesystem::path& path,
                  const ReportOptions& options = {});

}  // namespace grtc

#endif  // GRAPHRTC_REPORT_HPP_
