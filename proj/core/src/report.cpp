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

#include "graphrtc/report.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "graphrtc/strutil.hpp"

namespace grtc {
namespace {

std::string percent(double fraction) {
  return fmt::format("{:.1f}", fraction * 100.0);
}

std::string join_failures(const std::map<std::string, int>& failures) {
  std::string out;
  for (const auto& [key, value] : failures) {
    if (!out.empty()) out.push_back(' ');
    out += fmt::format("{}={}", key, value);
  }
  return out;
}

std::string plain_table(const EvalReport& report, bool include_timing) {
  std::size_t width = 5;  // "task" / "total"
  for (const auto& t : report.tasks) width = std::max(width, t.task_id.size());

  std::string out;
  out += fmt::format("{:<{}}  {:>6}  {:>7}  {:>6}  {:>6}  {:>8}", "task",
                     width, "count", "correct", "wrong", "failed", "accuracy");
  if (include_timing) {
    out += fmt::format("  {:>9}  {:>10}", "time/prob", "cost/prob");
  }
  out.push_back('\n');

  auto row = [&](const std::string& name, int count, int correct, int wrong,
                 int failed, double accuracy, double wall, double cost) {
    out += fmt::format("{:<{}}  {:>6}  {:>7}  {:>6}  {:>6}  {:>8}", name,
                       width, count, correct, wrong, failed,
                       percent(accuracy));
    if (include_timing) {
      out += fmt::format("  {:>9.3f}  {:>10.6f}", wall, cost);
    }
    out.push_back('\n');
  };

  for (const auto& t : report.tasks) {
    row(t.task_id, t.count, t.correct, t.wrong, t.failure_count(),
        t.accuracy(), t.wall_seconds_per_problem(), t.cost_per_problem());
  }
  int total_failed = 0;
  for (const auto& [key, value] : report.total_failures) total_failed += value;
  const double total_wall =
      report.total_count > 0
          ? report.total_usage.wall_seconds / report.total_count
          : 0.0;
  const double total_cost =
      report.total_count > 0
          ? report.total_usage.cost_currency_units / report.total_count
          : 0.0;
  row("total", report.total_count, report.total_correct, report.total_wrong,
      total_failed, report.micro_accuracy(), total_wall, total_cost);

  out += fmt::format("\nmicro accuracy: {}\nmacro accuracy: {}\n",
                     percent(report.micro_accuracy()),
                     percent(report.macro_accuracy()));
  if (total_failed > 0) {
    out += fmt::format("failures: {}\n", join_failures(report.total_failures));
  }
  return out;
}

std::string csv(const EvalReport& report, bool include_timing) {
  std::string out = "task,count,correct,wrong,failed,accuracy";
  if (include_timing) out += ",wall_seconds_per_problem,cost_per_problem";
  out.push_back('\n');

  auto row = [&](const std::string& name, int count, int correct, int wrong,
                 int failed, double accuracy, double wall, double cost) {
    out += fmt::format("{},{},{},{},{},{}", name, count, correct, wrong,
                       failed, percent(accuracy));
    if (include_timing) out += fmt::format(",{:.3f},{:.6f}", wall, cost);
    out.push_back('\n');
  };

  for (const auto& t : report.tasks) {
    row(t.task_id, t.count, t.correct, t.wrong, t.failure_count(),
        t.accuracy(), t.wall_seconds_per_problem(), t.cost_per_problem());
  }
  int total_failed = 0;
  for (const auto& [key, value] : report.total_failures) total_failed += value;
  const double total_wall =
      report.total_count > 0
          ? report.total_usage.wall_seconds / report.total_count
          : 0.0;
  const double total_cost =
      report.total_count > 0
          ? report.total_usage.cost_currency_units / report.total_count
          : 0.0;
  row("micro", report.total_count, report.total_correct, report.total_wrong,
      total_failed, report.micro_accuracy(), total_wall, total_cost);
  row("macro", report.total_count, report.total_correct, report.total_wrong,
      total_failed, report.macro_accuracy(), total_wall, total_cost);
  return out;
}

}  // namespace

std::string format_report(const EvalReport& report,
                          const ReportOptions& options) {
  return options.format == ReportFormat::csv
             ? csv(report, options.include_timing)
             : plain_table(report, options.include_timing);
}

void write_report(const EvalReport& report, const std::filesystem::path& path,
                  const ReportOptions& options) {
  write_text_file(path, format_report(report, options));
}

}  // namespace grtc
