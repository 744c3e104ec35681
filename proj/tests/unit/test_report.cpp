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

#include <doctest.h>

#include <string>

#include "graphrtc/strutil.hpp"
#include "testenv.hpp"

using namespace grtc;

namespace {

// A fixed report with two tasks, mixed failures, and non-round accuracy.
EvalReport sample_report() {
  EvalReport report;

  TaskReport a;
  a.task_id = "cycle_detect";
  a.count = 40;
  a.correct = 36;
  a.wrong = 3;
  a.failures = {{"timeout", 1}};
  a.usage = {4000, 800, 120.0, 0.25};

  TaskReport b;
  b.task_id = "shortest_path";
  b.count = 20;
  b.correct = 20;
  b.usage = {4400, 900, 30.0, 0.05};

  report.tasks = {a, b};
  report.total_count = 60;
  report.total_correct = 56;
  report.total_wrong = 3;
  report.total_failures = {{"timeout", 1}};
  report.total_usage = {8400, 1700, 150.0, 0.30};
  return report;
}

}  // namespace

TEST_CASE("plain table without timing matches its golden file") {
  ReportOptions options;
  options.include_timing = false;
  const std::string table = format_report(sample_report(), options);
  std::string message;
  CHECK_MESSAGE(testenv::matches_golden("report_plain.txt", table, &message),
                message);
}

TEST_CASE("csv without timing matches its golden file") {
  ReportOptions options;
  options.format = ReportFormat::csv;
  options.include_timing = false;
  const std::string csv = format_report(sample_report(), options);
  std::string message;
  CHECK_MESSAGE(testenv::matches_golden("report_csv.txt", csv, &message),
                message);
}

TEST_CASE("the table carries the headline numbers") {
  const std::string table = format_report(sample_report());
  CHECK(table.find("cycle_detect") != std::string::npos);
  CHECK(table.find("shortest_path") != std::string::npos);
  // 36/40 and 20/20 with one decimal.
  CHECK(table.find("90.0") != std::string::npos);
  CHECK(table.find("100.0") != std::string::npos);
  // Micro 56/60; macro (90 + 100) / 2.
  CHECK(table.find("93.3") != std::string::npos);
  CHECK(table.find("95.0") != std::string::npos);
  CHECK(table.find("timeout") != std::string::npos);
}

TEST_CASE("timing columns appear only when asked for") {
  ReportOptions with;
  with.include_timing = true;
  ReportOptions without;
  without.include_timing = false;
  const std::string timed = format_report(sample_report(), with);
  const std::string plain = format_report(sample_report(), without);
  CHECK(timed.find("time/prob") != std::string::npos);
  CHECK(plain.find("time/prob") == std::string::npos);
  // 120 s over 40 problems.
  CHECK(timed.find("3.000") != std::string::npos);
}

TEST_CASE("write_report lands the same bytes on disk") {
  testenv::TempDir dir;
  const auto path = dir.path() / "report.csv";
  ReportOptions options;
  options.format = ReportFormat::csv;
  options.include_timing = false;
  write_report(sample_report(), path, options);
  CHECK(read_text_file(path) == format_report(sample_report(), options));
}

TEST_CASE("an empty report renders without dividing by zero") {
  const EvalReport empty;
  const std::string table = format_report(empty);
  CHECK(!table.empty());
  const std::string csv =
      format_report(empty, {ReportFormat::csv, true});
  CHECK(!csv.empty());
}
