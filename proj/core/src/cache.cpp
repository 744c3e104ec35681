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

#include "graphrtc/pipeline.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <system_error>

#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "graphrtc/strutil.hpp"

namespace grtc {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::string_view kFormulationFile = "formulation.txt";
constexpr std::string_view kExtractorFile = "extractor.py";
constexpr std::string_view kPseudocodeFile = "pseudocode.txt";
constexpr std::string_view kSolverFile = "solver.py";
constexpr std::string_view kProvenanceFile = "provenance.json";

std::optional<Stage> stage_from_name(std::string_view name) {
  for (int i = 0; i < kStageCount; ++i) {
    auto stage = static_cast<Stage>(i);
    if (stage_name(stage) == name) return stage;
  }
  return std::nullopt;
}

json usage_to_json(const Usage& u) {
  return json{{"prompt_tokens", u.prompt_tokens},
              {"completion_tokens", u.completion_tokens},
              {"wall_seconds", u.wall_seconds},
              {"cost_currency_units", u.cost_currency_units}};
}

Usage usage_from_json(const json& j) {
  Usage u;
  u.prompt_tokens = j.value("prompt_tokens", std::int64_t{0});
  u.completion_tokens = j.value("completion_tokens", std::int64_t{0});
  u.wall_seconds = j.value("wall_seconds", 0.0);
  u.cost_currency_units = j.value("cost_currency_units", 0.0);
  return u;
}

std::string provenance_to_json(const PipelineArtifacts& a) {
  json stages = json::array();
  for (const auto& p : a.provenance) {
    stages.push_back(json{{"stage", std::string(stage_name(p.stage))},
                          {"model_id", p.model_id},
                          {"usage", usage_to_json(p.usage)}});
  }
  json doc{{"created_at", a.created_at}, {"stages", stages}};
  return doc.dump(2) + "\n";
}

bool provenance_from_json(const std::string& text, PipelineArtifacts* a) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (!doc.is_object()) return false;
  a->created_at = doc.value("created_at", std::string());
  a->provenance.clear();
  for (const auto& entry : doc.value("stages", json::array())) {
    StageProvenance p;
    auto stage = stage_from_name(entry.value("stage", std::string()));
    if (!stage) return false;
    p.stage = *stage;
    p.model_id = entry.value("model_id", std::string());
    if (entry.contains("usage")) p.usage = usage_from_json(entry["usage"]);
    a->provenance.push_back(std::move(p));
  }
  return true;
}

std::string random_suffix() {
  std::random_device rd;
  return fmt::format("{:08x}{:08x}", rd(), rd());
}

}  // namespace

ArtifactCache::ArtifactCache(std::filesystem::path root)
    : root_(std::move(root)) {
  fs::create_directories(root_);
}

std::filesystem::path ArtifactCache::bundle_dir(const CacheKey& key) const {
  return root_ / key.digest;
}

std::optional<PipelineArtifacts> ArtifactCache::lookup(
    const CacheKey& key) const {
  const fs::path dir = bundle_dir(key);
  std::error_code ec;
  if (!fs::is_regular_file(dir / kProvenanceFile, ec)) return std::nullopt;
  try {
    PipelineArtifacts a;
    a.formulation = ProblemFormulation::from_text(
        read_text_file(dir / kFormulationFile));
    a.extractor = Program{read_text_file(dir / kExtractorFile),
                          ProgramKind::extractor};
    a.pseudocode = Pseudocode{read_text_file(dir / kPseudocodeFile)};
    a.solver = Program{read_text_file(dir / kSolverFile), ProgramKind::solver};
    if (!provenance_from_json(read_text_file(dir / kProvenanceFile), &a)) {
      return std::nullopt;
    }
    return a;
  } catch (const Error&) {
    // Partial or corrupt bundle: report a miss so the caller rebuilds.
    return std::nullopt;
  }
}

std::optional<PipelineArtifacts> ArtifactCache::lookup_or_claim(
    const CacheKey& key) {
  std::unique_lock lock(mu_);
  for (;;) {
    cv_.wait(lock, [&] { return !in_flight_.contains(key.digest); });
    lock.unlock();
    auto found = lookup(key);
    lock.lock();
    if (found) return found;
    if (!in_flight_.contains(key.digest)) {
      in_flight_.insert(key.digest);
      return std::nullopt;
    }
    // Another thread claimed the key while we probed the disk; wait again.
  }
}

void ArtifactCache::store(const CacheKey& key,
                          const PipelineArtifacts& artifacts) {
  const fs::path dir = bundle_dir(key);
  const fs::path tmp = root_ / fmt::format(".tmp-{}-{}", key.digest,
                                           random_suffix());
  fs::create_directories(tmp);
  write_text_file(tmp / kFormulationFile, artifacts.formulation.to_text());
  write_text_file(tmp / kExtractorFile, artifacts.extractor.source);
  write_text_file(tmp / kPseudocodeFile, artifacts.pseudocode.text);
  write_text_file(tmp / kSolverFile, artifacts.solver.source);
  write_text_file(tmp / kProvenanceFile, provenance_to_json(artifacts));

  std::error_code ec;
  fs::rename(tmp, dir, ec);
  if (ec) {
    // Either a finished bundle already sits at `dir` (another writer won,
    // keep theirs) or the rename failed outright.
    std::error_code cleanup;
    fs::remove_all(tmp, cleanup);
    if (!fs::exists(dir)) {
      std::lock_guard lock(mu_);
      in_flight_.erase(key.digest);
      cv_.notify_all();
      throw Error(fmt::format("cannot store cache bundle {}: {}", key.digest,
                              ec.message()));
    }
  }

  std::lock_guard lock(mu_);
  in_flight_.erase(key.digest);
  cv_.notify_all();
}

void ArtifactCache::abandon(const CacheKey& key) {
  std::lock_guard lock(mu_);
  in_flight_.erase(key.digest);
  cv_.notify_all();
}

std::vector<std::string> ArtifactCache::keys() const {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(root_, ec)) {
    if (!entry.is_directory()) continue;
    if (fs::is_regular_file(entry.path() / kProvenanceFile)) {
      out.push_back(entry.path().filename().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace grtc
