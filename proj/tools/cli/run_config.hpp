/*
Copyright 2026 The nipgraph Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nipgraph/nip.hpp"
#include "nipgraph/types.hpp"

namespace nipgraph::app {

enum class Command { Stats, Knn, Nip, Congen, Report };

std::string_view to_string(Command command);

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kComputationError = 2,
  kPartialReport = 3,
};

inline constexpr std::string_view kWorkersEnv = "NIPGRAPH_WORKERS";

struct RunConfig {
  Command command = Command::Stats;
  std::vector<std::filesystem::path> input_paths;
  PreprocessMode mode = PreprocessMode::Simple;
  DensityConvention density_convention = DensityConvention::Table1;
  Scale scale = Scale::Normalized;
  std::filesystem::path output_dir = ".";
  std::optional<std::uint64_t> seed;  // congen: overrides the spec's seed
  double tolerance = kDefaultParTolerance;
  unsigned worker_count = 0;  // 0: hardware concurrency
  bool both_modes = false;    // report: add a SIMPLE row per instance
  std::optional<std::filesystem::path> spec_path;
  std::optional<std::string> spec_json;
};

/// Defaults per command: RAW_MULTISET for report, SIMPLE otherwise.
RunConfig default_config(Command command);

/// Effective configuration as echoed into output metadata. Worker count and
/// output directory are left out: they never change output content.
nlohmann::ordered_json echo(const RunConfig& config);

}  // namespace nipgraph::app
