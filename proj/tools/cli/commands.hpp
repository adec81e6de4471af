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

#include <iosfwd>

#include <json.hpp>

#include "cli/run_config.hpp"
#include "nipgraph/degree_stats.hpp"
#include "nipgraph/graph.hpp"
#include "nipgraph/metrics.hpp"

namespace nipgraph::app {

/// Runs one command and maps failures to exit codes: InputError -> 1,
/// ComputationError and anything else -> 2. Diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Each command writes its files under config.output_dir and returns an exit
// code; errors propagate as exceptions.
int cmd_stats(const RunConfig& config, std::ostream& out);
int cmd_knn(const RunConfig& config, std::ostream& out);
int cmd_nip(const RunConfig& config, std::ostream& out);
int cmd_congen(const RunConfig& config, std::ostream& out);
int cmd_report(const RunConfig& config, std::ostream& out);

/// Summary JSON shared by stats, knn and nip.
nlohmann::ordered_json summary_json(const Graph& graph, const DegreeStats& stats,
                                    const KnnProfile& knn, const RunConfig& config);

/// Sidecar echoing the effective configuration and the files written.
void write_run_metadata(const RunConfig& config, const std::vector<std::string>& outputs,
                        nlohmann::ordered_json extra = nlohmann::ordered_json::object());

}  // namespace nipgraph::app
