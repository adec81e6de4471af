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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nipgraph/graph.hpp"

namespace nipgraph::app {

/// Published statistics of the four SNAP Amazon co-purchase instances.
struct InstanceStats {
  std::string name;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double density = 0.0;
  double mean_degree = 0.0;
  double mean_square_degree = 0.0;
  double variance = 0.0;
  std::optional<double> assortativity;
  double nip_network = 0.0;
};

std::span<const InstanceStats> table1_reference();
const InstanceStats* find_reference(std::string_view name);

/// Reproduction tolerances: n and m exact; moments and NIP_N relative;
/// assortativity absolute; density relative.
struct Table1Tolerance {
  double moment_rel = 0.005;
  double assortativity_abs = 0.005;
  double density_rel = 0.02;
};

struct ColumnCheck {
  std::string column;
  double diff = 0.0;  // relative for moments/density, absolute otherwise
  bool pass = false;
};

std::vector<ColumnCheck> compare(const InstanceStats& computed, const InstanceStats& reference,
                                 const Table1Tolerance& tolerance = {});

/// Instance name from a path: file name without ".gz" and ".txt".
std::string instance_name(const std::filesystem::path& path);

/// Best candidate for the highlighted degree-44 node of amazon0601:
/// among nodes of the given degree, the one whose RAW-scale NIP is closest
/// to the target.
struct HighlightCheck {
  Degree degree = 44;
  double target = 192.61;
  std::size_t candidates = 0;
  std::optional<NodeLabel> best_label;
  double best_nip = 0.0;
  double best_knn = 0.0;
  double rel_diff = 0.0;
  bool within(double rel_tolerance) const { return candidates > 0 && rel_diff <= rel_tolerance; }
};

HighlightCheck check_highlighted_node(const Graph& graph, Degree degree = 44, double target = 192.61,
                                      unsigned workers = 0);

}  // namespace nipgraph::app
