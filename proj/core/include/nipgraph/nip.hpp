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

#include <span>
#include <string_view>
#include <vector>

#include "nipgraph/degree_stats.hpp"
#include "nipgraph/graph.hpp"
#include "nipgraph/metrics.hpp"
#include "nipgraph/types.hpp"

namespace nipgraph {

enum class Performance { Over, Under, AtPar, Undefined };

std::string_view to_string(Performance performance);

inline constexpr double kDefaultParTolerance = 1e-9;

struct NipScores {
  std::vector<double> ip;
  double network = 0.0;
  std::vector<double> node;  // correlated form
  DegreeClassMap by_class;
  std::vector<Performance> classification;
  Scale scale = Scale::Normalized;
};

/// Share of edge endpoints held by each node, d_i / 2m.
/// Throws ComputationError when m == 0.
std::vector<double> ip(const Graph& graph);

/// 1 + <d^2>/<d>. Throws ComputationError when every degree is zero.
double nip_network(const DegreeStats& stats);

/// IP_i times the network multiplier; ignores degree correlations.
std::vector<double> nip_node_uncorrelated(const Graph& graph, const DegreeStats& stats);

/// d_i (1 + knn_i), divided by 2m in Normalized scale. Isolated nodes get 0.
std::vector<double> nip_node_correlated(const Graph& graph, const KnnProfile& knn, Scale scale);

/// d (1 + knn(d)) per degree class, divided by 2m in Normalized scale.
DegreeClassMap nip_class(const Graph& graph, const KnnProfile& knn, Scale scale);

/// Compares every node with the baseline of its degree class.
///
/// Over when nip > baseline * (1 + tolerance), Under when
/// nip < baseline * (1 - tolerance), AtPar otherwise. Nodes of degree 0 are
/// Undefined. Throws InputError on mismatched lengths or a degree missing
/// from `by_class`.
std::vector<Performance> classify_performers(std::span<const double> nip_node,
                                             const DegreeClassMap& by_class,
                                             std::span<const Degree> degrees,
                                             double tolerance = kDefaultParTolerance);

NipScores nip_scores(const Graph& graph, const DegreeStats& stats, const KnnProfile& knn,
                     Scale scale, double tolerance = kDefaultParTolerance);

}  // namespace nipgraph
