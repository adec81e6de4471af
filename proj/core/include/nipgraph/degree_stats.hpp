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
#include <span>
#include <vector>

#include "nipgraph/graph.hpp"
#include "nipgraph/types.hpp"

namespace nipgraph {

struct DegreeStats {
  std::vector<Degree> degree_sequence;  // non-increasing
  std::size_t node_count = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t degree_sum = 0;
  std::uint64_t square_degree_sum = 0;
  double mean_degree = 0.0;
  double mean_square_degree = 0.0;
  double variance = 0.0;
  double density = 0.0;
  DensityConvention density_convention = DensityConvention::Table1;
};

/// Degree moments of a graph. Throws InputError when the graph has no nodes.
DegreeStats degree_stats(const Graph& graph,
                         DensityConvention convention = DensityConvention::Table1);

/// Same, from a bare degree vector; `edge_count` only feeds the density.
DegreeStats degree_stats(std::span<const Degree> degrees, std::uint64_t edge_count,
                         DensityConvention convention = DensityConvention::Table1);

double density(std::size_t node_count, std::uint64_t edge_count, DensityConvention convention);

}  // namespace nipgraph
