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

#include "nipgraph/degree_stats.hpp"

#include <algorithm>
#include <functional>

#include "nipgraph/error.hpp"
#include "wide_int.hpp"

namespace nipgraph {

double density(std::size_t node_count, std::uint64_t edge_count, DensityConvention convention) {
  if (node_count < 2) return 0.0;
  const double pairs = static_cast<double>(node_count) * static_cast<double>(node_count - 1);
  const double potential = convention == DensityConvention::Table1 ? pairs : pairs / 2.0;
  return static_cast<double>(edge_count) / potential;
}

DegreeStats degree_stats(std::span<const Degree> degrees, std::uint64_t edge_count,
                         DensityConvention convention) {
  if (degrees.empty()) throw InputError("degree statistics need at least one node");

  DegreeStats s;
  s.node_count = degrees.size();
  s.edge_count = edge_count;
  s.density_convention = convention;
  s.degree_sequence.assign(degrees.begin(), degrees.end());
  std::sort(s.degree_sequence.begin(), s.degree_sequence.end(), std::greater<>());

  for (Degree d : degrees) {
    s.degree_sum += d;
    s.square_degree_sum += static_cast<std::uint64_t>(d) * d;
  }

  const auto n = static_cast<long double>(s.node_count);
  s.mean_degree = static_cast<double>(static_cast<long double>(s.degree_sum) / n);
  s.mean_square_degree = static_cast<double>(static_cast<long double>(s.square_degree_sum) / n);

  // n * sum(d^2) - (sum d)^2 is an exact non-negative integer, zero only for
  // regular sequences.
  using wide = detail::uint128;
  const wide spread = static_cast<wide>(s.node_count) * s.square_degree_sum -
                      static_cast<wide>(s.degree_sum) * s.degree_sum;
  s.variance = static_cast<double>(static_cast<long double>(spread) / (n * n));

  s.density = density(s.node_count, edge_count, convention);
  return s;
}

DegreeStats degree_stats(const Graph& graph, DensityConvention convention) {
  const auto degrees = graph.degrees();
  return degree_stats(degrees, graph.edge_count(), convention);
}

}  // namespace nipgraph
