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

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nipgraph/degree_stats.hpp"
#include "nipgraph/graph.hpp"

namespace nipgraph {

/// Aggregate over all nodes sharing one degree.
struct DegreeClassValue {
  std::size_t class_size = 0;
  double value = 0.0;
};

/// Degree -> aggregate, iterated in ascending degree. Only degrees >= 1 that
/// occur in the graph are present.
using DegreeClassMap = std::map<Degree, DegreeClassValue>;

/// Per-node value that is absent (UNDEFINED) for isolated nodes.
using NodeValues = std::vector<std::optional<double>>;

struct KnnProfile {
  double global = 0.0;             // <d^2>/<d>
  NodeValues node;                 // mean neighbour degree, per node
  DegreeClassMap by_class;         // class means of `node`
  std::optional<double> assortativity;  // nullopt: zero endpoint-degree variance
};

/// <d^2>/<d>. Throws ComputationError when every degree is zero.
double knn_global(const DegreeStats& stats);

/// Mean degree over each node's neighbour run (parallel edges counted with
/// multiplicity, a self-loop counts the node itself twice).
NodeValues knn_node(const Graph& graph, unsigned workers = 1);

/// Arithmetic mean of `knn` over each degree class.
DegreeClassMap knn_class(const Graph& graph, std::span<const std::optional<double>> knn);

/// Pearson correlation of endpoint degrees over all 2m oriented edge slots.
/// Returns nullopt when the endpoint degrees have zero variance. Throws
/// ComputationError when the graph has no edges.
std::optional<double> assortativity(const Graph& graph, unsigned workers = 1);

KnnProfile knn_profile(const Graph& graph, const DegreeStats& stats, unsigned workers = 1);

}  // namespace nipgraph
