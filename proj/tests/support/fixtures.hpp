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

#include <vector>

#include "nipgraph/graph.hpp"
#include "nipgraph/types.hpp"

namespace nipgraph::testing {

/// Six-node, eight-edge worked example with node ids 1..6. Recovered by
/// exhaustive search (see test_fixture_search.cpp).
inline std::vector<LabelEdge> worked_example_edges() {
  return {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 4}, {4, 6}, {5, 6}};
}

inline Graph worked_example(PreprocessMode mode = PreprocessMode::Simple) {
  const auto edges = worked_example_edges();
  return Graph::from_label_edges(edges, mode);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<IndexEdge> edges;
  for (NodeIndex i = 0; i < n; ++i)
    for (NodeIndex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_index_edges(n, edges, PreprocessMode::Simple);
}

inline Graph ring(std::size_t n) {
  std::vector<IndexEdge> edges;
  for (NodeIndex i = 0; i < n; ++i) edges.push_back({i, static_cast<NodeIndex>((i + 1) % n)});
  return Graph::from_index_edges(n, edges, PreprocessMode::Simple);
}

/// Hub 0 joined to leaves 1..leaves.
inline Graph star(std::size_t leaves) {
  std::vector<IndexEdge> edges;
  for (NodeIndex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph::from_index_edges(leaves + 1, edges, PreprocessMode::Simple);
}

/// Path over labels 1..n.
inline Graph path(std::size_t n) {
  std::vector<LabelEdge> edges;
  for (NodeLabel i = 1; i < static_cast<NodeLabel>(n); ++i) edges.push_back({i, i + 1});
  return Graph::from_label_edges(edges, PreprocessMode::Simple);
}

}  // namespace nipgraph::testing
