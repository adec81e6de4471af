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
#include <span>
#include <unordered_map>
#include <optional>
#include <vector>

#include "nipgraph/types.hpp"

namespace nipgraph {

/// Immutable undirected graph in compressed adjacency form.
///
/// Every node owns a contiguous, sorted run of neighbour indices. In
/// RawMultiset mode a neighbour appears once per parallel edge and a
/// self-loop lists the node twice in its own run, so degree(i) is always the
/// run length and the handshaking lemma holds exactly in both modes.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from external-id edges. Internal indices are assigned in
  /// first-appearance order (source before target, line by line).
  /// Throws InputError on an empty edge list.
  static Graph from_label_edges(std::span<const LabelEdge> edges, PreprocessMode mode);

  /// Builds a graph over `node_count` nodes from internal-index edges.
  /// Isolated nodes are kept. `labels` defaults to the identity map.
  static Graph from_index_edges(std::size_t node_count, std::span<const IndexEdge> edges,
                                PreprocessMode mode, std::vector<NodeLabel> labels = {});

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::uint64_t edge_count() const noexcept { return edge_count_; }
  PreprocessMode mode() const noexcept { return mode_; }

  /// Throws std::out_of_range for an invalid index.
  Degree degree(NodeIndex node) const;
  std::span<const NodeIndex> neighbours(NodeIndex node) const;

  NodeLabel label(NodeIndex node) const;
  std::span<const NodeLabel> labels() const noexcept { return labels_; }
  std::optional<NodeIndex> index_of(NodeLabel label) const;

  /// Degrees indexed by node.
  std::vector<Degree> degrees() const;

  /// Every undirected edge slot once, endpoints ascending, sorted
  /// lexicographically. Parallel edges repeat.
  std::vector<IndexEdge> edges() const;

  /// Same node labels and same labelled neighbour multisets, regardless of
  /// internal numbering.
  bool same_structure(const Graph& other) const;

 private:
  static Graph assemble(std::size_t node_count, std::vector<IndexEdge> edges,
                        PreprocessMode mode, std::vector<NodeLabel> labels);

  void check_index(NodeIndex node) const;

  std::vector<std::uint64_t> offsets_{0};
  std::vector<NodeIndex> targets_;
  std::vector<NodeLabel> labels_;
  std::unordered_map<NodeLabel, NodeIndex> index_by_label_;
  std::uint64_t edge_count_ = 0;
  PreprocessMode mode_ = PreprocessMode::Simple;
};

}  // namespace nipgraph
