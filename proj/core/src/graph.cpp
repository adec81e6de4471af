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

#include "nipgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "nipgraph/error.hpp"

namespace nipgraph {

std::string_view to_string(PreprocessMode mode) {
  return mode == PreprocessMode::RawMultiset ? "raw_multiset" : "simple";
}

std::string_view to_string(DensityConvention convention) {
  return convention == DensityConvention::Table1 ? "table1" : "half";
}

std::string_view to_string(Scale scale) {
  return scale == Scale::Normalized ? "normalized" : "raw";
}

std::optional<PreprocessMode> parse_preprocess_mode(std::string_view text) {
  if (text == "raw_multiset" || text == "raw") return PreprocessMode::RawMultiset;
  if (text == "simple") return PreprocessMode::Simple;
  return std::nullopt;
}

std::optional<DensityConvention> parse_density_convention(std::string_view text) {
  if (text == "table1") return DensityConvention::Table1;
  if (text == "half") return DensityConvention::Half;
  return std::nullopt;
}

std::optional<Scale> parse_scale(std::string_view text) {
  if (text == "normalized") return Scale::Normalized;
  if (text == "raw") return Scale::Raw;
  return std::nullopt;
}

Graph Graph::from_label_edges(std::span<const LabelEdge> edges, PreprocessMode mode) {
  if (edges.empty()) throw InputError("edge list is empty");

  std::unordered_map<NodeLabel, NodeIndex> index;
  index.reserve(edges.size());
  std::vector<NodeLabel> labels;
  auto intern = [&](NodeLabel label) {
    auto [it, inserted] = index.try_emplace(label, static_cast<NodeIndex>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::vector<IndexEdge> mapped;
  mapped.reserve(edges.size());
  for (const auto& e : edges) {
    const NodeIndex s = intern(e.source);
    const NodeIndex t = intern(e.target);
    mapped.push_back({s, t});
  }
  const std::size_t n = labels.size();
  Graph g = assemble(n, std::move(mapped), mode, std::move(labels));
  return g;
}

Graph Graph::from_index_edges(std::size_t node_count, std::span<const IndexEdge> edges,
                              PreprocessMode mode, std::vector<NodeLabel> labels) {
  if (labels.empty()) {
    labels.resize(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels[i] = static_cast<NodeLabel>(i);
  }
  if (labels.size() != node_count) throw InputError("label count does not match node count");
  for (const auto& e : edges) {
    if (e.source >= node_count || e.target >= node_count)
      throw InputError("edge endpoint outside [0, node_count)");
  }
  return assemble(node_count, {edges.begin(), edges.end()}, mode, std::move(labels));
}

Graph Graph::assemble(std::size_t node_count, std::vector<IndexEdge> edges, PreprocessMode mode,
                      std::vector<NodeLabel> labels) {
  if (mode == PreprocessMode::Simple) {
    std::erase_if(edges, [](const IndexEdge& e) { return e.source == e.target; });
    for (auto& e : edges) {
      if (e.source > e.target) std::swap(e.source, e.target);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  Graph g;
  g.mode_ = mode;
  g.edge_count_ = edges.size();
  g.offsets_.assign(node_count + 1, 0);
  for (const auto& e : edges) {
    ++g.offsets_[e.source + 1];
    ++g.offsets_[e.target + 1];
  }
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];

  g.targets_.resize(g.offsets_.back());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : edges) {
    g.targets_[cursor[e.source]++] = e.target;
    g.targets_[cursor[e.target]++] = e.source;
  }
  for (std::size_t i = 0; i < node_count; ++i) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
  }

  g.index_by_label_.reserve(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    if (!g.index_by_label_.try_emplace(labels[i], static_cast<NodeIndex>(i)).second)
      throw InputError("duplicate node label " + std::to_string(labels[i]));
  }
  g.labels_ = std::move(labels);
  return g;
}

void Graph::check_index(NodeIndex node) const {
  if (node >= node_count())
    throw std::out_of_range("node index " + std::to_string(node) + " out of range [0, " +
                            std::to_string(node_count()) + ")");
}

Degree Graph::degree(NodeIndex node) const {
  check_index(node);
  return static_cast<Degree>(offsets_[node + 1] - offsets_[node]);
}

std::span<const NodeIndex> Graph::neighbours(NodeIndex node) const {
  check_index(node);
  return {targets_.data() + offsets_[node], targets_.data() + offsets_[node + 1]};
}

NodeLabel Graph::label(NodeIndex node) const {
  check_index(node);
  return labels_[node];
}

std::optional<NodeIndex> Graph::index_of(NodeLabel label) const {
  auto it = index_by_label_.find(label);
  if (it == index_by_label_.end()) return std::nullopt;
  return it->second;
}

std::vector<Degree> Graph::degrees() const {
  std::vector<Degree> out(node_count());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<Degree>(offsets_[i + 1] - offsets_[i]);
  return out;
}

std::vector<IndexEdge> Graph::edges() const {
  std::vector<IndexEdge> out;
  out.reserve(edge_count_);
  for (NodeIndex u = 0; u < node_count(); ++u) {
    bool pending_loop = false;  // self-loops occupy two consecutive entries
    for (NodeIndex v : neighbours(u)) {
      if (v > u) {
        out.push_back({u, v});
      } else if (v == u) {
        if (pending_loop) out.push_back({u, u});
        pending_loop = !pending_loop;
      }
    }
  }
  return out;
}

bool Graph::same_structure(const Graph& other) const {
  if (node_count() != other.node_count() || edge_count() != other.edge_count()) return false;
  std::vector<NodeLabel> mine;
  std::vector<NodeLabel> theirs;
  for (NodeIndex u = 0; u < node_count(); ++u) {
    auto v = other.index_of(labels_[u]);
    if (!v) return false;
    mine.clear();
    theirs.clear();
    for (NodeIndex w : neighbours(u)) mine.push_back(labels_[w]);
    for (NodeIndex w : other.neighbours(*v)) theirs.push_back(other.labels_[w]);
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    if (mine != theirs) return false;
  }
  return true;
}

}  // namespace nipgraph
