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

// Brute-force references used only by tests. Everything here works on an
// explicitly materialized adjacency matrix and shares no code path with the
// library's compressed adjacency.

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "nipgraph/types.hpp"

namespace nipgraph::testing {

/// Symmetric count matrix; a self-loop adds 2 on the diagonal.
struct AdjacencyMatrix {
  std::size_t n = 0;
  std::vector<std::vector<int>> a;

  explicit AdjacencyMatrix(std::size_t nodes) : n(nodes), a(nodes, std::vector<int>(nodes, 0)) {}

  void add(std::size_t i, std::size_t j) {
    if (i == j) {
      a[i][i] += 2;
    } else {
      a[i][j] += 1;
      a[j][i] += 1;
    }
  }

  std::int64_t degree(std::size_t i) const {
    return std::accumulate(a[i].begin(), a[i].end(), std::int64_t{0});
  }

  std::int64_t edge_count() const {
    std::int64_t twice = 0;
    for (std::size_t i = 0; i < n; ++i) twice += degree(i);
    return twice / 2;
  }

  /// sum_j a_ij d_j / d_i; nullopt for isolated nodes.
  std::optional<double> knn(std::size_t i) const {
    const auto d = degree(i);
    if (d == 0) return std::nullopt;
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += a[i][j] * degree(j);
    return static_cast<double>(s) / static_cast<double>(d);
  }

  /// Group-by-degree mean of knn over non-isolated nodes.
  std::map<std::int64_t, double> knn_class() const {
    std::map<std::int64_t, std::pair<int, double>> acc;
    for (std::size_t i = 0; i < n; ++i) {
      if (auto k = knn(i)) {
        auto& slot = acc[degree(i)];
        ++slot.first;
        slot.second += *k;
      }
    }
    std::map<std::int64_t, double> out;
    for (auto& [d, p] : acc) out[d] = p.second / p.first;
    return out;
  }

  /// Textbook two-pass Pearson over the explicit list of oriented endpoint
  /// pairs (every edge listed in both directions, self-loops twice).
  std::optional<double> pearson() const {
    std::vector<std::pair<double, double>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (int c = 0; c < a[i][j]; ++c)
          pairs.emplace_back(static_cast<double>(degree(i)), static_cast<double>(degree(j)));
      }
    }
    if (pairs.empty()) return std::nullopt;
    long double mx = 0, my = 0;
    for (auto [x, y] : pairs) {
      mx += x;
      my += y;
    }
    mx /= pairs.size();
    my /= pairs.size();
    long double sxy = 0, sxx = 0, syy = 0;
    for (auto [x, y] : pairs) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
      syy += (y - my) * (y - my);
    }
    if (sxx == 0 || syy == 0) return std::nullopt;
    return static_cast<double>(sxy / std::sqrt(sxx * syy));
  }
};

/// Random graph on n nodes over index edges. With `multi` set, each pair may
/// appear up to twice and self-loops occur.
inline std::vector<IndexEdge> random_edges(std::mt19937_64& gen, std::size_t n, double p, bool multi) {
  std::bernoulli_distribution coin(p);
  std::vector<IndexEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = multi ? i : i + 1; j < n; ++j) {
      const int copies = multi ? 2 : 1;
      for (int c = 0; c < copies; ++c) {
        if (coin(gen)) edges.push_back({static_cast<NodeIndex>(i), static_cast<NodeIndex>(j)});
      }
    }
  }
  return edges;
}

inline AdjacencyMatrix matrix_of(std::size_t n, const std::vector<IndexEdge>& edges) {
  AdjacencyMatrix m(n);
  for (const auto& e : edges) m.add(e.source, e.target);
  return m;
}

}  // namespace nipgraph::testing
