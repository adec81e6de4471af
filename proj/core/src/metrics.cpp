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

#include "nipgraph/metrics.hpp"

#include "nipgraph/error.hpp"
#include "wide_int.hpp"
#include "nipgraph/parallel.hpp"

namespace nipgraph {

double knn_global(const DegreeStats& stats) {
  if (stats.degree_sum == 0) throw ComputationError("k_nn undefined: every degree is zero");
  return static_cast<double>(static_cast<long double>(stats.square_degree_sum) /
                             static_cast<long double>(stats.degree_sum));
}

NodeValues knn_node(const Graph& graph, unsigned workers) {
  const auto degrees = graph.degrees();
  NodeValues out(graph.node_count());
  parallel_for(graph.node_count(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto nbrs = graph.neighbours(static_cast<NodeIndex>(i));
      if (nbrs.empty()) continue;
      std::uint64_t sum = 0;
      for (NodeIndex j : nbrs) sum += degrees[j];
      out[i] = static_cast<double>(sum) / static_cast<double>(nbrs.size());
    }
  });
  return out;
}

DegreeClassMap knn_class(const Graph& graph, std::span<const std::optional<double>> knn) {
  if (knn.size() != graph.node_count())
    throw InputError("knn array length does not match node count");
  // Summed in node order within each class so the result is independent of
  // how knn_node was partitioned.
  std::map<Degree, std::pair<std::size_t, double>> acc;
  for (NodeIndex i = 0; i < graph.node_count(); ++i) {
    if (!knn[i]) continue;
    auto& slot = acc[graph.degree(i)];
    ++slot.first;
    slot.second += *knn[i];
  }
  DegreeClassMap out;
  for (const auto& [d, a] : acc) out.emplace_hint(out.end(), d, DegreeClassValue{a.first, a.second / static_cast<double>(a.first)});
  return out;
}

std::optional<double> assortativity(const Graph& graph, unsigned workers) {
  if (graph.edge_count() == 0) throw ComputationError("assortativity undefined: graph has no edges");

  const auto degrees = graph.degrees();
  const std::size_t parts = std::max<std::size_t>(1, std::min<std::size_t>(resolve_workers(workers), graph.node_count()));

  // Integer moments over oriented slots: sum x = sum_i d_i^2,
  // sum x^2 = sum_i d_i^3, sum xy = sum_i d_i * sum_{j in N(i)} d_j.
  using wide = detail::uint128;
  struct Partial {
    wide sum_x = 0;
    wide sum_xx = 0;
    wide sum_xy = 0;
  };
  std::vector<Partial> partial(parts);
  const std::size_t chunk = (graph.node_count() + parts - 1) / parts;
  parallel_for(parts, static_cast<unsigned>(parts), [&](std::size_t pb, std::size_t pe) {
    for (std::size_t p = pb; p < pe; ++p) {
      Partial acc;
      const std::size_t end = std::min(graph.node_count(), (p + 1) * chunk);
      for (std::size_t i = p * chunk; i < end; ++i) {
        const wide d = degrees[i];
        if (d == 0) continue;
        wide nbr = 0;
        for (NodeIndex j : graph.neighbours(static_cast<NodeIndex>(i))) nbr += degrees[j];
        acc.sum_x += d * d;
        acc.sum_xx += d * d * d;
        acc.sum_xy += d * nbr;
      }
      partial[p] = acc;
    }
  });

  Partial total;
  for (const auto& p : partial) {
    total.sum_x += p.sum_x;
    total.sum_xx += p.sum_xx;
    total.sum_xy += p.sum_xy;
  }
  const wide slots = static_cast<wide>(2) * graph.edge_count();
  // r = (M*Sxy - Sx^2) / (M*Sxx - Sx^2); both orientations share one mean.
  const wide sx2 = total.sum_x * total.sum_x;
  const wide den = slots * total.sum_xx - sx2;
  if (den == 0) return std::nullopt;
  const wide mxy = slots * total.sum_xy;
  const long double num = mxy >= sx2 ? static_cast<long double>(mxy - sx2)
                                     : -static_cast<long double>(sx2 - mxy);
  return static_cast<double>(num / static_cast<long double>(den));
}

KnnProfile knn_profile(const Graph& graph, const DegreeStats& stats, unsigned workers) {
  KnnProfile p;
  p.global = knn_global(stats);
  p.node = knn_node(graph, workers);
  p.by_class = knn_class(graph, p.node);
  p.assortativity = assortativity(graph, workers);
  return p;
}

}  // namespace nipgraph
