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

#include "nipgraph/nip.hpp"

#include <string>

#include "nipgraph/error.hpp"

namespace nipgraph {

std::string_view to_string(Performance performance) {
  switch (performance) {
    case Performance::Over: return "OVER";
    case Performance::Under: return "UNDER";
    case Performance::AtPar: return "AT_PAR";
    case Performance::Undefined: return "UNDEFINED";
  }
  return "UNDEFINED";
}

namespace {

double slot_count(const Graph& graph) {
  if (graph.edge_count() == 0) throw ComputationError("information patrimony undefined: m = 0");
  return 2.0 * static_cast<double>(graph.edge_count());
}

double scale_divisor(const Graph& graph, Scale scale) {
  return scale == Scale::Normalized ? slot_count(graph) : 1.0;
}

}  // namespace

std::vector<double> ip(const Graph& graph) {
  const double slots = slot_count(graph);
  std::vector<double> out(graph.node_count());
  for (NodeIndex i = 0; i < out.size(); ++i) out[i] = graph.degree(i) / slots;
  return out;
}

double nip_network(const DegreeStats& stats) { return 1.0 + knn_global(stats); }

std::vector<double> nip_node_uncorrelated(const Graph& graph, const DegreeStats& stats) {
  const double network = nip_network(stats);
  auto out = ip(graph);
  for (double& v : out) v *= network;
  return out;
}

std::vector<double> nip_node_correlated(const Graph& graph, const KnnProfile& knn, Scale scale) {
  if (knn.node.size() != graph.node_count())
    throw InputError("knn profile does not belong to this graph");
  const double divisor = scale_divisor(graph, scale);
  std::vector<double> out(graph.node_count(), 0.0);
  for (NodeIndex i = 0; i < out.size(); ++i) {
    if (!knn.node[i]) continue;
    out[i] = graph.degree(i) * (1.0 + *knn.node[i]) / divisor;
  }
  return out;
}

DegreeClassMap nip_class(const Graph& graph, const KnnProfile& knn, Scale scale) {
  const double divisor = scale_divisor(graph, scale);
  DegreeClassMap out;
  for (const auto& [d, cls] : knn.by_class)
    out.emplace_hint(out.end(), d, DegreeClassValue{cls.class_size, d * (1.0 + cls.value) / divisor});
  return out;
}

std::vector<Performance> classify_performers(std::span<const double> nip_node,
                                             const DegreeClassMap& by_class,
                                             std::span<const Degree> degrees, double tolerance) {
  if (nip_node.size() != degrees.size())
    throw InputError("classify_performers: nip and degree arrays differ in length");
  std::vector<Performance> out(nip_node.size(), Performance::Undefined);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (degrees[i] == 0) continue;
    auto it = by_class.find(degrees[i]);
    if (it == by_class.end())
      throw InputError("classify_performers: degree " + std::to_string(degrees[i]) +
                       " has no class baseline");
    const double baseline = it->second.value;
    if (nip_node[i] > baseline * (1.0 + tolerance))
      out[i] = Performance::Over;
    else if (nip_node[i] < baseline * (1.0 - tolerance))
      out[i] = Performance::Under;
    else
      out[i] = Performance::AtPar;
  }
  return out;
}

NipScores nip_scores(const Graph& graph, const DegreeStats& stats, const KnnProfile& knn,
                     Scale scale, double tolerance) {
  NipScores s;
  s.scale = scale;
  s.ip = ip(graph);
  s.network = nip_network(stats);
  s.node = nip_node_correlated(graph, knn, scale);
  s.by_class = nip_class(graph, knn, scale);
  const auto degrees = graph.degrees();
  s.classification = classify_performers(s.node, s.by_class, degrees, tolerance);
  return s;
}

}  // namespace nipgraph
