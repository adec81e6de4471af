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

#include "cli/table1.hpp"

#include <array>
#include <cmath>

#include "nipgraph/metrics.hpp"

namespace nipgraph::app {

namespace {

const std::array<InstanceStats, 4> kReference{{
    {"amazon0302", 262111, 1234877, 1.79e-5, 9.422, 123.823, 35.03, 0.003, 14.141},
    {"amazon0312", 400727, 3200440, 1.99e-5, 15.973, 505.859, 250.71, -0.044, 32.670},
    {"amazon0505", 410236, 3356824, 1.99e-5, 16.365, 533.438, 265.61, -0.043, 33.595},
    {"amazon0601", 403394, 3387388, 2.08e-5, 16.794, 542.731, 260.68, -0.043, 33.317},
}};

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

}  // namespace

std::span<const InstanceStats> table1_reference() { return kReference; }

const InstanceStats* find_reference(std::string_view name) {
  for (const auto& r : kReference)
    if (r.name == name) return &r;
  return nullptr;
}

std::vector<ColumnCheck> compare(const InstanceStats& c, const InstanceStats& r,
                                 const Table1Tolerance& t) {
  std::vector<ColumnCheck> out;
  out.push_back({"n", static_cast<double>(c.n) - static_cast<double>(r.n), c.n == r.n});
  out.push_back({"m", static_cast<double>(c.m) - static_cast<double>(r.m), c.m == r.m});
  auto moment = [&](const char* col, double got, double want, double tol) {
    const double d = rel(got, want);
    out.push_back({col, d, d <= tol});
  };
  moment("density", c.density, r.density, t.density_rel);
  moment("mean_degree", c.mean_degree, r.mean_degree, t.moment_rel);
  moment("mean_square_degree", c.mean_square_degree, r.mean_square_degree, t.moment_rel);
  moment("variance", c.variance, r.variance, t.moment_rel);
  if (c.assortativity && r.assortativity) {
    const double d = std::fabs(*c.assortativity - *r.assortativity);
    out.push_back({"assortativity", d, d <= t.assortativity_abs});
  } else {
    out.push_back({"assortativity", NAN, false});
  }
  moment("nip_network", c.nip_network, r.nip_network, t.moment_rel);
  return out;
}

std::string instance_name(const std::filesystem::path& path) {
  std::filesystem::path p = path.filename();
  if (p.extension() == ".gz") p = p.stem();
  if (p.extension() == ".txt") p = p.stem();
  return p.string();
}

HighlightCheck check_highlighted_node(const Graph& graph, Degree degree, double target,
                                      unsigned workers) {
  HighlightCheck h;
  h.degree = degree;
  h.target = target;
  const auto knn = knn_node(graph, workers);
  for (NodeIndex i = 0; i < graph.node_count(); ++i) {
    if (graph.degree(i) != degree || !knn[i]) continue;
    ++h.candidates;
    const double nip = degree * (1.0 + *knn[i]);
    const double d = std::fabs(nip - target) / target;
    if (!h.best_label || d < h.rel_diff) {
      h.best_label = graph.label(i);
      h.best_nip = nip;
      h.best_knn = *knn[i];
      h.rel_diff = d;
    }
  }
  return h;
}

}  // namespace nipgraph::app
