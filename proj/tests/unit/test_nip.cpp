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

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "nipgraph/degree_stats.hpp"
#include "nipgraph/error.hpp"
#include "nipgraph/metrics.hpp"
#include "nipgraph/nip.hpp"
#include "oracle.hpp"

using namespace nipgraph;
using namespace nipgraph::testing;

namespace {

struct Pipeline {
  Graph graph;
  DegreeStats stats;
  KnnProfile knn;

  explicit Pipeline(Graph g) : graph(std::move(g)), stats(degree_stats(graph)), knn(knn_profile(graph, stats)) {}

  NodeIndex operator[](NodeLabel label) const { return graph.index_of(label).value(); }
};

}  // namespace

TEST_CASE("information patrimony") {
  const Pipeline p(worked_example());
  const auto shares = ip(p.graph);
  CHECK(shares[p[1]] == 3.0 / 16.0);
  CHECK(std::accumulate(shares.begin(), shares.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-15));

  for (std::size_t n : {2, 5, 9}) {
    for (double v : ip(complete_graph(n))) CHECK(v == doctest::Approx(1.0 / n).epsilon(1e-15));
  }

  const std::vector<IndexEdge> edges{{0, 1}};
  CHECK(ip(Graph::from_index_edges(3, edges, PreprocessMode::Simple))[2] == 0.0);
  CHECK_THROWS_AS(ip(Graph::from_index_edges(3, {}, PreprocessMode::Simple)), ComputationError);
}

TEST_CASE("network multiplier") {
  CHECK(nip_network(degree_stats(worked_example())) == 3.875);
  CHECK_THROWS_AS(nip_network(degree_stats(std::vector<Degree>{0, 0}, 0)), ComputationError);
}

TEST_CASE("uncorrelated NIP") {
  for (std::size_t n : {2, 4, 10}) {
    const Graph k = complete_graph(n);
    for (double v : nip_node_uncorrelated(k, degree_stats(k))) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
  }
  const Graph r = ring(6);
  for (double v : nip_node_uncorrelated(r, degree_stats(r))) CHECK(v == 0.5);

  const Pipeline p(worked_example());
  const auto shares = ip(p.graph);
  const auto nip = nip_node_uncorrelated(p.graph, p.stats);
  const double network = nip_network(p.stats);
  for (std::size_t i = 0; i < nip.size(); ++i) CHECK(nip[i] == shares[i] * network);
}

TEST_CASE("correlated NIP of the worked example") {
  const Pipeline p(worked_example());
  const auto nip = nip_node_correlated(p.graph, p.knn, Scale::Normalized);
  CHECK(nip[p[4]] == 0.875);
  CHECK(nip[p[1]] == 0.75);

  const auto cls = nip_class(p.graph, p.knn, Scale::Normalized);
  CHECK(cls.at(3).value == 0.75);
  CHECK(cls.at(4).value == 0.875);
  CHECK(cls.at(2).value == 0.5);

  const auto raw = nip_node_correlated(p.graph, p.knn, Scale::Raw);
  CHECK(raw[p[4]] == 14.0);
}

TEST_CASE("isolated nodes score zero and are unclassified") {
  const std::vector<IndexEdge> edges{{0, 1}, {1, 2}};
  const Pipeline p(Graph::from_index_edges(4, edges, PreprocessMode::Simple));
  const auto s = nip_scores(p.graph, p.stats, p.knn, Scale::Raw);
  CHECK(s.ip[3] == 0.0);
  CHECK(s.node[3] == 0.0);
  CHECK(s.classification[3] == Performance::Undefined);
}

TEST_CASE("path graph: middle node outperforms its degree class") {
  const Pipeline p(path(5));
  const auto s = nip_scores(p.graph, p.stats, p.knn, Scale::Normalized);
  CHECK(s.classification[p[3]] == Performance::Over);
  CHECK(s.classification[p[2]] == Performance::Under);
  CHECK(s.classification[p[4]] == Performance::Under);
  CHECK(s.by_class.at(2).value == doctest::Approx(2.0 * (1.0 + 5.0 / 3.0) / 8.0));
}

TEST_CASE("worked example: equal-knn members of a class are at par") {
  const Pipeline p(worked_example());
  const auto s = nip_scores(p.graph, p.stats, p.knn, Scale::Normalized);
  CHECK(s.classification[p[1]] == Performance::AtPar);
  CHECK(s.classification[p[2]] == Performance::AtPar);
  CHECK(s.classification[p[4]] == Performance::AtPar);
}

TEST_CASE("regular graphs are all at par and both NIP forms coincide") {
  for (const Graph& g : {ring(7), complete_graph(5), complete_graph(8)}) {
    const Pipeline p(g);
    const auto s = nip_scores(p.graph, p.stats, p.knn, Scale::Normalized);
    const auto uncorrelated = nip_node_uncorrelated(p.graph, p.stats);
    for (std::size_t i = 0; i < s.node.size(); ++i) {
      CHECK(s.classification[i] == Performance::AtPar);
      CHECK(s.node[i] == doctest::Approx(uncorrelated[i]).epsilon(1e-14));
    }
  }
}

TEST_CASE("a degree-3 node can outrank a degree-4 node") {
  // Node 0 touches three hubs of degree 6; node 1 touches four leaves.
  std::vector<IndexEdge> edges{{0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}};
  NodeIndex next = 9;
  for (NodeIndex hub : {2u, 3u, 4u})
    for (int k = 0; k < 5; ++k) edges.push_back({hub, next++});
  const Pipeline p(Graph::from_index_edges(next, edges, PreprocessMode::Simple));
  const auto nip = nip_node_correlated(p.graph, p.knn, Scale::Normalized);
  REQUIRE(p.graph.degree(0) == 3);
  REQUIRE(p.graph.degree(1) == 4);
  CHECK(nip[0] > nip[1]);
}

TEST_CASE("NIP identities on random graphs") {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + gen() % 12;
    const bool multi = trial % 3 == 0;
    const auto edges = random_edges(gen, n, 0.15 + 0.7 * (gen() % 100) / 100.0, multi);
    const Graph g = Graph::from_index_edges(n, edges, multi ? PreprocessMode::RawMultiset : PreprocessMode::Simple);
    if (g.edge_count() == 0) continue;
    const Pipeline p(g);
    const double slots = 2.0 * g.edge_count();

    const auto shares = ip(g);
    CHECK(std::fabs(std::accumulate(shares.begin(), shares.end(), 0.0) - 1.0) <= 1e-9);
    const double network = nip_network(p.stats);
    CHECK(network > 1.0);

    const auto norm = nip_node_correlated(g, p.knn, Scale::Normalized);
    const auto raw = nip_node_correlated(g, p.knn, Scale::Raw);
    CHECK(std::accumulate(norm.begin(), norm.end(), 0.0) >= 1.0 - 1e-12);
    for (std::size_t i = 0; i < n; ++i) CHECK(norm[i] * slots == doctest::Approx(raw[i]).epsilon(1e-15));

    // Class baseline equals the mean of members' NIP, built from the oracle.
    const auto m = matrix_of(n, g.edges());
    std::map<std::int64_t, std::pair<int, double>> acc;
    for (std::size_t i = 0; i < n; ++i) {
      if (auto k = m.knn(i)) {
        auto& slot = acc[m.degree(i)];
        ++slot.first;
        slot.second += m.degree(i) * (1.0 + *k) / slots;
      }
    }
    const auto cls = nip_class(g, p.knn, Scale::Normalized);
    REQUIRE(cls.size() == acc.size());
    for (const auto& [d, a] : acc)
      CHECK(cls.at(static_cast<Degree>(d)).value == doctest::Approx(a.second / a.first).epsilon(1e-12));
  }
}

TEST_CASE("classification is invariant under uniform rescaling") {
  std::mt19937_64 gen(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + gen() % 30;
    const Graph g = Graph::from_index_edges(n, random_edges(gen, n, 0.2, false), PreprocessMode::Simple);
    if (g.edge_count() == 0) continue;
    const Pipeline p(g);
    const auto degrees = g.degrees();
    const auto raw = nip_node_correlated(g, p.knn, Scale::Raw);
    const auto raw_cls = nip_class(g, p.knn, Scale::Raw);
    const auto norm = nip_node_correlated(g, p.knn, Scale::Normalized);
    const auto norm_cls = nip_class(g, p.knn, Scale::Normalized);
    CHECK(classify_performers(raw, raw_cls, degrees) == classify_performers(norm, norm_cls, degrees));
  }
}

TEST_CASE("classify_performers rejects inconsistent inputs") {
  const Pipeline p(worked_example());
  const auto nip = nip_node_correlated(p.graph, p.knn, Scale::Normalized);
  const auto cls = nip_class(p.graph, p.knn, Scale::Normalized);
  const std::vector<Degree> short_degrees{1, 2};
  CHECK_THROWS_AS(classify_performers(nip, cls, short_degrees), InputError);
  std::vector<Degree> odd = p.graph.degrees();
  odd[0] = 9;
  CHECK_THROWS_AS(classify_performers(nip, cls, odd), InputError);
}

TEST_CASE("tolerance widens the at-par band") {
  const std::vector<double> nip{1.0, 1.05, 0.96};
  const std::vector<Degree> degrees{2, 2, 2};
  const DegreeClassMap cls{{2, {3, 1.0}}};
  CHECK(classify_performers(nip, cls, degrees) ==
        std::vector<Performance>{Performance::AtPar, Performance::Over, Performance::Under});
  CHECK(classify_performers(nip, cls, degrees, 0.1) ==
        std::vector<Performance>{Performance::AtPar, Performance::AtPar, Performance::AtPar});
}
