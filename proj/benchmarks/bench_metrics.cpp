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


#include <benchmark/benchmark.h>

#include <map>

#include "nipgraph/nipgraph.hpp"

namespace {

using namespace nipgraph;

// Heavy-tailed graph reused across runs; size is the benchmark argument.
const Graph& graph_of(std::size_t n) {
  static std::map<std::size_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    const auto seq = sample_degree_sequence({PowerLawDegrees{2.5, 2, n}, 17});
    it = cache.emplace(n, configuration_model(seq, 17).graph).first;
  }
  return it->second;
}

void BM_BuildCsr(benchmark::State& state) {
  const auto edges = graph_of(static_cast<std::size_t>(state.range(0))).edges();
  const auto n = graph_of(static_cast<std::size_t>(state.range(0))).node_count();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Graph::from_index_edges(n, edges, PreprocessMode::Simple));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(edges.size()));
}

void BM_KnnNode(benchmark::State& state) {
  const Graph& g = graph_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(knn_node(g, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}

void BM_Assortativity(benchmark::State& state) {
  const Graph& g = graph_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assortativity(g, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}

void BM_NipScores(benchmark::State& state) {
  const Graph& g = graph_of(static_cast<std::size_t>(state.range(0)));
  const auto stats = degree_stats(g);
  const auto knn = knn_profile(g, stats, 1);
  for (auto _ : state) benchmark::DoNotOptimize(nip_scores(g, stats, knn, Scale::Normalized));
}

void BM_ConfigurationModel(benchmark::State& state) {
  const auto seq = sample_degree_sequence({PowerLawDegrees{2.5, 2, static_cast<std::size_t>(state.range(0))}, 3});
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(configuration_model(seq, seed++, SimplePolicy::Erase));
}

void BM_ErdosGallai(benchmark::State& state) {
  const auto seq = sample_degree_sequence({PowerLawDegrees{2.5, 2, static_cast<std::size_t>(state.range(0))}, 5});
  for (auto _ : state) benchmark::DoNotOptimize(check_graphical(seq));
}

}  // namespace

BENCHMARK(BM_BuildCsr)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_KnnNode)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_Assortativity)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_NipScores)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_ConfigurationModel)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_ErdosGallai)->Arg(100'000);

BENCHMARK_MAIN();
