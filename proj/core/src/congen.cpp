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

#include "nipgraph/congen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "nipgraph/parallel.hpp"
#include "nipgraph/rng.hpp"

namespace nipgraph {

std::string_view to_string(SimplePolicy policy) {
  switch (policy) {
    case SimplePolicy::Multigraph: return "multigraph";
    case SimplePolicy::Erase: return "erase";
    case SimplePolicy::Reject: return "reject";
  }
  return "multigraph";
}

std::optional<SimplePolicy> parse_simple_policy(std::string_view text) {
  if (text == "multigraph") return SimplePolicy::Multigraph;
  if (text == "erase") return SimplePolicy::Erase;
  if (text == "reject") return SimplePolicy::Reject;
  return std::nullopt;
}

RejectionExhaustedError::RejectionExhaustedError(std::size_t attempts)
    : ComputationError("no simple graph after " + std::to_string(attempts) + " matching attempts"),
      attempts_(attempts) {}

void validate(const DegreeSequenceSpec& spec) {
  if (spec.simple_policy == SimplePolicy::Reject && spec.max_attempts == 0)
    throw InputError("max_attempts must be at least 1");
  std::visit(
      [](const auto& src) {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, ExplicitDegrees>) {
          if (src.degrees.empty()) throw InputError("explicit degree sequence is empty");
        } else if constexpr (std::is_same_v<T, PoissonDegrees>) {
          if (!(src.mean > 0.0) || !std::isfinite(src.mean))
            throw InputError("poisson mean must be positive");
          if (src.node_count == 0) throw InputError("node count must be positive");
        } else {
          if (!(src.exponent > 1.0) || !std::isfinite(src.exponent))
            throw InputError("power-law exponent must exceed 1");
          if (src.min_degree < 1) throw InputError("power-law min_degree must be at least 1");
          if (src.node_count < 2 || src.min_degree > src.node_count - 1)
            throw InputError("power-law support [min_degree, n-1] is empty");
        }
      },
      spec.source);
}

Graphicality check_graphical(std::span<const Degree> sequence) {
  Graphicality result;
  std::vector<std::uint64_t> d(sequence.begin(), sequence.end());
  std::sort(d.begin(), d.end(), std::greater<>());
  const std::size_t n = d.size();

  const std::uint64_t total = std::accumulate(d.begin(), d.end(), std::uint64_t{0});
  result.even_sum = total % 2 == 0;

  // suffix[i] = d[i] + ... + d[n-1]
  std::vector<std::uint64_t> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + d[i];

  std::uint64_t prefix = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    prefix += d[k - 1];
    // Positions >= k with d >= k contribute k each, the rest their degree.
    const auto first_small = static_cast<std::size_t>(
        std::partition_point(d.begin(), d.end(), [k](std::uint64_t x) { return x >= k; }) - d.begin());
    const std::size_t split = std::max(first_small, k);
    const std::uint64_t rhs = static_cast<std::uint64_t>(k) * (k - 1) +
                              static_cast<std::uint64_t>(k) * (split - k) + suffix[split];
    if (prefix > rhs) {
      result.violated_prefix = k;
      break;
    }
  }
  return result;
}

bool is_graphical(std::span<const Degree> sequence) { return check_graphical(sequence).graphical(); }

namespace {

class PowerLawSampler {
 public:
  PowerLawSampler(double exponent, Degree min_degree, Degree max_degree) : min_(min_degree) {
    cdf_.reserve(max_degree - min_degree + 1);
    double total = 0.0;
    for (Degree d = min_degree; d <= max_degree; ++d) {
      total += std::pow(static_cast<double>(d), -exponent);
      cdf_.push_back(total);
    }
  }

  Degree operator()(Rng& rng) const {
    const double u = rng.uniform01() * cdf_.back();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return min_ + static_cast<Degree>(it - cdf_.begin());
  }

 private:
  Degree min_;
  std::vector<double> cdf_;
};

constexpr std::size_t kParityRedraws = 10000;

template <typename Draw>
std::vector<Degree> draw_sequence(std::size_t n, Rng& rng, Draw&& draw) {
  std::vector<Degree> seq(n);
  std::uint64_t total = 0;
  for (auto& d : seq) {
    d = draw(rng);
    total += d;
  }
  for (std::size_t attempt = 0; total % 2 != 0; ++attempt) {
    if (attempt == kParityRedraws)
      throw ComputationError("could not reach an even degree total after " +
                             std::to_string(kParityRedraws) + " redraws");
    const auto i = static_cast<std::size_t>(rng.uniform_below(n));
    total -= seq[i];
    seq[i] = draw(rng);
    total += seq[i];
  }
  return seq;
}

std::vector<IndexEdge> match_stubs(const std::vector<NodeIndex>& stubs_in, Rng& rng) {
  std::vector<NodeIndex> stubs = stubs_in;
  // Fisher-Yates on our own bounded draws keeps the stream reproducible.
  for (std::size_t i = stubs.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_below(i));
    std::swap(stubs[i - 1], stubs[j]);
  }
  std::vector<IndexEdge> edges(stubs.size() / 2);
  for (std::size_t k = 0; k < edges.size(); ++k) edges[k] = {stubs[2 * k], stubs[2 * k + 1]};
  return edges;
}

bool is_simple(std::vector<IndexEdge> edges) {
  for (auto& e : edges) {
    if (e.source == e.target) return false;
    if (e.source > e.target) std::swap(e.source, e.target);
  }
  std::sort(edges.begin(), edges.end());
  return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

}  // namespace

std::vector<Degree> sample_degree_sequence(const DegreeSequenceSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  return std::visit(
      [&rng](const auto& src) -> std::vector<Degree> {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, ExplicitDegrees>) {
          return src.degrees;
        } else if constexpr (std::is_same_v<T, PoissonDegrees>) {
          return draw_sequence(src.node_count, rng, [&src](Rng& r) {
            return static_cast<Degree>(r.poisson(src.mean));
          });
        } else {
          const PowerLawSampler sampler(src.exponent, src.min_degree,
                                        static_cast<Degree>(src.node_count - 1));
          return draw_sequence(src.node_count, rng, [&sampler](Rng& r) { return sampler(r); });
        }
      },
      spec.source);
}

GeneratedGraph configuration_model(std::span<const Degree> sequence, std::uint64_t seed,
                                   SimplePolicy policy, std::size_t max_attempts) {
  const std::uint64_t total = std::accumulate(sequence.begin(), sequence.end(), std::uint64_t{0});
  if (total % 2 != 0)
    throw InputError("degree sequence sums to " + std::to_string(total) + ", which is odd");

  if (policy == SimplePolicy::Reject) {
    if (max_attempts == 0) throw InputError("max_attempts must be at least 1");
    const auto check = check_graphical(sequence);
    if (!check.graphical())
      throw NotGraphicalError("sequence is not graphical: Erdos-Gallai inequality fails at k = " +
                                  std::to_string(*check.violated_prefix),
                              check);
  }

  std::vector<NodeIndex> stubs;
  stubs.reserve(total);
  for (std::size_t i = 0; i < sequence.size(); ++i)
    stubs.insert(stubs.end(), sequence[i], static_cast<NodeIndex>(i));

  Rng rng(seed);
  const std::size_t n = sequence.size();
  GeneratedGraph out;
  switch (policy) {
    case SimplePolicy::Multigraph: {
      const auto edges = match_stubs(stubs, rng);
      out.graph = Graph::from_index_edges(n, edges, PreprocessMode::RawMultiset);
      break;
    }
    case SimplePolicy::Erase: {
      const auto edges = match_stubs(stubs, rng);
      out.graph = Graph::from_index_edges(n, edges, PreprocessMode::Simple);
      out.erased_edges = edges.size() - out.graph.edge_count();
      break;
    }
    case SimplePolicy::Reject: {
      for (std::size_t attempt = 1;; ++attempt) {
        auto edges = match_stubs(stubs, rng);
        if (is_simple(edges)) {
          out.graph = Graph::from_index_edges(n, edges, PreprocessMode::Simple);
          out.attempts = attempt;
          break;
        }
        if (attempt == max_attempts) throw RejectionExhaustedError(attempt);
      }
      break;
    }
  }
  return out;
}

std::uint64_t matching_seed(std::uint64_t spec_seed) { return derive_seed(spec_seed, 0x6d61746368ULL); }

GeneratedGraph generate(const DegreeSequenceSpec& spec) {
  const auto sequence = sample_degree_sequence(spec);
  return configuration_model(sequence, matching_seed(spec.seed), spec.simple_policy, spec.max_attempts);
}

std::vector<Graph> configuration_model_ensemble(std::span<const Degree> sequence,
                                                std::uint64_t seed, std::size_t count,
                                                unsigned workers) {
  const std::uint64_t total = std::accumulate(sequence.begin(), sequence.end(), std::uint64_t{0});
  if (total % 2 != 0)
    throw InputError("degree sequence sums to " + std::to_string(total) + ", which is odd");
  std::vector<Graph> out(count);
  parallel_for(count, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      out[i] = configuration_model(sequence, derive_seed(seed, i)).graph;
  });
  return out;
}

}  // namespace nipgraph
