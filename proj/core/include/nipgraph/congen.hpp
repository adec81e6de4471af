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
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "nipgraph/error.hpp"
#include "nipgraph/graph.hpp"
#include "nipgraph/types.hpp"

namespace nipgraph {

struct ExplicitDegrees {
  std::vector<Degree> degrees;
};

/// i.i.d. Poisson(mean) degrees for `node_count` nodes.
struct PoissonDegrees {
  double mean = 0.0;
  std::size_t node_count = 0;
};

/// Discrete power law P(d) ~ d^-exponent truncated to [min_degree, node_count - 1].
struct PowerLawDegrees {
  double exponent = 0.0;
  Degree min_degree = 1;
  std::size_t node_count = 0;
};

using DegreeSource = std::variant<ExplicitDegrees, PoissonDegrees, PowerLawDegrees>;

/// MULTIGRAPH keeps self-loops and parallel edges, ERASE removes them after
/// matching, REJECT rematches until the result is simple.
enum class SimplePolicy { Multigraph, Erase, Reject };

std::string_view to_string(SimplePolicy policy);
std::optional<SimplePolicy> parse_simple_policy(std::string_view text);

inline constexpr std::size_t kDefaultMaxAttempts = 1000;

struct DegreeSequenceSpec {
  DegreeSource source;
  std::uint64_t seed = 0;
  SimplePolicy simple_policy = SimplePolicy::Multigraph;
  std::size_t max_attempts = kDefaultMaxAttempts;  // REJECT only
};

/// Throws InputError on invalid parameters (mean <= 0, exponent <= 1,
/// empty explicit list, power-law support empty, zero attempts).
void validate(const DegreeSequenceSpec& spec);

/// Erdős–Gallai outcome for a degree sequence.
struct Graphicality {
  bool even_sum = true;
  /// First k (1-based, over the non-increasing sort) whose inequality
  /// sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k) fails.
  std::optional<std::size_t> violated_prefix;

  bool graphical() const noexcept { return even_sum && !violated_prefix; }
};

Graphicality check_graphical(std::span<const Degree> sequence);
bool is_graphical(std::span<const Degree> sequence);

/// Draws a degree sequence from `spec.source` with Rng(spec.seed). An odd
/// total is repaired by redrawing uniformly chosen entries; throws
/// ComputationError if parity cannot be fixed within a bounded number of
/// redraws. Explicit sequences are returned unchanged.
std::vector<Degree> sample_degree_sequence(const DegreeSequenceSpec& spec);

/// Raised by REJECT when the sequence has no simple realization.
class NotGraphicalError : public ComputationError {
 public:
  NotGraphicalError(const std::string& what, Graphicality result)
      : ComputationError(what), result_(result) {}
  const Graphicality& result() const noexcept { return result_; }

 private:
  Graphicality result_;
};

/// Raised by REJECT when every attempt produced a self-loop or parallel edge.
class RejectionExhaustedError : public ComputationError {
 public:
  explicit RejectionExhaustedError(std::size_t attempts);
  std::size_t attempts() const noexcept { return attempts_; }

 private:
  std::size_t attempts_;
};

struct GeneratedGraph {
  Graph graph;
  std::size_t attempts = 1;
  std::uint64_t erased_edges = 0;
};

/// Stub matching: node i contributes d_i stubs, the stub list is shuffled
/// with Rng(seed) and consecutive stubs are paired.
///
/// Multigraph returns a RawMultiset graph whose degrees equal the input.
/// Erase returns a Simple graph and counts the removed slots. Reject checks
/// graphicality first (NotGraphicalError), then reshuffles until simple or
/// throws RejectionExhaustedError. Odd totals throw InputError.
GeneratedGraph configuration_model(std::span<const Degree> sequence, std::uint64_t seed,
                                   SimplePolicy policy = SimplePolicy::Multigraph,
                                   std::size_t max_attempts = kDefaultMaxAttempts);

/// Seed used for matching after sampling from `spec`.
std::uint64_t matching_seed(std::uint64_t spec_seed);

/// sample_degree_sequence followed by configuration_model(matching_seed).
GeneratedGraph generate(const DegreeSequenceSpec& spec);

/// `count` independent multigraph samples of one sequence; sample i uses
/// derive_seed(seed, i), so the result does not depend on `workers`.
std::vector<Graph> configuration_model_ensemble(std::span<const Degree> sequence,
                                                std::uint64_t seed, std::size_t count,
                                                unsigned workers = 1);

}  // namespace nipgraph
