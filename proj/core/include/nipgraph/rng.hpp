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

#include <cstdint>
#include <random>
#include <string_view>

namespace nipgraph {

/// Seedable generator with a fixed, platform-independent output stream.
///
/// The engine is std::mt19937_64, whose sequence is pinned by the standard.
/// The standard distributions are implementation-defined, so bounded
/// integers and unit doubles are derived here from raw engine output.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/lemire-bounded/53bit-unit";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform double in [0, 1).
  double uniform01();

  /// Poisson(mean) variate; mean > 0.
  std::uint64_t poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer over (seed, index); used for per-sample seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace nipgraph
