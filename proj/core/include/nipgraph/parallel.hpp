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

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace nipgraph {

/// Resolves a requested worker count; 0 means "use the hardware".
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into at most `workers` contiguous ranges and runs
/// `body(begin, end)` on each. Range boundaries depend only on `count` and
/// `workers`, and each index is visited by exactly one call.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
  const std::size_t parts = std::min<std::size_t>(resolve_workers(workers), count);
  if (parts <= 1) {
    if (count > 0) body(std::size_t{0}, count);
    return;
  }
  const std::size_t chunk = (count + parts - 1) / parts;
  std::vector<std::thread> threads;
  threads.reserve(parts);
  for (std::size_t begin = 0; begin < count; begin += chunk) {
    const std::size_t end = std::min(count, begin + chunk);
    threads.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace nipgraph
