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
#include <optional>
#include <string_view>

namespace nipgraph {

using NodeIndex = std::uint32_t;
using NodeLabel = std::int64_t;
using Degree = std::uint32_t;

/// Edge between two external node ids, as read from an edge-list file.
struct LabelEdge {
  NodeLabel source;
  NodeLabel target;
};

/// Edge between two internal (contiguous) node indices.
struct IndexEdge {
  NodeIndex source;
  NodeIndex target;

  friend bool operator==(const IndexEdge&, const IndexEdge&) = default;
  friend auto operator<=>(const IndexEdge&, const IndexEdge&) = default;
};

/// How raw edge lines map onto the undirected model.
///
/// RawMultiset keeps every line as one undirected edge slot (self-loops and
/// repeated pairs included). Simple symmetrizes, drops self-loops and
/// collapses duplicates.
enum class PreprocessMode { RawMultiset, Simple };

/// Denominator used for density: Table1 is n(n-1), Half is n(n-1)/2.
enum class DensityConvention { Table1, Half };

/// Normalized scores carry the 1/2m factor, Raw ones do not.
enum class Scale { Normalized, Raw };

std::string_view to_string(PreprocessMode mode);
std::string_view to_string(DensityConvention convention);
std::string_view to_string(Scale scale);

std::optional<PreprocessMode> parse_preprocess_mode(std::string_view text);
std::optional<DensityConvention> parse_density_convention(std::string_view text);
std::optional<Scale> parse_scale(std::string_view text);

}  // namespace nipgraph
