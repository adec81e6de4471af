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

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "nipgraph/graph.hpp"
#include "nipgraph/types.hpp"

namespace nipgraph {

// SNAP-style edge lists: '#' comment lines and blank lines are skipped, every
// other line holds exactly two whitespace-separated integer ids.

std::vector<LabelEdge> parse_edge_list(std::string_view text);
std::vector<LabelEdge> read_edge_list(std::istream& in);

/// Reads a file from disk; paths ending in ".gz" are decompressed with zlib.
/// Throws InputError if the file cannot be opened.
std::vector<LabelEdge> read_edge_list_file(const std::filesystem::path& path);

/// Parses and builds in one step. Throws InputError when no edges remain
/// after comments are stripped.
Graph load_graph(const std::filesystem::path& path, PreprocessMode mode);

/// Writes the graph as a SNAP edge list: a short '#' header followed by one
/// line per edge slot, "label<TAB>label", in Graph::edges() order.
void write_edge_dump(std::ostream& out, const Graph& graph);

}  // namespace nipgraph
