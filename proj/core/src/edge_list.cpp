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

#include "nipgraph/edge_list.hpp"

#include <zlib.h>

#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>

#include "nipgraph/error.hpp"

namespace nipgraph {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view trim_left(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return s.substr(i);
}

NodeLabel parse_id(std::string_view& rest, std::size_t line_no) {
  rest = trim_left(rest);
  std::size_t len = 0;
  while (len < rest.size() && !is_space(rest[len])) ++len;
  const std::string_view token = rest.substr(0, len);
  if (token.empty()) throw ParseError(line_no, "expected two node ids");

  NodeLabel value = 0;
  const char* first = token.data();
  if (token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line_no, "invalid node id '" + std::string(token) + "'");
  rest.remove_prefix(len);
  return value;
}

std::string read_gzip(const std::filesystem::path& path) {
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) throw InputError("cannot open " + path.string());
  std::string data;
  char buffer[1 << 16];
  int got = 0;
  while ((got = gzread(file, buffer, sizeof buffer)) > 0) data.append(buffer, static_cast<std::size_t>(got));
  const bool failed = got < 0;
  gzclose(file);
  if (failed) throw InputError("corrupt gzip stream in " + path.string());
  return data;
}

}  // namespace

std::vector<LabelEdge> parse_edge_list(std::string_view text) {
  std::vector<LabelEdge> edges;
  edges.reserve(text.size() / 16);
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    line = trim_left(line);
    if (line.empty() || line.front() == '#') continue;

    const NodeLabel source = parse_id(line, line_no);
    const NodeLabel target = parse_id(line, line_no);
    if (!trim_left(line).empty())
      throw ParseError(line_no, "unexpected trailing token '" + std::string(trim_left(line)) + "'");
    edges.push_back({source, target});
  }
  return edges;
}

std::vector<LabelEdge> read_edge_list(std::istream& in) {
  const std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_edge_list(data);
}

std::vector<LabelEdge> read_edge_list_file(const std::filesystem::path& path) {
  if (path.extension() == ".gz") return parse_edge_list(read_gzip(path));
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  return read_edge_list(in);
}

Graph load_graph(const std::filesystem::path& path, PreprocessMode mode) {
  const auto edges = read_edge_list_file(path);
  if (edges.empty()) throw InputError(path.string() + ": no edges after skipping comments");
  return Graph::from_label_edges(edges, mode);
}

void write_edge_dump(std::ostream& out, const Graph& graph) {
  out << "# Nodes: " << graph.node_count() << " Edges: " << graph.edge_count() << '\n';
  out << "# Mode: " << to_string(graph.mode()) << '\n';
  for (const auto& e : graph.edges())
    out << graph.label(e.source) << '\t' << graph.label(e.target) << '\n';
}

}  // namespace nipgraph
