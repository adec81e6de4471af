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

#include "cli/commands.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "cli/output.hpp"
#include "cli/spec_json.hpp"
#include "nipgraph/congen.hpp"
#include "nipgraph/edge_list.hpp"
#include "nipgraph/error.hpp"
#include "nipgraph/nip.hpp"
#include "nipgraph/rng.hpp"

namespace nipgraph::app {

namespace {

constexpr std::string_view kVersion = "0.1.0";

struct Analysis {
  Graph graph;
  DegreeStats stats;
  KnnProfile knn;
};

const std::filesystem::path& single_input(const RunConfig& config) {
  if (config.input_paths.size() != 1)
    throw InputError(std::string(to_string(config.command)) + " expects exactly one input file");
  return config.input_paths.front();
}

Analysis analyze(const RunConfig& config) {
  Analysis a;
  const auto& path = single_input(config);
  try {
    a.graph = load_graph(path, config.mode);
  } catch (const ParseError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  a.stats = degree_stats(a.graph, config.density_convention);
  a.knn = knn_profile(a.graph, a.stats, config.worker_count);
  return a;
}

void announce(std::ostream& out, const RunConfig& config, const Graph& g, const std::vector<std::string>& files) {
  out << to_string(config.command) << ": n=" << g.node_count() << " m=" << g.edge_count()
      << " mode=" << to_string(g.mode()) << "; wrote";
  for (const auto& f : files) out << ' ' << f;
  out << '\n';
}

}  // namespace

nlohmann::ordered_json summary_json(const Graph& graph, const DegreeStats& stats,
                                    const KnnProfile& knn, const RunConfig& config) {
  nlohmann::ordered_json j;
  j["n"] = graph.node_count();
  j["m"] = graph.edge_count();
  j["mean_degree"] = stats.mean_degree;
  j["mean_square_degree"] = stats.mean_square_degree;
  j["variance"] = stats.variance;
  j["density"] = stats.density;
  j["density_convention"] = to_string(stats.density_convention);
  j["knn_global"] = knn.global;
  j["assortativity"] = knn.assortativity ? nlohmann::ordered_json(*knn.assortativity)
                                         : nlohmann::ordered_json(nullptr);
  j["nip_network"] = 1.0 + knn.global;
  j["scale"] = to_string(config.scale);
  j["mode"] = to_string(graph.mode());
  j["config"] = echo(config);
  return j;
}

void write_run_metadata(const RunConfig& config, const std::vector<std::string>& outputs,
                        nlohmann::ordered_json extra) {
  nlohmann::ordered_json j;
  j["tool"] = "nipgraph";
  j["version"] = kVersion;
  j["config"] = echo(config);
  j["outputs"] = outputs;
  for (auto& [k, v] : extra.items()) j[k] = v;
  write_json(config.output_dir / "run_metadata.json", j);
}

int cmd_stats(const RunConfig& config, std::ostream& out) {
  const Analysis a = analyze(config);

  std::map<Degree, std::size_t> histogram;
  for (Degree d : a.stats.degree_sequence) ++histogram[d];
  CsvWriter csv;
  csv.row({"degree", "count"});
  for (const auto& [d, count] : histogram) csv.row({std::to_string(d), std::to_string(count)});

  write_json(config.output_dir / "summary.json", summary_json(a.graph, a.stats, a.knn, config));
  write_file(config.output_dir / "degree_dist.csv", csv.str());
  const std::vector<std::string> files{"summary.json", "degree_dist.csv", "run_metadata.json"};
  write_run_metadata(config, files);
  announce(out, config, a.graph, files);
  return kSuccess;
}

int cmd_knn(const RunConfig& config, std::ostream& out) {
  const Analysis a = analyze(config);

  CsvWriter nodes;
  nodes.row({"node_label", "degree", "knn_i"});
  for (NodeIndex i = 0; i < a.graph.node_count(); ++i)
    nodes.row({std::to_string(a.graph.label(i)), std::to_string(a.graph.degree(i)), format_float(a.knn.node[i])});

  CsvWriter classes;
  classes.row({"degree", "class_size", "knn_d"});
  for (const auto& [d, c] : a.knn.by_class)
    classes.row({std::to_string(d), std::to_string(c.class_size), format_float(c.value)});

  write_file(config.output_dir / "knn_node.csv", nodes.str());
  write_file(config.output_dir / "knn_class.csv", classes.str());
  write_json(config.output_dir / "summary.json", summary_json(a.graph, a.stats, a.knn, config));
  const std::vector<std::string> files{"knn_node.csv", "knn_class.csv", "summary.json", "run_metadata.json"};
  write_run_metadata(config, files);
  announce(out, config, a.graph, files);
  return kSuccess;
}

int cmd_nip(const RunConfig& config, std::ostream& out) {
  const Analysis a = analyze(config);
  const NipScores s = nip_scores(a.graph, a.stats, a.knn, config.scale, config.tolerance);
  const std::string scale{to_string(config.scale)};

  CsvWriter nodes;
  nodes.row({"node_label", "degree", "knn_i", "ip", "nip", "class_nip", "classification", "scale"});
  for (NodeIndex i = 0; i < a.graph.node_count(); ++i) {
    const Degree d = a.graph.degree(i);
    std::optional<double> baseline;
    if (auto it = s.by_class.find(d); it != s.by_class.end()) baseline = it->second.value;
    nodes.row({std::to_string(a.graph.label(i)), std::to_string(d), format_float(a.knn.node[i]),
               format_float(s.ip[i]), format_float(s.node[i]), format_float(baseline),
               to_string(s.classification[i]), scale});
  }

  CsvWriter classes;
  classes.row({"degree", "class_size", "nip_d"});
  for (const auto& [d, c] : s.by_class)
    classes.row({std::to_string(d), std::to_string(c.class_size), format_float(c.value)});

  write_file(config.output_dir / "nip_node.csv", nodes.str());
  write_file(config.output_dir / "nip_class.csv", classes.str());
  write_json(config.output_dir / "summary.json", summary_json(a.graph, a.stats, a.knn, config));
  const std::vector<std::string> files{"nip_node.csv", "nip_class.csv", "summary.json", "run_metadata.json"};

  std::size_t over = 0, under = 0;
  for (auto c : s.classification) {
    over += c == Performance::Over;
    under += c == Performance::Under;
  }
  nlohmann::ordered_json extra;
  extra["classification_counts"] = {{"over", over}, {"under", under}};
  write_run_metadata(config, files, extra);
  announce(out, config, a.graph, files);
  return kSuccess;
}

int cmd_congen(const RunConfig& config, std::ostream& out) {
  std::string text;
  if (config.spec_json) {
    text = *config.spec_json;
  } else if (config.spec_path) {
    std::ifstream in(*config.spec_path, std::ios::binary);
    if (!in) throw InputError("cannot open " + config.spec_path->string());
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    throw InputError("congen needs --spec FILE or --spec-json TEXT");
  }
  DegreeSequenceSpec spec = parse_spec(text);
  if (config.seed) spec.seed = *config.seed;

  const GeneratedGraph generated = generate(spec);

  std::ostringstream dump;
  write_edge_dump(dump, generated.graph);
  write_file(config.output_dir / "graph.edges", dump.str());

  nlohmann::ordered_json meta;
  meta["spec"] = spec_to_json(spec);
  meta["rng"] = Rng::kAlgorithm;
  meta["matching_seed"] = matching_seed(spec.seed);
  meta["node_count"] = generated.graph.node_count();
  meta["edge_count"] = generated.graph.edge_count();
  meta["mode"] = to_string(generated.graph.mode());
  meta["attempts"] = generated.attempts;
  meta["erased_edges"] = generated.erased_edges;
  meta["config"] = echo(config);
  write_json(config.output_dir / "graph.meta.json", meta);

  announce(out, config, generated.graph, {"graph.edges", "graph.meta.json"});
  return kSuccess;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Stats: return cmd_stats(config, out);
      case Command::Knn: return cmd_knn(config, out);
      case Command::Nip: return cmd_nip(config, out);
      case Command::Congen: return cmd_congen(config, out);
      case Command::Report: return cmd_report(config, out);
    }
  } catch (const InputError& e) {
    err << "nipgraph " << to_string(config.command) << ": input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "nipgraph " << to_string(config.command) << ": error: " << e.what() << '\n';
    return kComputationError;
  }
  return kComputationError;
}

}  // namespace nipgraph::app
