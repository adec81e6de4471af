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

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/run_config.hpp"

using namespace nipgraph;
using namespace nipgraph::app;

namespace {

// Enum-valued flags are read as text and converted after parsing.
struct EnumFlags {
  std::string mode;
  std::string density = "table1";
  std::string scale = "normalized";

  void apply(RunConfig& c) const {
    if (!mode.empty()) c.mode = *parse_preprocess_mode(mode);
    c.density_convention = *parse_density_convention(density);
    c.scale = *parse_scale(scale);
  }
};

void add_common(CLI::App* sub, RunConfig& c, bool needs_inputs) {
  if (needs_inputs) sub->add_option("inputs", c.input_paths, "SNAP edge-list file(s); .gz accepted")->required();
  sub->add_option("-o,--output-dir", c.output_dir, "Directory for output files")->capture_default_str();
  sub->add_option("-w,--workers", c.worker_count, "Worker threads (0: all cores)")
      ->envname(std::string(kWorkersEnv))
      ->capture_default_str();
}

void add_graph_options(CLI::App* sub, EnumFlags& f) {
  sub->add_option("--mode", f.mode, "Preprocessing: raw_multiset | simple (default: raw_multiset for report, simple otherwise)")
      ->check(CLI::IsMember({"raw_multiset", "raw", "simple"}));
  sub->add_option("--density", f.density, "Density denominator: table1 | half")
      ->check(CLI::IsMember({"table1", "half"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"nipgraph: neighbour-degree statistics, information patrimony scores and configuration models"};
  cli.require_subcommand(1);

  RunConfig stats = default_config(Command::Stats);
  RunConfig knn = default_config(Command::Knn);
  RunConfig nip = default_config(Command::Nip);
  RunConfig congen = default_config(Command::Congen);
  RunConfig report = default_config(Command::Report);
  EnumFlags stats_flags, knn_flags, nip_flags, report_flags;

  auto* s = cli.add_subcommand("stats", "Degree statistics summary and degree distribution");
  add_common(s, stats, true);
  add_graph_options(s, stats_flags);

  auto* k = cli.add_subcommand("knn", "Per-node and per-degree mean neighbour degree");
  add_common(k, knn, true);
  add_graph_options(k, knn_flags);

  auto* n = cli.add_subcommand("nip", "Information patrimony scores and performer classification");
  add_common(n, nip, true);
  add_graph_options(n, nip_flags);
  n->add_option("--scale", nip_flags.scale, "normalized | raw")
      ->check(CLI::IsMember({"normalized", "raw"}))
      ->capture_default_str();
  n->add_option("--tolerance", nip.tolerance, "Relative at-par band")->capture_default_str();

  auto* g = cli.add_subcommand("congen", "Configuration-model graph from a degree-sequence spec");
  add_common(g, congen, false);
  auto* spec_file = g->add_option("--spec", congen.spec_path, "Spec JSON file");
  auto* spec_text = g->add_option("--spec-json", congen.spec_json, "Spec JSON text");
  spec_file->excludes(spec_text);
  std::uint64_t seed = 0;
  auto* seed_opt = g->add_option("--seed", seed, "Override the spec's seed");

  auto* r = cli.add_subcommand("report", "Reproduce the Amazon instance statistics table");
  add_common(r, report, true);
  add_graph_options(r, report_flags);
  r->add_flag("--both-modes", report.both_modes, "Also compute each instance in the other mode");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? kSuccess : kInputError;
  }
  if (seed_opt->count() > 0) congen.seed = seed;
  stats_flags.apply(stats);
  knn_flags.apply(knn);
  nip_flags.apply(nip);
  report_flags.apply(report);

  const RunConfig* chosen = nullptr;
  if (s->parsed()) chosen = &stats;
  if (k->parsed()) chosen = &knn;
  if (n->parsed()) chosen = &nip;
  if (g->parsed()) chosen = &congen;
  if (r->parsed()) chosen = &report;
  return run(*chosen, std::cout, std::cerr);
}
