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

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "cli/table1.hpp"
#include "nipgraph/edge_list.hpp"
#include "nipgraph/error.hpp"

namespace nipgraph::app {

namespace {

struct ReportRow {
  std::string name;
  PreprocessMode mode = PreprocessMode::RawMultiset;
  bool computed = false;
  std::string note;
  InstanceStats stats;
  double identity_residual = 0.0;
  std::vector<ColumnCheck> checks;  // empty without a reference row
};

ReportRow compute_row(const std::filesystem::path& path, PreprocessMode mode, const RunConfig& config,
                      std::optional<HighlightCheck>* highlight) {
  ReportRow row;
  row.name = instance_name(path);
  row.mode = mode;
  if (!std::filesystem::exists(path)) {
    row.note = "file not found";
    return row;
  }
  Graph g;
  try {
    g = load_graph(path, mode);
  } catch (const InputError& e) {
    row.note = e.what();
    return row;
  }
  const DegreeStats s = degree_stats(g, config.density_convention);
  const double knn = knn_global(s);

  row.computed = true;
  row.stats = {row.name, g.node_count(), g.edge_count(), s.density, s.mean_degree,
               s.mean_square_degree, s.variance, assortativity(g, config.worker_count), 1.0 + knn};
  row.identity_residual = row.stats.nip_network - (1.0 + s.mean_square_degree / s.mean_degree);
  if (const auto* ref = find_reference(row.name)) row.checks = compare(row.stats, *ref);

  if (highlight && row.name == "amazon0601")
    *highlight = check_highlighted_node(g, 44, 192.61, config.worker_count);
  return row;
}

std::string pass_fail(const std::vector<ColumnCheck>& checks) {
  if (checks.empty()) return "";
  for (const auto& c : checks)
    if (!c.pass) return "FAIL";
  return "PASS";
}

std::string check_diff(const std::vector<ColumnCheck>& checks, std::string_view column) {
  for (const auto& c : checks)
    if (c.column == column) return format_float(c.diff);
  return "";
}

std::string text_table(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  char line[512];
  std::snprintf(line, sizeof line, "%-12s %-13s %-8s %9s %10s %10s %8s %9s %9s %7s %8s %s\n", "instance",
                "mode", "status", "n", "m", "density", "<d>", "<d^2>", "var", "r", "NIP_N", "vs_ref");
  out << line;
  for (const auto& r : rows) {
    if (!r.computed) {
      std::snprintf(line, sizeof line, "%-12s %-13s %-8s (%s)\n", r.name.c_str(),
                    std::string(to_string(r.mode)).c_str(), "SKIPPED", r.note.c_str());
      out << line;
      continue;
    }
    const auto& s = r.stats;
    std::snprintf(line, sizeof line, "%-12s %-13s %-8s %9llu %10llu %10.3g %8.3f %9.3f %9.2f %7s %8.3f %s\n",
                  r.name.c_str(), std::string(to_string(r.mode)).c_str(), "OK",
                  static_cast<unsigned long long>(s.n), static_cast<unsigned long long>(s.m), s.density,
                  s.mean_degree, s.mean_square_degree, s.variance,
                  s.assortativity ? format_float(std::round(*s.assortativity * 1000.0) / 1000.0).c_str() : "undef",
                  s.nip_network, pass_fail(r.checks).c_str());
    out << line;
  }
  return out.str();
}

}  // namespace

int cmd_report(const RunConfig& config, std::ostream& out) {
  if (config.input_paths.empty()) throw InputError("report expects at least one instance path");

  std::vector<ReportRow> rows;
  std::optional<HighlightCheck> highlight;
  for (const auto& path : config.input_paths) {
    rows.push_back(compute_row(path, config.mode, config, config.mode == PreprocessMode::RawMultiset ? &highlight : nullptr));
    if (config.both_modes) {
      const auto other = config.mode == PreprocessMode::RawMultiset ? PreprocessMode::Simple : PreprocessMode::RawMultiset;
      rows.push_back(compute_row(path, other, config, other == PreprocessMode::RawMultiset ? &highlight : nullptr));
    }
  }

  CsvWriter csv;
  csv.row({"instance", "mode", "status", "n", "m", "density", "mean_degree", "mean_square_degree", "variance",
           "assortativity", "nip_network", "nip_identity_residual", "diff_n", "diff_m", "reldiff_density",
           "reldiff_mean_degree", "reldiff_mean_square_degree", "reldiff_variance", "absdiff_assortativity",
           "reldiff_nip_network", "vs_reference", "note"});
  std::size_t computed = 0;
  for (const auto& r : rows) {
    const std::string mode{to_string(r.mode)};
    if (!r.computed) {
      csv.row({r.name, mode, "SKIPPED", "", "", "", "", "", "", "", "", "", "", "", "", "", "", "", "", "", "", r.note});
      continue;
    }
    ++computed;
    const auto& s = r.stats;
    csv.row({r.name, mode, "OK", std::to_string(s.n), std::to_string(s.m), format_float(s.density),
             format_float(s.mean_degree), format_float(s.mean_square_degree), format_float(s.variance),
             format_float(s.assortativity), format_float(s.nip_network), format_float(r.identity_residual),
             check_diff(r.checks, "n"), check_diff(r.checks, "m"), check_diff(r.checks, "density"),
             check_diff(r.checks, "mean_degree"), check_diff(r.checks, "mean_square_degree"),
             check_diff(r.checks, "variance"), check_diff(r.checks, "assortativity"),
             check_diff(r.checks, "nip_network"), pass_fail(r.checks), ""});
  }

  const std::string table = text_table(rows);
  write_file(config.output_dir / "table1.csv", csv.str());
  write_file(config.output_dir / "table1.txt", table);
  std::vector<std::string> files{"table1.csv", "table1.txt", "run_metadata.json"};

  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  if (highlight) {
    CsvWriter h;
    h.row({"instance", "degree", "target_nip_raw", "candidates", "best_node_label", "best_knn_i", "best_nip_raw",
           "rel_diff", "within_2pct"});
    h.row({"amazon0601", std::to_string(highlight->degree), format_float(highlight->target),
           std::to_string(highlight->candidates),
           highlight->best_label ? std::to_string(*highlight->best_label) : std::string(),
           highlight->best_label ? format_float(highlight->best_knn) : std::string(),
           highlight->best_label ? format_float(highlight->best_nip) : std::string(),
           highlight->best_label ? format_float(highlight->rel_diff) : std::string(),
           highlight->within(0.02) ? "yes" : "no"});
    write_file(config.output_dir / "highlight_node.csv", h.str());
    files.insert(files.end() - 1, "highlight_node.csv");
  }
  write_run_metadata(config, files, extra);

  out << table;
  if (computed == 0) return kPartialReport;
  return kSuccess;
}

}  // namespace nipgraph::app
