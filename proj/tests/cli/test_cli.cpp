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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "cli/run_config.hpp"
#include "cli/spec_json.hpp"
#include "fixtures.hpp"
#include "nipgraph/nipgraph.hpp"

using namespace nipgraph;
namespace fs = std::filesystem;

namespace {

// Scratch directory removed on scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("nipgraph_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path write_text(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

fs::path worked_example_file(const fs::path& dir) {
  std::string text = "# worked example\n";
  for (const auto& e : testing::worked_example_edges())
    text += std::to_string(e.source) + "\t" + std::to_string(e.target) + "\n";
  return write_text(dir / "fig.txt", text);
}

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(const app::RunConfig& c) {
  std::ostringstream out, err;
  const int code = app::run(c, out, err);
  return {code, out.str(), err.str()};
}

app::RunConfig config(app::Command command, const fs::path& input, const fs::path& out_dir) {
  app::RunConfig c = app::default_config(command);
  if (!input.empty()) c.input_paths = {input};
  c.output_dir = out_dir;
  return c;
}

}  // namespace

TEST_CASE("format_float and CSV quoting") {
  CHECK(app::format_float(2.875) == "2.875");
  CHECK(app::format_float(1.0 / 3.0) == "0.333333");
  CHECK(app::format_float(std::optional<double>{}).empty());

  app::CsvWriter csv;
  csv.row({"a,b", "say \"hi\"", "plain"});
  CHECK(csv.str() == "\"a,b\",\"say \"\"hi\"\"\",plain\n");
}

TEST_CASE("nip command on the worked example") {
  TempDir t;
  const auto r = invoke(config(app::Command::Nip, worked_example_file(t.path), t.path / "out"));
  REQUIRE(r.code == app::kSuccess);

  const std::string nodes = slurp(t.path / "out" / "nip_node.csv");
  CHECK(nodes.rfind("node_label,degree,knn_i,ip,nip,class_nip,classification,scale\n", 0) == 0);
  CHECK(nodes.find("3,2,3.5,0.125,0.5625,0.5,OVER,normalized\n") != std::string::npos);
  CHECK(nodes.find("4,4,2.5,0.25,0.875,0.875,AT_PAR,normalized\n") != std::string::npos);

  const std::string classes = slurp(t.path / "out" / "nip_class.csv");
  CHECK(classes == "degree,class_size,nip_d\n2,3,0.5\n3,2,0.75\n4,1,0.875\n");

  const auto summary = nlohmann::json::parse(slurp(t.path / "out" / "summary.json"));
  CHECK(summary["knn_global"].get<double>() == doctest::Approx(2.875));
  CHECK(summary["nip_network"].get<double>() == doctest::Approx(3.875));

  const auto meta = nlohmann::json::parse(slurp(t.path / "out" / "run_metadata.json"));
  CHECK(meta["config"]["mode"] == "simple");
  CHECK_FALSE(meta["config"].contains("worker_count"));
}

TEST_CASE("raw scale multiplies by 2m") {
  TempDir t;
  auto c = config(app::Command::Nip, worked_example_file(t.path), t.path / "out");
  c.scale = Scale::Raw;
  REQUIRE(invoke(c).code == 0);
  const std::string nodes = slurp(t.path / "out" / "nip_node.csv");
  CHECK(nodes.find("3,2,3.5,0.125,9,8,OVER,raw\n") != std::string::npos);
}

TEST_CASE("stats and knn commands write their files") {
  TempDir t;
  const auto input = worked_example_file(t.path);
  REQUIRE(invoke(config(app::Command::Stats, input, t.path / "s")).code == 0);
  CHECK(slurp(t.path / "s" / "degree_dist.csv") == "degree,count\n2,3\n3,2\n4,1\n");
  REQUIRE(invoke(config(app::Command::Knn, input, t.path / "k")).code == 0);
  CHECK(slurp(t.path / "k" / "knn_class.csv") == "degree,class_size,knn_d\n2,3,3\n3,2,3\n4,1,2.5\n");
}

TEST_CASE("input errors exit 1 with a located message") {
  TempDir t;
  const auto empty = write_text(t.path / "empty.txt", "# nothing\n\n");
  auto r = invoke(config(app::Command::Stats, empty, t.path / "o"));
  CHECK(r.code == app::kInputError);
  CHECK(r.err.find("no edges") != std::string::npos);

  const auto bad = write_text(t.path / "bad.txt", "1 2\n1 x\n");
  r = invoke(config(app::Command::Stats, bad, t.path / "o"));
  CHECK(r.code == app::kInputError);
  CHECK(r.err.find("line 2") != std::string::npos);

  r = invoke(config(app::Command::Knn, t.path / "missing.txt", t.path / "o"));
  CHECK(r.code == app::kInputError);
}

TEST_CASE("graph of self-loops only fails under SIMPLE") {
  TempDir t;
  const auto loops = write_text(t.path / "loops.txt", "1 1\n");
  auto c = config(app::Command::Knn, loops, t.path / "o");
  c.mode = PreprocessMode::Simple;
  const auto r = invoke(c);
  CHECK(r.code != app::kSuccess);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("report skips missing files and exits 3 when nothing ran") {
  TempDir t;
  auto c = config(app::Command::Report, {}, t.path / "r");
  c.input_paths = {t.path / "amazon0302.txt", worked_example_file(t.path)};
  auto r = invoke(c);
  CHECK(r.code == app::kSuccess);
  CHECK(slurp(t.path / "r" / "table1.csv").find("SKIPPED") != std::string::npos);

  c.input_paths = {t.path / "amazon0302.txt", t.path / "amazon0312.txt"};
  r = invoke(c);
  CHECK(r.code == app::kPartialReport);
}

TEST_CASE("congen is deterministic and --seed overrides the spec") {
  TempDir t;
  auto c = config(app::Command::Congen, {}, t.path / "a");
  c.spec_json = R"({"source":"poisson","params":{"mean":3.0,"n":200},"seed":11,"simple_policy":"erase"})";
  REQUIRE(invoke(c).code == 0);
  c.output_dir = t.path / "b";
  REQUIRE(invoke(c).code == 0);
  CHECK(slurp(t.path / "a" / "graph.edges") == slurp(t.path / "b" / "graph.edges"));
  CHECK(slurp(t.path / "a" / "graph.meta.json") == slurp(t.path / "b" / "graph.meta.json"));

  c.output_dir = t.path / "c";
  c.seed = 12;
  REQUIRE(invoke(c).code == 0);
  CHECK(slurp(t.path / "a" / "graph.edges") != slurp(t.path / "c" / "graph.edges"));
  const auto meta = nlohmann::json::parse(slurp(t.path / "c" / "graph.meta.json"));
  CHECK(meta["spec"]["seed"] == 12);
}

TEST_CASE("congen reject names the failing Erdos-Gallai prefix") {
  TempDir t;
  auto c = config(app::Command::Congen, {}, t.path / "o");
  c.spec_json = R"({"source":"explicit","params":{"degrees":[3,3,1,1]},"seed":1,"simple_policy":"reject"})";
  const auto r = invoke(c);
  CHECK(r.code == app::kComputationError);
  CHECK(r.err.find("k = 2") != std::string::npos);

  c.spec_json = R"({"source":"explicit","params":{"degrees":[1,1,1]},"seed":1})";
  CHECK(invoke(c).code == app::kInputError);

  c.spec_json = R"({"source":"nope"})";
  CHECK(invoke(c).code == app::kInputError);
}

TEST_CASE("spec JSON round trip") {
  const auto spec = app::parse_spec(
      R"({"source":"powerlaw","params":{"exponent":2.5,"min_degree":2,"n":50},"seed":3,"simple_policy":"reject","max_attempts":7})");
  const auto again = app::spec_from_json(nlohmann::json(app::spec_to_json(spec)));
  CHECK(app::spec_to_json(again) == app::spec_to_json(spec));
  CHECK(again.max_attempts == 7);
  CHECK(again.simple_policy == SimplePolicy::Reject);
}

TEST_CASE("output bytes do not depend on worker count") {
  TempDir t;
  const auto seq = sample_degree_sequence({PowerLawDegrees{2.5, 1, 3000}, 4});
  const Graph g = configuration_model(seq, 4).graph;
  const fs::path input = t.path / "g.txt";
  {
    std::ofstream out(input);
    write_edge_dump(out, g);
  }
  for (auto command : {app::Command::Stats, app::Command::Knn, app::Command::Nip}) {
    std::string baseline;
    for (unsigned workers : {1u, 3u, 8u}) {
      auto c = config(command, input, t.path / std::to_string(workers));
      c.worker_count = workers;
      REQUIRE(invoke(c).code == 0);
      std::string all;
      for (const char* name : {"summary.json", "run_metadata.json", "nip_node.csv", "knn_node.csv", "degree_dist.csv"})
        if (fs::exists(c.output_dir / name)) all += slurp(c.output_dir / name);
      if (workers == 1) baseline = all;
      CHECK(all == baseline);
    }
  }
}
