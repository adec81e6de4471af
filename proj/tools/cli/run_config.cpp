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

#include "cli/run_config.hpp"

namespace nipgraph::app {

std::string_view to_string(Command command) {
  switch (command) {
    case Command::Stats: return "stats";
    case Command::Knn: return "knn";
    case Command::Nip: return "nip";
    case Command::Congen: return "congen";
    case Command::Report: return "report";
  }
  return "stats";
}

RunConfig default_config(Command command) {
  RunConfig c;
  c.command = command;
  c.mode = command == Command::Report ? PreprocessMode::RawMultiset : PreprocessMode::Simple;
  return c;
}

nlohmann::ordered_json echo(const RunConfig& config) {
  nlohmann::ordered_json j;
  j["command"] = to_string(config.command);
  auto inputs = nlohmann::ordered_json::array();
  for (const auto& p : config.input_paths) inputs.push_back(p.string());
  j["input_paths"] = inputs;
  j["mode"] = to_string(config.mode);
  j["density_convention"] = to_string(config.density_convention);
  j["scale"] = to_string(config.scale);
  j["tolerance"] = config.tolerance;
  j["seed"] = config.seed ? nlohmann::ordered_json(*config.seed) : nlohmann::ordered_json(nullptr);
  j["both_modes"] = config.both_modes;
  if (config.spec_path) j["spec_path"] = config.spec_path->string();
  if (config.spec_json) j["spec_json"] = *config.spec_json;
  return j;
}

}  // namespace nipgraph::app
