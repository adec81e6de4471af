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

#include "cli/spec_json.hpp"

#include <string>

#include "nipgraph/error.hpp"

namespace nipgraph::app {

namespace {

template <typename T>
T required(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key)) throw InputError(std::string("congen spec: missing params.") + key);
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("congen spec: params.") + key + " has the wrong type");
  }
}

}  // namespace

DegreeSequenceSpec spec_from_json(const nlohmann::json& json) {
  if (!json.is_object()) throw InputError("congen spec: expected a JSON object");
  if (!json.contains("source") || !json["source"].is_string())
    throw InputError("congen spec: missing string field 'source'");
  const nlohmann::json params = json.value("params", nlohmann::json::object());
  if (!params.is_object()) throw InputError("congen spec: 'params' must be an object");

  DegreeSequenceSpec spec;
  const auto source = json["source"].get<std::string>();
  if (source == "explicit") {
    const auto degrees = required<std::vector<std::int64_t>>(params, "degrees");
    ExplicitDegrees e;
    for (auto d : degrees) {
      if (d < 0 || d > 0xffffffffLL) throw InputError("congen spec: degrees must be non-negative");
      e.degrees.push_back(static_cast<Degree>(d));
    }
    spec.source = std::move(e);
  } else if (source == "poisson") {
    spec.source = PoissonDegrees{required<double>(params, "mean"), required<std::size_t>(params, "n")};
  } else if (source == "powerlaw") {
    spec.source = PowerLawDegrees{required<double>(params, "exponent"),
                                  required<Degree>(params, "min_degree"),
                                  required<std::size_t>(params, "n")};
  } else {
    throw InputError("congen spec: unknown source '" + source + "'");
  }

  try {
    spec.seed = json.value("seed", std::uint64_t{0});
    spec.max_attempts = json.value("max_attempts", kDefaultMaxAttempts);
    const auto policy = json.value("simple_policy", std::string("multigraph"));
    const auto parsed = parse_simple_policy(policy);
    if (!parsed) throw InputError("congen spec: unknown simple_policy '" + policy + "'");
    spec.simple_policy = *parsed;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("congen spec: ") + e.what());
  }
  validate(spec);
  return spec;
}

DegreeSequenceSpec parse_spec(std::string_view text) {
  nlohmann::json json;
  try {
    json = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("congen spec: ") + e.what());
  }
  return spec_from_json(json);
}

nlohmann::ordered_json spec_to_json(const DegreeSequenceSpec& spec) {
  nlohmann::ordered_json j;
  std::visit(
      [&j](const auto& src) {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, ExplicitDegrees>) {
          j["source"] = "explicit";
          j["params"] = {{"degrees", src.degrees}};
        } else if constexpr (std::is_same_v<T, PoissonDegrees>) {
          j["source"] = "poisson";
          j["params"] = {{"mean", src.mean}, {"n", src.node_count}};
        } else {
          j["source"] = "powerlaw";
          j["params"] = {{"exponent", src.exponent}, {"min_degree", src.min_degree}, {"n", src.node_count}};
        }
      },
      spec.source);
  j["seed"] = spec.seed;
  j["simple_policy"] = to_string(spec.simple_policy);
  j["max_attempts"] = spec.max_attempts;
  return j;
}

}  // namespace nipgraph::app
