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

#include <string>
#include <string_view>

#include <json.hpp>

#include "nipgraph/congen.hpp"

namespace nipgraph::app {

// JSON form of a DegreeSequenceSpec:
//
//   {"source": "explicit", "params": {"degrees": [2, 2, 2]}, ...}
//   {"source": "poisson",  "params": {"mean": 4, "n": 1000}, ...}
//   {"source": "powerlaw", "params": {"exponent": 2.5, "min_degree": 1, "n": 10000}, ...}
//
// with optional "seed" (default 0), "simple_policy" ("multigraph" | "erase" |
// "reject", default "multigraph") and "max_attempts" (REJECT, default 1000).

/// Throws InputError on malformed JSON or parameters.
DegreeSequenceSpec spec_from_json(const nlohmann::json& json);
DegreeSequenceSpec parse_spec(std::string_view text);

nlohmann::ordered_json spec_to_json(const DegreeSequenceSpec& spec);

}  // namespace nipgraph::app
