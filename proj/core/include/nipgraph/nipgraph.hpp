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

#include "nipgraph/congen.hpp"
#include "nipgraph/degree_stats.hpp"
#include "nipgraph/edge_list.hpp"
#include "nipgraph/error.hpp"
#include "nipgraph/graph.hpp"
#include "nipgraph/metrics.hpp"
#include "nipgraph/nip.hpp"
#include "nipgraph/parallel.hpp"
#include "nipgraph/rng.hpp"
#include "nipgraph/types.hpp"
