// Copyright 2026 the prismfab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRISMFAB_EXPORT_HPP_
#define PRISMFAB_EXPORT_HPP_

#include <string>

#include <json.hpp>

#include "prismfab/casestudy.hpp"
#include "prismfab/fabric.hpp"
#include "prismfab/mapper.hpp"
#include "prismfab/metrics.hpp"
#include "prismfab/netgraph.hpp"

namespace prismfab {

// Insertion-ordered JSON keeps output byte-identical across runs.
using Json = nlohmann::ordered_json;

// Exact rationals serialize as "p/q" strings, never floats.
std::string rat_str(const Rat& r);

Json fabric_json(const Fabric& f);
Json netgraph_json(const NetGraph& net);
Json mapping_json(const NetGraph& net, const Mapping& m);
Json failure_json(const Failure& f);
Json metrics_json(const MetricsReport& r);
Json comparison_json(const ComparisonTable& t);
Json placement_json(const CorePlacement& p, const NetGraph& net);
Json physical_json(const PhysicalEstimate& e);

// One row per mapped cell, RFC 4180 (CRLF line ends, quoted on demand).
std::string comparison_csv(const ComparisonTable& t);

// Grouped bar charts, one panel for pipeline latency and one for peak
// link bandwidth.
std::string comparison_svg(const ComparisonTable& t);

std::string fabric_dot(const Fabric& f);
std::string netgraph_dot(const NetGraph& net);

// 2-space indent plus trailing newline, the house dump style.
std::string dump_json(const Json& j);

}  // namespace prismfab

#endif  // PRISMFAB_EXPORT_HPP_
