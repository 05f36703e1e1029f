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

#ifndef PRISMFAB_METRICS_HPP_
#define PRISMFAB_METRICS_HPP_

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "prismfab/fabric.hpp"
#include "prismfab/mapper.hpp"
#include "prismfab/netgraph.hpp"

namespace prismfab {

using Rat = boost::rational<long long>;

struct LinkLoad {
  VertexId u = 0, v = 0;  // fabric link, u < v
  Rat bandwidth;          // channels transferred per cycle / c_max
};

struct MetricsReport {
  std::string network;
  std::string fabric;
  int stage_latency_cycles = 1;
  Rat max_link_bandwidth_norm;       // heaviest fabric link
  Rat max_component_bandwidth_norm;  // heaviest single payload component
  std::vector<LinkLoad> per_link_bandwidth;  // loaded links only, sorted
  int total_links_used = 0;
  int total_fabric_links = 0;
};

// Pipeline initiation interval: the longest route any edge needs, in
// cycles; 1 when the mapping is a homomorphism.
int stage_latency(const Mapping& m);

// Per-link normalized bandwidth under the mapping. Every net edge sends
// its full payload across each fabric link of its route once per wave.
// c_max 0 means the net's maximum channel count; cycle_T scales the cycle.
MetricsReport link_bandwidth(const NetGraph& net, const Fabric& fabric,
                             const Mapping& m, int c_max = 0, int cycle_T = 1);

// Worst-link bound for one dense block of block_size layers with the given
// growth rate, laid out hybrid on a prism of unit_size: the direct stream
// plus however many forwarding rounds the out-of-window streams need.
Rat densenet_bandwidth_bound(int growth, int block_size, int unit_size,
                             int cycle_T = 1);

struct SimResult {
  int num_waves = 0;
  long long total_cycles = 0;
  long long steady_cycles_per_wave = 0;  // late-wave increment
  std::vector<LinkLoad> per_link_traffic;  // measured, normalized per wave
};

// Discrete wave-by-wave execution of the mapped pipeline. A vertex starts
// wave w once its previous wave's slowest outbound transfer finished and
// all wave-w inputs arrived; transfers take one cycle per fabric hop.
// Validates the analytic metrics: steady cycles per wave equals
// stage_latency and per-link traffic equals link_bandwidth exactly.
SimResult simulate_pipeline(const NetGraph& net, const Fabric& fabric,
                            const Mapping& m, int num_waves, int c_max = 0,
                            int cycle_T = 1);

struct CompareCell {
  std::string network;
  std::string fabric;
  int fabric_vertices = 0;
  int fabric_links = 0;
  int fabric_diameter = 0;
  bool mapped = false;        // a placement exists (possibly with stalls)
  bool homomorphism = false;
  std::string outcome;        // strategy used, or failure reason
  int stage_latency = 0;
  Rat max_bandwidth;
  int links_used = 0;
};

struct RatioSummary {
  std::string name;
  Rat value;
};

struct CompareOptions {
  std::vector<std::string> networks = {"alexnet", "resnet32", "densenet201",
                                       "inception_v4"};
  std::vector<int> prism_units = {4, 6, 8};
  bool include_meshes = true;
  long long search_budget = 50'000;  // per-cell backtrack budget
};

struct ComparisonTable {
  std::vector<CompareCell> cells;
  std::vector<RatioSummary> ratios;
};

// Cross product of networks and fabrics: prisms of each unit size (sized to
// the network, plus slack when the coloring needs it) and a family of
// meshes (1 row, 2 rows, 4 rows, near-square). Networks that do not embed
// get a best-partial placement with routed edges so latency and bandwidth
// stay comparable. Ratio summaries relate dense-network bandwidth and link
// counts across fabrics and report the largest mesh latency penalty.
ComparisonTable run_comparison(const CompareOptions& opt = {});

// Mesh shapes used by run_comparison for a network of n vertices.
std::vector<std::pair<int, int>> mesh_shapes_for(int n);

}  // namespace prismfab

#endif  // PRISMFAB_METRICS_HPP_
