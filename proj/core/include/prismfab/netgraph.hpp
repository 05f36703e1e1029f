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

#ifndef PRISMFAB_NETGRAPH_HPP_
#define PRISMFAB_NETGRAPH_HPP_

#include <map>
#include <string>
#include <vector>

#include "prismfab/archspec.hpp"

namespace prismfab {

// Where a payload component comes from. A consolidated edge can carry
// several streams at once; each keeps its origin and producing vertex so
// traffic stays attributable after merging and rerouting.
enum class Origin { kFeedforward, kResidual, kResample, kConcat, kHop };

std::string origin_name(Origin o);

struct PayloadComponent {
  Origin origin = Origin::kFeedforward;
  int producer = -1;  // vertex whose output stream this is
  int channels = 0;

  bool operator==(const PayloadComponent&) const = default;
};

struct NetEdge {
  int src = -1;
  int dst = -1;
  std::vector<PayloadComponent> components;

  int payload() const;  // summed channels over components

  bool operator==(const NetEdge&) const = default;
};

struct NetVertex {
  std::string name;
  int channels = 0;
  int stride = 1;
  int kernel = 3;
  int pool = 0;
  bool resample = false;
  int depth = 0;  // longest-path depth from the sources

  bool operator==(const NetVertex&) const = default;
};

// Directed acyclic network graph in consolidated form: one vertex per
// compute stage (declaration order preserved as vertex ids), simple edges,
// per-edge payload components.
struct NetGraph {
  std::vector<NetVertex> vertices;
  std::vector<NetEdge> edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_index(int src, int dst) const;  // -1 when absent
  bool has_edge(int src, int dst) const { return edge_index(src, dst) >= 0; }
  NetEdge& ensure_edge(int src, int dst);
  void add_component(int src, int dst, PayloadComponent c);

  // Sorts edges by (src, dst) and components by (producer, origin), and
  // refreshes the lookup index. Call after hand-building edges.
  void sort_canonical();
  // Longest-path depths; throws std::invalid_argument on a cycle.
  void compute_depths();

  int max_channels() const;
  std::vector<std::vector<int>> out_edges() const;  // vertex -> edge indices
  std::vector<std::vector<int>> in_edges() const;

  bool operator==(const NetGraph&) const = default;

 private:
  std::map<std::pair<int, int>, int> index_;
};

// Builds the consolidated graph without the lag rerouting pass: stages
// become vertices, residual and skip-path links are remapped onto the
// stream's physical carrier, parallel components merge onto simple edges,
// concatenation blocks expand to complete bipartite edge sets.
NetGraph consolidate_raw(const ArchSpec& spec);

// Reroutes every edge that spans more than one depth level (and has no
// two-step fallback path) through a chain of intermediate carriers, so all
// traffic moves between pipeline neighbors. Idempotent.
void apply_hop_transform(NetGraph& g);

// consolidate_raw followed by apply_hop_transform.
NetGraph consolidate(const ArchSpec& spec);

}  // namespace prismfab

#endif  // PRISMFAB_NETGRAPH_HPP_
