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

#ifndef PRISMFAB_MAPPER_HPP_
#define PRISMFAB_MAPPER_HPP_

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "prismfab/fabric.hpp"
#include "prismfab/netgraph.hpp"

namespace prismfab {

enum class Strategy { kAuto, kPath, kResnet, kDensenet, kInception, kBacktrack };

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);  // throws on unknown

struct Mapping {
  std::vector<VertexId> assignment;           // net vertex -> fabric vertex
  std::vector<std::vector<VertexId>> routes;  // fabric path per net edge,
                                              // in canonical edge order
  bool is_homomorphism = false;               // all routes have length 1
  std::string strategy_used;
  std::vector<std::string> parity_trace;  // "odd"/"even" after each coloring
                                          // step (colored count mod 2)
};

enum class FailReason { kImpossible, kTimeout, kNotApplicable };

std::string fail_reason_name(FailReason r);

struct Failure {
  FailReason reason = FailReason::kNotApplicable;
  // Best partial coloring reached, as (net vertex, fabric vertex) pairs in
  // coloring order.
  std::vector<std::pair<VertexId, VertexId>> colored_prefix;
  VertexId blocking_vertex = -1;  // first vertex that could not be colored
};

using HColorResult = std::variant<Mapping, Failure>;

// Node-expansion budget for the backtracking search; reads PRISMFAB_BUDGET
// from the environment, defaulting to 10^7.
long long default_budget();

// Injective H-coloring of net onto fabric. Constructive strategies refuse
// shapes they were not built for (Failure reason not-applicable); backtrack
// is exhaustive below its budget and reports impossible vs timeout
// accordingly. auto tries path, resnet, densenet, inception, then
// backtrack. budget <= 0 means default_budget(). Every returned Mapping is
// a verified homomorphism. Throws invalid_argument if the fabric has fewer
// vertices than the net.
HColorResult h_color(const NetGraph& net, const Fabric& fabric,
                     Strategy strategy = Strategy::kAuto, long long budget = 0);

// True iff assignment is injective and maps every net edge onto a fabric
// edge. assignment must be total (one fabric vertex per net vertex).
bool verify_homomorphism(const NetGraph& net, const Fabric& fabric,
                         const std::vector<VertexId>& assignment);

// Shortest-path routes for every net edge under a total injective
// assignment (BFS, smallest-id tie-break). Recomputes is_homomorphism.
Mapping route_edges(const NetGraph& net, const Fabric& fabric,
                    const std::vector<VertexId>& assignment);

// Extend a partial coloring to a total assignment: uncolored vertices take
// the free fabric slots in temporal order (ascending rail position on a
// prism, serpentine order on a mesh). Used to place stalled mappings.
std::vector<VertexId> fill_assignment(
    const NetGraph& net, const Fabric& fabric,
    const std::vector<std::pair<VertexId, VertexId>>& prefix);

// Smallest prism of unit_size the auto strategy can color net onto,
// growing two cores at a time up to max_extra spare. Falls back to the
// tight size when nothing within the allowance succeeds.
Fabric auto_sized_prism(int unit_size, const NetGraph& net, int max_extra = 8);

}  // namespace prismfab

#endif  // PRISMFAB_MAPPER_HPP_
