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

#include "prismfab/mapper.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace prismfab {

namespace {

// Undirected net adjacency restricted to already-colored neighbors.
std::vector<std::vector<VertexId>> net_neighbors(const NetGraph& net) {
  std::vector<std::vector<VertexId>> nbr(net.vertex_count());
  for (const NetEdge& e : net.edges) {
    nbr[e.src].push_back(e.dst);
    nbr[e.dst].push_back(e.src);
  }
  return nbr;
}

std::vector<std::string> make_parity_trace(int steps) {
  std::vector<std::string> t;
  t.reserve(steps);
  for (int k = 1; k <= steps; ++k) t.push_back(k % 2 == 0 ? "even" : "odd");
  return t;
}

Mapping finish_mapping(const NetGraph& net, const Fabric& fabric,
                       const std::vector<VertexId>& assignment,
                       Strategy strategy) {
  Mapping m = route_edges(net, fabric, assignment);
  m.strategy_used = strategy_name(strategy);
  m.parity_trace = make_parity_trace(net.vertex_count());
  return m;
}

Failure identity_prefix_failure(const NetGraph& net, const Fabric& fabric,
                                FailReason reason) {
  // Longest identity prefix that still colors correctly, for evidence.
  Failure f;
  f.reason = reason;
  std::vector<std::vector<VertexId>> nbr = net_neighbors(net);
  int n = std::min(net.vertex_count(), fabric.graph.vertex_count());
  for (VertexId v = 0; v < n; ++v) {
    bool ok = true;
    for (VertexId u : nbr[v])
      if (u < v && !fabric.graph.has_edge(u, v)) ok = false;
    if (!ok) {
      f.blocking_vertex = v;
      return f;
    }
    f.colored_prefix.emplace_back(v, v);
  }
  f.blocking_vertex = n < net.vertex_count() ? n : -1;
  return f;
}

HColorResult strategy_path_impl(const NetGraph& net, const Fabric& fabric) {
  for (const NetEdge& e : net.edges)
    if (e.dst - e.src != 1) {
      Failure f;
      f.reason = FailReason::kNotApplicable;
      f.blocking_vertex = e.dst;
      return f;
    }
  std::vector<VertexId> asg(net.vertex_count());
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    asg[v] = fabric.kind == FabricKind::kMesh
                 ? serpentine_cell(v, fabric.rows, fabric.cols)
                 : v;
  if (!verify_homomorphism(net, fabric, asg))
    return identity_prefix_failure(net, fabric, FailReason::kNotApplicable);
  return finish_mapping(net, fabric, asg, Strategy::kPath);
}

// Path segments plus stride-transition triangles: every edge spans at most
// two temporal steps, so the chain runs down the rails and each transition
// triangle lands inside the current unit.
HColorResult strategy_resnet_impl(const NetGraph& net, const Fabric& fabric) {
  if (fabric.kind != FabricKind::kPrism) {
    Failure f;
    f.reason = FailReason::kNotApplicable;
    return f;
  }
  for (const NetEdge& e : net.edges) {
    int span = e.dst - e.src;
    // Forward hops of one or two slots, plus the resampler handing its
    // adjusted stream back to the block entry it sits behind.
    bool ok = span == 1 || span == 2 ||
              (span == -1 && net.vertices[e.src].resample);
    if (!ok) {
      Failure f;
      f.reason = FailReason::kNotApplicable;
      f.blocking_vertex = e.dst;
      return f;
    }
  }
  std::vector<VertexId> asg(net.vertex_count());
  for (VertexId v = 0; v < net.vertex_count(); ++v) asg[v] = v;
  if (!verify_homomorphism(net, fabric, asg))
    return identity_prefix_failure(net, fabric, FailReason::kNotApplicable);
  return finish_mapping(net, fabric, asg, Strategy::kResnet);
}

// Hybrid dense blocks whose window matches the fabric unit: consecutive
// rail coloring is a homomorphism exactly when every edge fits the rail
// window, which is what the hybrid generator guarantees.
HColorResult strategy_densenet_impl(const NetGraph& net, const Fabric& fabric) {
  if (fabric.kind != FabricKind::kPrism) {
    Failure f;
    f.reason = FailReason::kNotApplicable;
    return f;
  }
  for (const NetEdge& e : net.edges)
    if (!rail_adjacent(fabric.unit_size, e.src, e.dst)) {
      Failure f;
      f.reason = FailReason::kNotApplicable;
      f.blocking_vertex = e.dst;
      return f;
    }
  std::vector<VertexId> asg(net.vertex_count());
  for (VertexId v = 0; v < net.vertex_count(); ++v) asg[v] = v;
  if (!verify_homomorphism(net, fabric, asg))
    return identity_prefix_failure(net, fabric, FailReason::kNotApplicable);
  return finish_mapping(net, fabric, asg, Strategy::kDensenet);
}

struct GreedyState {
  const NetGraph& net;
  const Fabric& fabric;
  const std::vector<std::vector<VertexId>>& nbr;
  std::vector<VertexId> asg;
  std::vector<std::pair<VertexId, VertexId>> best;
  VertexId blocking = 0;
  long long expansions = 0;
  long long cap = 1'000'000;
  bool capped = false;
};

// Monotone rail coloring: each vertex takes the next free rail position,
// optionally skipping up to two positions to fix the coloring parity.
// Skipped positions are never revisited.
bool greedy_dfs(GreedyState& s, VertexId v, int next_pos) {
  if (v == s.net.vertex_count()) return true;
  for (int skip = 0; skip <= 2; ++skip) {
    int pos = next_pos + skip;
    if (pos >= s.fabric.graph.vertex_count()) break;
    if (++s.expansions > s.cap) {
      s.capped = true;
      return false;
    }
    bool ok = true;
    for (VertexId u : s.nbr[v])
      if (u < v && !s.fabric.graph.has_edge(s.asg[u], pos)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    s.asg[v] = pos;
    if (v + 1 > static_cast<VertexId>(s.best.size())) {
      s.best.clear();
      for (VertexId u = 0; u <= v; ++u) s.best.emplace_back(u, s.asg[u]);
      s.blocking = v + 1;
    }
    if (greedy_dfs(s, v + 1, pos + 1)) return true;
    if (s.capped) return false;
    s.asg[v] = -1;
  }
  return false;
}

HColorResult strategy_inception_impl(const NetGraph& net,
                                     const Fabric& fabric) {
  if (fabric.kind != FabricKind::kPrism) {
    Failure f;
    f.reason = FailReason::kNotApplicable;
    return f;
  }
  std::vector<std::vector<VertexId>> nbr = net_neighbors(net);
  GreedyState s{net, fabric, nbr};
  s.asg.assign(net.vertex_count(), -1);
  if (greedy_dfs(s, 0, 0)) {
    if (!verify_homomorphism(net, fabric, s.asg))
      return identity_prefix_failure(net, fabric, FailReason::kNotApplicable);
    return finish_mapping(net, fabric, s.asg, Strategy::kInception);
  }
  Failure f;
  f.reason = FailReason::kNotApplicable;
  f.colored_prefix = s.best;
  f.blocking_vertex =
      s.best.size() < static_cast<size_t>(net.vertex_count()) ? s.blocking : -1;
  return f;
}

struct BacktrackState {
  const NetGraph& net;
  const Fabric& fabric;
  const std::vector<std::vector<VertexId>>& nbr;
  std::vector<VertexId> order;  // fabric vertices by (degree asc, id asc)
  std::vector<VertexId> asg;
  std::vector<bool> used;
  std::vector<std::pair<VertexId, VertexId>> best;
  VertexId blocking = 0;
  long long expansions = 0;
  long long budget = 0;
  bool out_of_budget = false;
};

bool backtrack_dfs(BacktrackState& s, VertexId v) {
  if (v == s.net.vertex_count()) return true;
  for (VertexId cand : s.order) {
    if (s.used[cand]) continue;
    bool ok = true;
    for (VertexId u : s.nbr[v])
      if (u < v && !s.fabric.graph.has_edge(s.asg[u], cand)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (++s.expansions > s.budget) {
      s.out_of_budget = true;
      return false;
    }
    s.asg[v] = cand;
    s.used[cand] = true;
    if (v + 1 > static_cast<VertexId>(s.best.size())) {
      s.best.clear();
      for (VertexId u = 0; u <= v; ++u) s.best.emplace_back(u, s.asg[u]);
      s.blocking = v + 1;
    }
    if (backtrack_dfs(s, v + 1)) return true;
    s.used[cand] = false;
    s.asg[v] = -1;
    if (s.out_of_budget) return false;
  }
  return false;
}

HColorResult strategy_backtrack_impl(const NetGraph& net, const Fabric& fabric,
                                     long long budget) {
  std::vector<std::vector<VertexId>> nbr = net_neighbors(net);
  BacktrackState s{net, fabric, nbr};
  s.order.resize(fabric.graph.vertex_count());
  for (VertexId v = 0; v < fabric.graph.vertex_count(); ++v) s.order[v] = v;
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](VertexId a, VertexId b) {
                     return fabric.graph.degree(a) < fabric.graph.degree(b);
                   });
  s.asg.assign(net.vertex_count(), -1);
  s.used.assign(fabric.graph.vertex_count(), false);
  s.budget = budget;
  if (backtrack_dfs(s, 0))
    return finish_mapping(net, fabric, s.asg, Strategy::kBacktrack);
  Failure f;
  f.reason =
      s.out_of_budget ? FailReason::kTimeout : FailReason::kImpossible;
  f.colored_prefix = s.best;
  f.blocking_vertex =
      s.best.size() < static_cast<size_t>(net.vertex_count()) ? s.blocking : -1;
  return f;
}

}  // namespace

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kAuto: return "auto";
    case Strategy::kPath: return "path";
    case Strategy::kResnet: return "resnet";
    case Strategy::kDensenet: return "densenet";
    case Strategy::kInception: return "inception";
    case Strategy::kBacktrack: return "backtrack";
  }
  return "unknown";
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "auto") return Strategy::kAuto;
  if (name == "path") return Strategy::kPath;
  if (name == "resnet") return Strategy::kResnet;
  if (name == "densenet") return Strategy::kDensenet;
  if (name == "inception") return Strategy::kInception;
  if (name == "backtrack") return Strategy::kBacktrack;
  throw std::invalid_argument("unknown strategy: " + name);
}

std::string fail_reason_name(FailReason r) {
  switch (r) {
    case FailReason::kImpossible: return "impossible";
    case FailReason::kTimeout: return "timeout";
    case FailReason::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

long long default_budget() {
  if (const char* env = std::getenv("PRISMFAB_BUDGET")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v >= 1) return static_cast<long long>(v);
  }
  return 10'000'000;
}

HColorResult h_color(const NetGraph& net, const Fabric& fabric,
                     Strategy strategy, long long budget) {
  if (fabric.graph.vertex_count() < net.vertex_count())
    throw std::invalid_argument("fabric smaller than network");
  if (budget <= 0) budget = default_budget();
  switch (strategy) {
    case Strategy::kPath:
      return strategy_path_impl(net, fabric);
    case Strategy::kResnet:
      return strategy_resnet_impl(net, fabric);
    case Strategy::kDensenet:
      return strategy_densenet_impl(net, fabric);
    case Strategy::kInception:
      return strategy_inception_impl(net, fabric);
    case Strategy::kBacktrack:
      return strategy_backtrack_impl(net, fabric, budget);
    case Strategy::kAuto:
      break;
  }
  HColorResult r = strategy_path_impl(net, fabric);
  if (std::holds_alternative<Mapping>(r)) return r;
  r = strategy_resnet_impl(net, fabric);
  if (std::holds_alternative<Mapping>(r)) return r;
  r = strategy_densenet_impl(net, fabric);
  if (std::holds_alternative<Mapping>(r)) return r;
  r = strategy_inception_impl(net, fabric);
  if (std::holds_alternative<Mapping>(r)) return r;
  return strategy_backtrack_impl(net, fabric, budget);
}

bool verify_homomorphism(const NetGraph& net, const Fabric& fabric,
                         const std::vector<VertexId>& assignment) {
  if (assignment.size() != static_cast<size_t>(net.vertex_count()))
    return false;
  std::vector<bool> used(fabric.graph.vertex_count(), false);
  for (VertexId f : assignment) {
    if (f < 0 || f >= fabric.graph.vertex_count() || used[f]) return false;
    used[f] = true;
  }
  for (const NetEdge& e : net.edges)
    if (!fabric.graph.has_edge(assignment[e.src], assignment[e.dst]))
      return false;
  return true;
}

Mapping route_edges(const NetGraph& net, const Fabric& fabric,
                    const std::vector<VertexId>& assignment) {
  if (assignment.size() != static_cast<size_t>(net.vertex_count()))
    throw std::invalid_argument("assignment size mismatch");
  std::vector<bool> used(fabric.graph.vertex_count(), false);
  for (VertexId f : assignment) {
    if (f < 0 || f >= fabric.graph.vertex_count() || used[f])
      throw std::invalid_argument("assignment not injective into fabric");
    used[f] = true;
  }
  Mapping m;
  m.assignment = assignment;
  m.is_homomorphism = true;
  for (const NetEdge& e : net.edges) {
    std::vector<VertexId> path =
        fabric.graph.shortest_path(assignment[e.src], assignment[e.dst]);
    if (path.size() != 2) m.is_homomorphism = false;
    m.routes.push_back(std::move(path));
  }
  m.parity_trace = make_parity_trace(net.vertex_count());
  return m;
}

std::vector<VertexId> fill_assignment(
    const NetGraph& net, const Fabric& fabric,
    const std::vector<std::pair<VertexId, VertexId>>& prefix) {
  int fn = fabric.graph.vertex_count();
  if (fn < net.vertex_count())
    throw std::invalid_argument("fabric smaller than network");
  std::vector<VertexId> asg(net.vertex_count(), -1);
  std::vector<bool> used(fn, false);
  for (const auto& [nv, fv] : prefix) {
    if (nv < 0 || nv >= net.vertex_count() || fv < 0 || fv >= fn ||
        asg[nv] != -1 || used[fv])
      throw std::invalid_argument("bad prefix pair");
    asg[nv] = fv;
    used[fv] = true;
  }
  // Free fabric slots in temporal order.
  std::vector<VertexId> slots;
  for (int t = 0; t < fn; ++t) {
    VertexId f = fabric.kind == FabricKind::kMesh
                     ? serpentine_cell(t, fabric.rows, fabric.cols)
                     : t;
    if (!used[f]) slots.push_back(f);
  }
  size_t next = 0;
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (asg[v] == -1) asg[v] = slots[next++];
  return asg;
}

Fabric auto_sized_prism(int unit_size, const NetGraph& net, int max_extra) {
  int base = std::max(net.vertex_count(), unit_size);
  if ((base - unit_size) % 2 != 0) ++base;
  for (int extra = 0; extra <= max_extra; extra += 2) {
    Fabric f = build_kpp(unit_size, base + extra);
    HColorResult r = h_color(net, f, Strategy::kAuto, 200'000);
    if (std::holds_alternative<Mapping>(r)) return f;
  }
  return build_kpp(unit_size, base);
}

}  // namespace prismfab
