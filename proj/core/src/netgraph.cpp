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

#include "prismfab/netgraph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace prismfab {

std::string origin_name(Origin o) {
  switch (o) {
    case Origin::kFeedforward: return "feedforward";
    case Origin::kResidual: return "residual";
    case Origin::kResample: return "resample";
    case Origin::kConcat: return "concat";
    case Origin::kHop: return "hop";
  }
  return "?";
}

int NetEdge::payload() const {
  int total = 0;
  for (const auto& c : components) total += c.channels;
  return total;
}

int NetGraph::edge_index(int src, int dst) const {
  auto it = index_.find({src, dst});
  return it == index_.end() ? -1 : it->second;
}

NetEdge& NetGraph::ensure_edge(int src, int dst) {
  if (src == dst) throw std::invalid_argument("self loop in network graph");
  if (src < 0 || src >= vertex_count() || dst < 0 || dst >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  int idx = edge_index(src, dst);
  if (idx < 0) {
    idx = static_cast<int>(edges.size());
    edges.push_back({src, dst, {}});
    index_[{src, dst}] = idx;
  }
  return edges[idx];
}

void NetGraph::add_component(int src, int dst, PayloadComponent c) {
  ensure_edge(src, dst).components.push_back(c);
}

void NetGraph::sort_canonical() {
  std::sort(edges.begin(), edges.end(), [](const NetEdge& a, const NetEdge& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
  for (auto& e : edges) {
    std::sort(e.components.begin(), e.components.end(),
              [](const PayloadComponent& a, const PayloadComponent& b) {
                return std::tie(a.producer, a.origin) < std::tie(b.producer, b.origin);
              });
  }
  index_.clear();
  for (size_t i = 0; i < edges.size(); ++i)
    index_[{edges[i].src, edges[i].dst}] = static_cast<int>(i);
}

void NetGraph::compute_depths() {
  int n = vertex_count();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (const auto& e : edges) {
    ++indeg[e.dst];
    succ[e.src].push_back(e.dst);
  }
  std::queue<int> ready;
  for (int v = 0; v < n; ++v) {
    vertices[v].depth = 0;
    if (indeg[v] == 0) ready.push(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    int u = ready.front();
    ready.pop();
    ++seen;
    for (int v : succ[u]) {
      vertices[v].depth = std::max(vertices[v].depth, vertices[u].depth + 1);
      if (--indeg[v] == 0) ready.push(v);
    }
  }
  if (seen != n) throw std::invalid_argument("network graph has a cycle");
}

int NetGraph::max_channels() const {
  int m = 0;
  for (const auto& v : vertices) m = std::max(m, v.channels);
  return m;
}

std::vector<std::vector<int>> NetGraph::out_edges() const {
  std::vector<std::vector<int>> out(vertex_count());
  for (size_t i = 0; i < edges.size(); ++i)
    out[edges[i].src].push_back(static_cast<int>(i));
  return out;
}

std::vector<std::vector<int>> NetGraph::in_edges() const {
  std::vector<std::vector<int>> in(vertex_count());
  for (size_t i = 0; i < edges.size(); ++i)
    in[edges[i].dst].push_back(static_cast<int>(i));
  return in;
}

namespace {

enum class LinkClass { kFeedforward, kResidual, kSkipResample };

}  // namespace

NetGraph consolidate_raw(const ArchSpec& spec) {
  NetGraph g;
  for (const auto& l : spec.layers)
    g.vertices.push_back({l.name, l.channels, l.stride, l.kernel, l.pool,
                          l.resample, 0});

  auto idx = [&](const std::string& name) {
    int i = spec.index_of(name);
    if (i < 0) throw std::invalid_argument("unknown layer '" + name + "'");
    return i;
  };

  // A residual (or skip-path resample) stream is physically forwarded by
  // whichever stage consumes the producer's output next, so those links get
  // their source remapped to that stage when it is unambiguous.
  std::vector<std::set<int>> ff_succ(g.vertex_count());
  std::vector<LinkClass> cls;
  cls.reserve(spec.links.size());
  for (const auto& l : spec.links) {
    int s = idx(l.src);
    int d = idx(l.dst);
    if (l.residual) {
      cls.push_back(LinkClass::kResidual);
    } else if (spec.layers[d].resample) {
      cls.push_back(LinkClass::kSkipResample);
    } else {
      cls.push_back(LinkClass::kFeedforward);
      ff_succ[s].insert(d);
    }
  }
  for (const auto& c : spec.concats)
    for (const auto& sn : c.srcs)
      for (const auto& dn : c.dsts) ff_succ[idx(sn)].insert(idx(dn));

  auto carrier_of = [&](int src, int dst) {
    // Unique feedforward successor, when there is one and it is not the
    // destination itself.
    if (ff_succ[src].size() != 1) return src;
    int v = *ff_succ[src].begin();
    return v == dst ? src : v;
  };

  for (size_t i = 0; i < spec.links.size(); ++i) {
    int s = idx(spec.links[i].src);
    int d = idx(spec.links[i].dst);
    int ch = g.vertices[s].channels;
    switch (cls[i]) {
      case LinkClass::kFeedforward:
        g.add_component(s, d, {Origin::kFeedforward, s, ch});
        break;
      case LinkClass::kResidual:
        g.add_component(carrier_of(s, d), d, {Origin::kResidual, s, ch});
        break;
      case LinkClass::kSkipResample:
        g.add_component(carrier_of(s, d), d, {Origin::kResample, s, ch});
        break;
    }
  }
  for (const auto& c : spec.concats) {
    for (const auto& sn : c.srcs) {
      int s = idx(sn);
      for (const auto& dn : c.dsts)
        g.add_component(s, idx(dn), {Origin::kConcat, s, g.vertices[s].channels});
    }
  }

  g.sort_canonical();
  g.compute_depths();
  return g;
}

void apply_hop_transform(NetGraph& g) {
  g.compute_depths();
  int n = g.vertex_count();

  std::vector<std::set<int>> succ(n);
  for (const auto& e : g.edges) succ[e.src].insert(e.dst);
  auto has_two_step = [&](int x, int t) {
    for (int y : succ[x])
      if (succ[y].count(t)) return true;
    return false;
  };

  // Edges that span more than one depth level cannot be realized between
  // pipeline neighbors; their streams ride a carrier chain instead. An edge
  // with an existing two-step detour keeps its direct form.
  std::vector<int> rerouted;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (g.vertices[e.dst].depth > g.vertices[e.src].depth + 1 &&
        !has_two_step(e.src, e.dst))
      rerouted.push_back(static_cast<int>(i));
  }
  if (rerouted.empty()) return;

  // One parcel per (start, producer): the stream travels the carrier chain
  // once and peels off to each destination as soon as it is one level away.
  std::map<std::pair<int, int>, std::pair<int, std::set<int>>> parcels;
  for (int ei : rerouted) {
    const auto& e = g.edges[ei];
    for (const auto& c : e.components) {
      auto& p = parcels[{e.src, c.producer}];
      p.first = c.channels;
      p.second.insert(e.dst);
    }
  }

  // Every depth value up to the maximum is realized (longest-path depths),
  // so the chain climbs one level at a time.
  int max_depth = 0;
  for (const auto& v : g.vertices) max_depth = std::max(max_depth, v.depth);
  std::vector<int> first_at(max_depth + 1, -1);
  for (int v = 0; v < n; ++v)
    if (first_at[g.vertices[v].depth] < 0) first_at[g.vertices[v].depth] = v;

  std::vector<NetEdge> keep;
  std::set<int> drop(rerouted.begin(), rerouted.end());
  for (size_t i = 0; i < g.edges.size(); ++i)
    if (!drop.count(static_cast<int>(i))) keep.push_back(g.edges[i]);
  g.edges = std::move(keep);
  g.sort_canonical();

  for (auto& [key, parcel] : parcels) {
    auto [start, producer] = key;
    auto [channels, dests] = parcel;
    int carrier = start;
    while (!dests.empty()) {
      int d = g.vertices[carrier].depth;
      for (auto it = dests.begin(); it != dests.end();) {
        if (g.vertices[*it].depth <= d + 1) {
          g.add_component(carrier, *it, {Origin::kHop, producer, channels});
          it = dests.erase(it);
        } else {
          ++it;
        }
      }
      if (dests.empty()) break;
      int next = first_at[d + 1];
      g.add_component(carrier, next, {Origin::kHop, producer, channels});
      carrier = next;
    }
  }

  g.sort_canonical();
  g.compute_depths();
}

NetGraph consolidate(const ArchSpec& spec) {
  NetGraph g = consolidate_raw(spec);
  apply_hop_transform(g);
  return g;
}

}  // namespace prismfab
