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

#include "prismfab/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace prismfab {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(vertex_count);
}

VertexId Graph::add_vertex() {
  adj_.emplace_back();
  return static_cast<VertexId>(adj_.size()) - 1;
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count())
    throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
}

bool Graph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self loop rejected");
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
  return true;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& nu = adj_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::bfs_distances(VertexId src) const {
  check_vertex(src);
  std::vector<int> dist(vertex_count(), -1);
  std::queue<VertexId> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId v : adj_[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;
  auto dist = bfs_distances(0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

int Graph::diameter() const {
  if (vertex_count() == 0) return -1;
  int best = 0;
  for (VertexId s = 0; s < vertex_count(); ++s) {
    auto dist = bfs_distances(s);
    for (int d : dist) {
      if (d < 0) return -1;
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<int> Graph::degree_histogram() const {
  int max_deg = 0;
  for (const auto& n : adj_) max_deg = std::max(max_deg, static_cast<int>(n.size()));
  std::vector<int> hist(max_deg + 1, 0);
  for (const auto& n : adj_) ++hist[n.size()];
  return hist;
}

std::vector<VertexId> Graph::shortest_path(VertexId src, VertexId dst) const {
  check_vertex(src);
  check_vertex(dst);
  std::vector<VertexId> parent(vertex_count(), -1);
  std::vector<int> dist(vertex_count(), -1);
  std::queue<VertexId> q;
  dist[src] = 0;
  q.push(src);
  // Ascending neighbor order means the first parent found is the smallest id
  // on any shortest path, which pins the route uniquely.
  while (!q.empty() && dist[dst] < 0) {
    VertexId u = q.front();
    q.pop();
    for (VertexId v : adj_[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        q.push(v);
      }
    }
  }
  if (dist[dst] < 0) throw std::invalid_argument("no path between vertices");
  std::vector<VertexId> path;
  for (VertexId v = dst; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

Graph vertex_identify(const Graph& g, VertexId u, VertexId v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw std::out_of_range("vertex id not in graph");
  if (u == v) throw std::invalid_argument("cannot identify a vertex with itself");
  Graph out(g.vertex_count() - 1);
  auto remap = [&](VertexId w) {
    if (w == v) w = u;
    return w > v ? w - 1 : w;
  };
  for (auto [a, b] : g.edges()) {
    VertexId x = remap(a);
    VertexId y = remap(b);
    if (x != y) out.add_edge(x, y);
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  int off = a.vertex_count();
  for (auto [u, v] : b.edges()) out.add_edge(u + off, v + off);
  return out;
}

}  // namespace prismfab
