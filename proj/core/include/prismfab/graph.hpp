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

#ifndef PRISMFAB_GRAPH_HPP_
#define PRISMFAB_GRAPH_HPP_

#include <utility>
#include <vector>

namespace prismfab {

using VertexId = int;

// Undirected simple graph over dense integer ids. Adjacency lists are kept
// sorted so iteration order (and everything derived from it) is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  VertexId add_vertex();
  // Returns false if the edge already exists. Throws on loops or bad ids.
  bool add_edge(VertexId u, VertexId v);
  bool has_edge(VertexId u, VertexId v) const;

  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const;

  // Edge list as (u, v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  bool is_connected() const;
  // Hop distances from src; -1 for unreachable vertices.
  std::vector<int> bfs_distances(VertexId src) const;
  // Longest shortest path; -1 when disconnected, 0 for a single vertex.
  int diameter() const;
  // histogram[d] = number of vertices with degree d.
  std::vector<int> degree_histogram() const;
  // BFS shortest path including both endpoints. Ties resolved toward the
  // smallest vertex id, so routes are reproducible.
  std::vector<VertexId> shortest_path(VertexId src, VertexId dst) const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::vector<VertexId>> adj_;
  int edge_count_ = 0;
};

// Merges v into u and renumbers ids above v down by one. The merged vertex
// keeps u's (renumbered) id; duplicate edges collapse and any (u, v) edge is
// dropped, so the result is again simple.
Graph vertex_identify(const Graph& g, VertexId u, VertexId v);

// Disjoint union; vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace prismfab

#endif  // PRISMFAB_GRAPH_HPP_
