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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "prismfab/graph.hpp"

using namespace prismfab;

TEST_CASE("construction and edges") {
  Graph g(4);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 0);
  CHECK(g.add_edge(0, 1));
  CHECK(g.add_edge(2, 1));
  CHECK_FALSE(g.add_edge(1, 0));  // duplicate, either direction
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  // adjacency stays sorted
  CHECK(g.neighbors(1) == std::vector<VertexId>{0, 2});
  auto edges = g.edges();
  CHECK(edges == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(g.add_edge(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
}

TEST_CASE("bfs distances and diameter") {
  Graph g(5);  // path 0-1-2-3 plus isolated 4
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  auto d = g.bfs_distances(0);
  CHECK(d == std::vector<int>{0, 1, 2, 3, -1});
  CHECK_FALSE(g.is_connected());
  CHECK(g.diameter() == -1);
  g.add_edge(3, 4);
  CHECK(g.is_connected());
  CHECK(g.diameter() == 4);
  Graph single(1);
  CHECK(single.diameter() == 0);
  CHECK(single.is_connected());
}

TEST_CASE("shortest path prefers small ids") {
  // twoequal-length routes 0-1-3 and 0-2-3; the tie must break toward 1
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  CHECK(g.shortest_path(0, 3) == std::vector<VertexId>{0, 1, 3});
  CHECK(g.shortest_path(3, 0) == std::vector<VertexId>{3, 1, 0});
  CHECK(g.shortest_path(2, 2) == std::vector<VertexId>{2});
}

TEST_CASE("degree histogram") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto h = g.degree_histogram();
  CHECK(h == std::vector<int>{1, 2, 1});  // one deg-0, two deg-1, one deg-2
}

TEST_CASE("vertex_identify merges and renumbers") {
  // square 0-1-2-3-0; merging 0 and 2 gives a double edge collapsed
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  Graph m = vertex_identify(g, 0, 2);
  CHECK(m.vertex_count() == 3);
  CHECK(m.edge_count() == 2);  // 0-1 and 0-2 (old 3 renumbered)
  CHECK(m.has_edge(0, 1));
  CHECK(m.has_edge(0, 2));
  CHECK_FALSE(m.has_edge(1, 2));

  // adjacent endpoints: the connecting edge disappears
  Graph h(3);
  h.add_edge(0, 1);
  h.add_edge(1, 2);
  Graph hm = vertex_identify(h, 0, 1);
  CHECK(hm.vertex_count() == 2);
  CHECK(hm.edge_count() == 1);
  CHECK(hm.has_edge(0, 1));

  CHECK_THROWS_AS(vertex_identify(g, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(vertex_identify(g, 0, 9), std::out_of_range);
}

namespace {

// independent model: rebuild the identified graph from the edge list
Graph identify_reference(const Graph& g, VertexId u, VertexId v) {
  auto remap = [&](VertexId x) {
    if (x == v) x = u;
    if (x > v) --x;
    return x;
  };
  Graph out(g.vertex_count() - 1);
  for (auto [a, b] : g.edges()) {
    VertexId ra = remap(a), rb = remap(b);
    if (ra != rb && !out.has_edge(ra, rb)) out.add_edge(ra, rb);
  }
  return out;
}

}  // namespace

TEST_CASE("vertex_identify agrees with the edge-list model on random graphs") {
  std::mt19937 rng(20260822);
  for (int iter = 0; iter < 1000; ++iter) {
    int n = 2 + static_cast<int>(rng() % 9);  // 2..10 vertices
    Graph g(n);
    int want_edges = static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
    int guard = 0;
    while (g.edge_count() < want_edges && guard++ < 200) {
      VertexId a = static_cast<VertexId>(rng() % n);
      VertexId b = static_cast<VertexId>(rng() % n);
      if (a != b) g.add_edge(std::min(a, b), std::max(a, b));
    }
    VertexId u = static_cast<VertexId>(rng() % n);
    VertexId v = static_cast<VertexId>(rng() % n);
    if (u == v) continue;
    Graph got = vertex_identify(g, u, v);
    Graph want = identify_reference(g, u, v);
    CHECK(got == want);
  }
}

TEST_CASE("disjoint_union shifts the second block") {
  Graph a(2);
  a.add_edge(0, 1);
  Graph b(3);
  b.add_edge(0, 2);
  Graph u = disjoint_union(a, b);
  CHECK(u.vertex_count() == 5);
  CHECK(u.edge_count() == 2);
  CHECK(u.has_edge(0, 1));
  CHECK(u.has_edge(2, 4));
  CHECK_FALSE(u.is_connected());
}
