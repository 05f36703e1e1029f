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

#include <set>
#include <stdexcept>

#include "prismfab/fabric.hpp"

using namespace prismfab;

TEST_CASE("unit complete graph") {
  Graph k6 = unit_complete_graph(6);
  CHECK(k6.vertex_count() == 6);
  CHECK(k6.edge_count() == 15);
  CHECK(k6.diameter() == 1);
  CHECK_THROWS_AS(unit_complete_graph(1), std::invalid_argument);
}

TEST_CASE("prism sizes and edge counts") {
  // single unit
  Fabric f6 = build_kpp(6, 6);
  CHECK(f6.graph.vertex_count() == 6);
  CHECK(f6.graph.edge_count() == 15);
  CHECK(f6.prism_count == 1);

  Fabric f10 = build_kpp(6, 10);
  CHECK(f10.graph.vertex_count() == 10);
  CHECK(f10.graph.edge_count() == 33);
  CHECK(f10.prism_count == 3);

  Fabric f40 = build_kpp(6, 40);
  CHECK(f40.graph.vertex_count() == 40);
  CHECK(f40.graph.edge_count() == 168);
  CHECK(f40.prism_count == 18);
  CHECK(f40.name() == "5pp-40");

  // unit-size family at 102 cores
  CHECK(build_kpp(4, 102).graph.edge_count() == 251);
  CHECK(build_kpp(6, 102).graph.edge_count() == 447);
  CHECK(build_kpp(8, 102).graph.edge_count() == 639);

  // odd requested core counts round up to the construction grid
  Fabric f7 = build_kpp(6, 7);
  CHECK(f7.graph.vertex_count() == 8);

  CHECK_THROWS_AS(build_kpp(5, 20), std::invalid_argument);
  CHECK_THROWS_AS(build_kpp(2, 20), std::invalid_argument);
  CHECK_THROWS_AS(build_kpp(6, 0), std::invalid_argument);
}

TEST_CASE("prism edge recurrence over the even size ladder") {
  // each added unit contributes 2n-3 new edges on top of the K_n start
  for (int cores = 6; cores <= 60; cores += 2) {
    Fabric f = build_kpp(6, cores);
    int m = f.prism_count;
    CHECK(m == (cores - 6) / 2 + 1);
    CHECK(f.graph.vertex_count() == cores);
    CHECK(f.graph.edge_count() == 15 + 9 * (m - 1));
    CHECK(f.graph.is_connected());
  }
}

TEST_CASE("prism growth keeps the existing prefix intact") {
  Fabric small = build_kpp(6, 20);
  Fabric big = build_kpp(6, 40);
  for (auto [u, v] : small.graph.edges()) CHECK(big.graph.has_edge(u, v));
  // and adds nothing new between old vertices
  for (auto [u, v] : big.graph.edges())
    if (u < 20 && v < 20) CHECK(small.graph.has_edge(u, v));
}

TEST_CASE("every vertex lies in a recorded complete unit") {
  for (int cores = 6; cores <= 200; cores += 2) {
    Fabric f = build_kpp(6, cores);
    std::set<VertexId> covered;
    for (const auto& unit : f.units) {
      CHECK(unit.size() == 6);
      for (size_t i = 0; i < unit.size(); ++i) {
        covered.insert(unit[i]);
        for (size_t j = i + 1; j < unit.size(); ++j)
          CHECK(f.graph.has_edge(unit[i], unit[j]));
      }
    }
    CHECK(static_cast<int>(covered.size()) == cores);
  }
}

TEST_CASE("unit offsets step by two") {
  Fabric f = build_kpp(8, 24);
  CHECK(f.prism_count == 9);
  for (int j = 0; j < f.prism_count; ++j) {
    CHECK(f.units[j].front() == 2 * j);
    CHECK(f.units[j].back() == 2 * j + 7);
  }
}

TEST_CASE("rail labels alternate a and b") {
  Fabric f = build_kpp(6, 10);
  CHECK(f.vertex_label(0) == "a1");
  CHECK(f.vertex_label(1) == "b1");
  CHECK(f.vertex_label(2) == "a2");
  CHECK(f.vertex_label(9) == "b5");
}

TEST_CASE("rail adjacency matches the built graph") {
  for (int unit : {4, 6, 8}) {
    Fabric f = build_kpp(unit, 30);
    for (VertexId p = 0; p < 30; ++p)
      for (VertexId q = p + 1; q < 30; ++q)
        CHECK(rail_adjacent(unit, p, q) == f.graph.has_edge(p, q));
  }
}

TEST_CASE("prism degree range") {
  Fabric f3 = build_kpp(4, 40);
  FabricStats st3 = fabric_stats(f3);
  CHECK(st3.max_degree == 5);  // the narrow prism caps fanout at five
  Fabric f5 = build_kpp(6, 40);
  FabricStats st5 = fabric_stats(f5);
  CHECK(st5.max_degree == 9);
  CHECK(st5.min_degree == 5);
  CHECK(st5.vertices == 40);
  CHECK(st5.edges == 168);
}

TEST_CASE("mesh construction") {
  Fabric m = build_mesh(4, 10);
  CHECK(m.graph.vertex_count() == 40);
  CHECK(m.graph.edge_count() == 66);
  CHECK(m.graph.diameter() == 12);
  CHECK(m.name() == "mesh-4x10");
  CHECK(m.vertex_label(0) == "r1c1");
  CHECK(m.vertex_label(39) == "r4c10");

  Fabric tiny = build_mesh(1, 3);
  CHECK(tiny.graph.edge_count() == 2);

  Fabric two = build_mesh(2, 2);
  CHECK(two.graph.edge_count() == 4);
  CHECK(two.graph.diameter() == 2);

  // canonical orientation
  Fabric swapped = build_mesh(10, 4);
  CHECK(swapped.rows == 4);
  CHECK(swapped.cols == 10);

  CHECK_THROWS_AS(build_mesh(0, 5), std::invalid_argument);
}

TEST_CASE("serpentine order walks rows back and forth") {
  // 3x4: row 0 left-to-right, row 1 right-to-left, row 2 left-to-right
  std::vector<VertexId> expect = {0, 1, 2, 3, 7, 6, 5, 4, 8, 9, 10, 11};
  for (int t = 0; t < 12; ++t) CHECK(serpentine_cell(t, 3, 4) == expect[t]);
  // consecutive cells are mesh neighbors
  Fabric m = build_mesh(3, 4);
  for (int t = 0; t + 1 < 12; ++t)
    CHECK(m.graph.has_edge(serpentine_cell(t, 3, 4),
                           serpentine_cell(t + 1, 3, 4)));
}
