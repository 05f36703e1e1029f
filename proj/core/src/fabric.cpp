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

#include "prismfab/fabric.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace prismfab {

std::string Fabric::vertex_label(VertexId v) const {
  if (kind == FabricKind::kPrism) {
    // Even ids sit on the a rail, odd ids on the b rail, 1-based.
    int slot = v / 2 + 1;
    return (v % 2 == 0 ? "a" : "b") + std::to_string(slot);
  }
  return "r" + std::to_string(v / cols + 1) + "c" + std::to_string(v % cols + 1);
}

std::string Fabric::name() const {
  if (kind == FabricKind::kPrism) {
    // A unit of n cores exposes n-1 parallel slots once the pipeline folds
    // onto the rails, hence the k in "kPP" is unit_size - 1.
    int k = unit_size - 1;
    return std::to_string(k) + "pp-" + std::to_string(graph.vertex_count());
  }
  return "mesh-" + std::to_string(rows) + "x" + std::to_string(cols);
}

Graph unit_complete_graph(int n) {
  if (n < 2) throw std::invalid_argument("unit size must be at least 2");
  Graph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

bool rail_adjacent(int unit_size, VertexId p, VertexId q) {
  if (p == q) return false;
  int d = std::abs(p - q);
  if (d <= unit_size - 2) return true;
  return d == unit_size - 1 && std::min(p, q) % 2 == 0;
}

Fabric build_kpp(int unit_size, int num_cores) {
  if (unit_size < 4 || unit_size % 2 != 0)
    throw std::invalid_argument("unit size must be even and >= 4");
  if (num_cores < unit_size)
    throw std::invalid_argument("core count below a single unit");
  // Each unit after the first contributes exactly two fresh cores.
  int prism_count = (num_cores - unit_size + 1) / 2 + 1;
  int n = unit_size + 2 * (prism_count - 1);

  Fabric f;
  f.kind = FabricKind::kPrism;
  f.unit_size = unit_size;
  f.prism_count = prism_count;
  f.graph = Graph(n);
  for (int j = 0; j < prism_count; ++j) {
    std::vector<VertexId> unit(unit_size);
    for (int i = 0; i < unit_size; ++i) {
      unit[i] = 2 * j + i;
      for (int k = 0; k < i; ++k) f.graph.add_edge(unit[k], unit[i]);
    }
    f.units.push_back(std::move(unit));
  }
  return f;
}

Fabric build_mesh(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("mesh dims must be positive");
  if (rows > cols) std::swap(rows, cols);
  Fabric f;
  f.kind = FabricKind::kMesh;
  f.rows = rows;
  f.cols = cols;
  f.graph = Graph(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      VertexId v = r * cols + c;
      if (c + 1 < cols) f.graph.add_edge(v, v + 1);
      if (r + 1 < rows) f.graph.add_edge(v, v + cols);
    }
  }
  return f;
}

FabricStats fabric_stats(const Fabric& f) {
  FabricStats s;
  s.vertices = f.graph.vertex_count();
  s.edges = f.graph.edge_count();
  s.degree_histogram = f.graph.degree_histogram();
  s.min_degree = s.vertices;
  for (VertexId v = 0; v < s.vertices; ++v) {
    s.min_degree = std::min(s.min_degree, f.graph.degree(v));
    s.max_degree = std::max(s.max_degree, f.graph.degree(v));
  }
  s.diameter = f.graph.diameter();
  return s;
}

VertexId serpentine_cell(int t, int rows, int cols) {
  if (t < 0 || t >= rows * cols) throw std::invalid_argument("cell index out of range");
  int r = t / cols;
  int c = t % cols;
  if (r % 2 == 1) c = cols - 1 - c;
  return r * cols + c;
}

}  // namespace prismfab
