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

#ifndef PRISMFAB_FABRIC_HPP_
#define PRISMFAB_FABRIC_HPP_

#include <string>
#include <vector>

#include "prismfab/graph.hpp"

namespace prismfab {

enum class FabricKind { kPrism, kMesh };

// A communication fabric: the physical core interconnect targets are mapped
// onto. Either a k-parallel-prism (overlapping complete units of size
// unit_size) or a rows x cols mesh.
struct Fabric {
  FabricKind kind = FabricKind::kPrism;
  Graph graph;

  // Prism fields.
  int unit_size = 0;
  int prism_count = 0;
  std::vector<std::vector<VertexId>> units;  // each induces a complete graph

  // Mesh fields (canonicalized so rows <= cols).
  int rows = 0;
  int cols = 0;

  // "a3"/"b3" rail names for prisms, "r1c4" for meshes.
  std::string vertex_label(VertexId v) const;
  std::string name() const;  // e.g. "3pp-40", "mesh-4x10"
};

struct FabricStats {
  int vertices = 0;
  int edges = 0;
  int min_degree = 0;
  int max_degree = 0;
  int diameter = 0;
  std::vector<int> degree_histogram;
};

// Complete graph on n vertices; the building block units are stitched from.
Graph unit_complete_graph(int n);

// Prism fabric on (at least) num_cores cores built from units of unit_size.
// unit_size must be even and >= 4; consecutive units share unit_size - 2
// cores, so the core count is rounded up to unit_size + 2k when needed.
Fabric build_kpp(int unit_size, int num_cores);

Fabric build_mesh(int rows, int cols);

FabricStats fabric_stats(const Fabric& f);

// Adjacency of rail positions p and q in a prism with the given unit size:
// |p-q| <= unit_size-2 always, |p-q| == unit_size-1 only from an even p.
bool rail_adjacent(int unit_size, VertexId p, VertexId q);

// Vertex id of the t-th cell when walking a rows x cols mesh row by row,
// alternating direction (left-to-right on even rows).
VertexId serpentine_cell(int t, int rows, int cols);

}  // namespace prismfab

#endif  // PRISMFAB_FABRIC_HPP_
