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

#ifndef PRISMFAB_CASESTUDY_HPP_
#define PRISMFAB_CASESTUDY_HPP_

#include <string>
#include <vector>

#include "prismfab/mapper.hpp"
#include "prismfab/netgraph.hpp"

namespace prismfab {

// One inter-core transfer, a single payload component of a routed edge.
struct GridArrow {
  VertexId src = 0, dst = 0;  // net vertices
  int from_r = 0, from_c = 0;
  int to_r = 0, to_c = 0;
  std::string cls;  // feedforward-green, residual-blue,
                    // resampled-residual-orange, to-resampler-red,
                    // concat, hop
  int channels = 0;
};

struct CorePlacement {
  int rows = 0, cols = 0;
  std::vector<int> cell;  // net vertex -> flat grid cell (row*cols + col)
  std::vector<GridArrow> arrows;
  int crossbar_dim = 576;
  double cycle_ns = 100.0;
  int bits_act = 8;
};

// Class label for a payload component; residual components from a
// resampling producer get their own class.
std::string arrow_class_name(const PayloadComponent& c, const NetGraph& net);

// Lay the mapped network onto a rows x cols core array. Fabric positions
// fill the grid row-wise from the top left (raster order), so layer
// placement follows the fabric's construction order. Grid too small for
// any assigned position -> invalid_argument.
CorePlacement place_on_grid(const NetGraph& net, const Mapping& m, int rows,
                            int cols);

struct PhysicalEstimate {
  struct LinkGbps {
    VertexId src = 0, dst = 0;
    std::string cls;
    double gbps = 0;
  };
  struct MemoryRow {
    std::string layer;
    long long input_bytes = 0;
    bool crossbar_ok = true;
  };
  double max_gbps = 0;
  std::vector<LinkGbps> per_link_gbps;
  std::vector<MemoryRow> per_core_input_memory;
  std::vector<std::string> warnings;
};

// Physical traffic and storage estimates: each payload component is its
// own physical channel at channels*bits_act/cycle_ns Gbps; each core's
// input memory holds the kernel x kernel pixel neighborhood of its
// concatenated inputs (residual additions do not widen the input).
// Layers whose kernel^2 * C_in or C_out exceed the crossbar dimension get
// a warning, not an error.
PhysicalEstimate estimate_physical(const CorePlacement& p, const NetGraph& net);

// Grid rendering with class-colored arrows.
std::string placement_svg(const CorePlacement& p, const NetGraph& net);

}  // namespace prismfab

#endif  // PRISMFAB_CASESTUDY_HPP_
