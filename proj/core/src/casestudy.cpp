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

#include "prismfab/casestudy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace prismfab {

std::string arrow_class_name(const PayloadComponent& c, const NetGraph& net) {
  switch (c.origin) {
    case Origin::kFeedforward:
      return "feedforward-green";
    case Origin::kResidual:
      // A residual produced by a resampling layer was rerouted through it
      // and arrives with adjusted shape.
      if (net.vertices[c.producer].resample) return "resampled-residual-orange";
      return "residual-blue";
    case Origin::kResample:
      return "to-resampler-red";
    case Origin::kConcat:
      return "concat";
    case Origin::kHop:
      return "hop";
  }
  return "unknown";
}

CorePlacement place_on_grid(const NetGraph& net, const Mapping& m, int rows,
                            int cols) {
  if (rows <= 0 || cols <= 0)
    throw std::invalid_argument("grid dimensions must be positive");
  if (m.assignment.size() != static_cast<size_t>(net.vertex_count()))
    throw std::invalid_argument("mapping does not cover the network");
  CorePlacement p;
  p.rows = rows;
  p.cols = cols;
  p.cell.resize(m.assignment.size());
  for (size_t v = 0; v < m.assignment.size(); ++v) {
    int pos = m.assignment[v];
    if (pos < 0 || pos >= rows * cols)
      throw std::invalid_argument("grid too small for placement");
    p.cell[v] = pos;
  }
  for (const NetEdge& edge : net.edges) {
    int fc = p.cell[edge.src];
    int tc = p.cell[edge.dst];
    for (const PayloadComponent& c : edge.components) {
      GridArrow a;
      a.src = edge.src;
      a.dst = edge.dst;
      a.from_r = fc / cols;
      a.from_c = fc % cols;
      a.to_r = tc / cols;
      a.to_c = tc % cols;
      a.cls = arrow_class_name(c, net);
      a.channels = c.channels;
      p.arrows.push_back(a);
    }
  }
  return p;
}

PhysicalEstimate estimate_physical(const CorePlacement& p,
                                   const NetGraph& net) {
  if (p.cycle_ns <= 0 || p.bits_act <= 0 || p.crossbar_dim <= 0)
    throw std::invalid_argument("physical parameters not set");
  PhysicalEstimate est;
  for (const GridArrow& a : p.arrows) {
    PhysicalEstimate::LinkGbps row;
    row.src = a.src;
    row.dst = a.dst;
    row.cls = a.cls;
    row.gbps = static_cast<double>(a.channels) * p.bits_act / p.cycle_ns;
    est.max_gbps = std::max(est.max_gbps, row.gbps);
    est.per_link_gbps.push_back(row);
  }
  std::vector<std::vector<int>> incoming = net.in_edges();
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    const NetVertex& layer = net.vertices[v];
    long long c_in = 0;
    bool has_input = false;
    for (int ei : incoming[v]) {
      for (const PayloadComponent& c : net.edges[ei].components) {
        has_input = true;
        if (c.origin != Origin::kResidual) c_in += c.channels;
      }
    }
    if (!has_input) c_in = 3;  // sensor input, RGB planes
    long long window = static_cast<long long>(layer.kernel) * layer.kernel;
    PhysicalEstimate::MemoryRow row;
    row.layer = layer.name;
    row.input_bytes = window * c_in * p.bits_act / 8;
    row.crossbar_ok =
        window * c_in <= p.crossbar_dim && layer.channels <= p.crossbar_dim;
    if (!row.crossbar_ok) {
      std::ostringstream w;
      w << "layer " << layer.name << ": kernel^2*C_in = " << window * c_in
        << ", C_out = " << layer.channels << " vs crossbar "
        << p.crossbar_dim;
      est.warnings.push_back(w.str());
    }
    est.per_core_input_memory.push_back(row);
  }
  return est;
}

namespace {

const char* class_color(const std::string& cls) {
  if (cls == "feedforward-green") return "#2e8b57";
  if (cls == "residual-blue") return "#1f5fd0";
  if (cls == "resampled-residual-orange") return "#e8821e";
  if (cls == "to-resampler-red") return "#cc2f2f";
  if (cls == "concat") return "#7a3fb8";
  return "#888888";
}

int class_offset(const std::string& cls) {
  if (cls == "residual-blue") return 5;
  if (cls == "resampled-residual-orange") return -5;
  if (cls == "to-resampler-red") return 10;
  if (cls == "concat") return 5;
  if (cls == "hop") return -5;
  return 0;
}

}  // namespace

std::string placement_svg(const CorePlacement& p, const NetGraph& net) {
  const int cell = 84;
  const int pad = 24;
  int width = p.cols * cell + 2 * pad;
  int height = p.rows * cell + 2 * pad;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  svg << "<defs><marker id=\"tip\" markerWidth=\"7\" markerHeight=\"7\" "
         "refX=\"6\" refY=\"3\" orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" "
         "fill=\"context-stroke\"/></marker></defs>\n";
  std::vector<int> used(p.rows * p.cols, -1);
  for (size_t v = 0; v < p.cell.size(); ++v) used[p.cell[v]] = (int)v;
  for (int r = 0; r < p.rows; ++r) {
    for (int c = 0; c < p.cols; ++c) {
      int x = pad + c * cell;
      int y = pad + r * cell;
      int v = used[r * p.cols + c];
      svg << "<rect x=\"" << x + 4 << "\" y=\"" << y + 4 << "\" width=\""
          << cell - 8 << "\" height=\"" << cell - 8
          << "\" rx=\"6\" fill=\"" << (v >= 0 ? "#f4f7ff" : "#ededed")
          << "\" stroke=\"#444\"/>\n";
      if (v >= 0) {
        svg << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 4
            << "\" text-anchor=\"middle\" font-family=\"monospace\" "
               "font-size=\"11\">"
            << net.vertices[v].name << "</text>\n";
      }
    }
  }
  for (const GridArrow& a : p.arrows) {
    int off = class_offset(a.cls);
    double x1 = pad + a.from_c * cell + cell / 2.0 + off;
    double y1 = pad + a.from_r * cell + cell / 2.0 + off;
    double x2 = pad + a.to_c * cell + cell / 2.0 + off;
    double y2 = pad + a.to_r * cell + cell / 2.0 + off;
    // pull the endpoints toward each other so tips stay visible
    double dx = x2 - x1, dy = y2 - y1;
    double len = std::sqrt(dx * dx + dy * dy);
    if (len > 1) {
      double trim = std::min(0.30, 30.0 / len);
      x1 += dx * trim;
      y1 += dy * trim;
      x2 -= dx * trim;
      y2 -= dy * trim;
    }
    svg << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
        << "\" y2=\"" << y2 << "\" stroke=\"" << class_color(a.cls)
        << "\" stroke-width=\"2\" marker-end=\"url(#tip)\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace prismfab
