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

#include "prismfab/export.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace prismfab {

std::string rat_str(const Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json fabric_json(const Fabric& f) {
  Json j;
  j["kind"] = f.kind == FabricKind::kPrism ? "kpp" : "mesh";
  j["name"] = f.name();
  if (f.kind == FabricKind::kPrism) {
    j["unit_size"] = f.unit_size;
    j["prism_count"] = f.prism_count;
  } else {
    j["rows"] = f.rows;
    j["cols"] = f.cols;
  }
  j["vertices"] = f.graph.vertex_count();
  Json edges = Json::array();
  for (auto [u, v] : f.graph.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  if (f.kind == FabricKind::kPrism) {
    Json units = Json::array();
    for (const auto& unit : f.units) units.push_back(unit);
    j["units"] = std::move(units);
  }
  FabricStats st = fabric_stats(f);
  j["stats"] = Json{{"min_degree", st.min_degree},
                    {"max_degree", st.max_degree},
                    {"diameter", st.diameter}};
  return j;
}

Json netgraph_json(const NetGraph& net) {
  Json j;
  Json verts = Json::array();
  for (const NetVertex& v : net.vertices) {
    Json jv;
    jv["name"] = v.name;
    jv["channels"] = v.channels;
    jv["stride"] = v.stride;
    jv["kernel"] = v.kernel;
    if (v.pool > 0) jv["pool"] = v.pool;
    if (v.resample) jv["resample"] = true;
    jv["depth"] = v.depth;
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (const NetEdge& e : net.edges) {
    Json je;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["payload"] = e.payload();
    Json comps = Json::array();
    for (const PayloadComponent& c : e.components) {
      comps.push_back(Json{{"origin", origin_name(c.origin)},
                           {"producer", c.producer},
                           {"channels", c.channels}});
    }
    je["components"] = std::move(comps);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

namespace {

std::string edge_origin_label(const NetEdge& e) {
  std::vector<std::string> seen;
  for (const PayloadComponent& c : e.components) {
    std::string n = origin_name(c.origin);
    if (std::find(seen.begin(), seen.end(), n) == seen.end())
      seen.push_back(n);
  }
  std::string out;
  for (size_t i = 0; i < seen.size(); ++i) {
    if (i) out += "+";
    out += seen[i];
  }
  return out;
}

}  // namespace

Json mapping_json(const NetGraph& net, const Mapping& m) {
  Json j;
  Json assign = Json::array();
  for (size_t v = 0; v < m.assignment.size(); ++v)
    assign.push_back(Json::array({static_cast<int>(v), m.assignment[v]}));
  j["assignment"] = std::move(assign);
  Json routes = Json::array();
  for (size_t e = 0; e < m.routes.size(); ++e) {
    const NetEdge& edge = net.edges[e];
    Json jr;
    jr["edge"] = Json::array({edge.src, edge.dst});
    jr["path"] = m.routes[e];
    jr["origin"] = edge_origin_label(edge);
    routes.push_back(std::move(jr));
  }
  j["routes"] = std::move(routes);
  j["is_homomorphism"] = m.is_homomorphism;
  j["strategy_used"] = m.strategy_used;
  j["parity_trace"] = m.parity_trace;
  return j;
}

Json failure_json(const Failure& f) {
  Json j;
  j["reason"] = fail_reason_name(f.reason);
  Json prefix = Json::array();
  for (auto [nv, fv] : f.colored_prefix)
    prefix.push_back(Json::array({nv, fv}));
  j["colored_prefix"] = std::move(prefix);
  j["blocking_vertex"] = f.blocking_vertex;
  return j;
}

Json metrics_json(const MetricsReport& r) {
  Json j;
  j["network"] = r.network;
  j["fabric"] = r.fabric;
  j["stage_latency_cycles"] = r.stage_latency_cycles;
  j["max_link_bandwidth"] = rat_str(r.max_link_bandwidth_norm);
  j["max_component_bandwidth"] = rat_str(r.max_component_bandwidth_norm);
  j["total_links_used"] = r.total_links_used;
  j["total_fabric_links"] = r.total_fabric_links;
  Json links = Json::array();
  for (const LinkLoad& l : r.per_link_bandwidth) {
    links.push_back(
        Json{{"u", l.u}, {"v", l.v}, {"bandwidth", rat_str(l.bandwidth)}});
  }
  j["per_link_bandwidth"] = std::move(links);
  return j;
}

Json comparison_json(const ComparisonTable& t) {
  Json j;
  Json cells = Json::array();
  for (const CompareCell& c : t.cells) {
    Json jc;
    jc["network"] = c.network;
    jc["fabric"] = c.fabric;
    jc["fabric_vertices"] = c.fabric_vertices;
    jc["fabric_links"] = c.fabric_links;
    jc["fabric_diameter"] = c.fabric_diameter;
    jc["mapped"] = c.mapped;
    jc["homomorphism"] = c.homomorphism;
    jc["outcome"] = c.outcome;
    jc["stage_latency"] = c.stage_latency;
    jc["max_bandwidth"] = rat_str(c.max_bandwidth);
    jc["links_used"] = c.links_used;
    cells.push_back(std::move(jc));
  }
  j["cells"] = std::move(cells);
  Json ratios = Json::array();
  for (const RatioSummary& r : t.ratios) {
    ratios.push_back(Json{{"name", r.name},
                          {"value", rat_str(r.value)},
                          {"approx", boost::rational_cast<double>(r.value)}});
  }
  j["ratios"] = std::move(ratios);
  return j;
}

Json placement_json(const CorePlacement& p, const NetGraph& net) {
  Json j;
  j["rows"] = p.rows;
  j["cols"] = p.cols;
  j["params"] = Json{{"crossbar_dim", p.crossbar_dim},
                     {"cycle_ns", p.cycle_ns},
                     {"bits_act", p.bits_act}};
  Json cells = Json::array();
  for (size_t v = 0; v < p.cell.size(); ++v) {
    cells.push_back(Json{{"layer", net.vertices[v].name},
                         {"row", p.cell[v] / p.cols},
                         {"col", p.cell[v] % p.cols}});
  }
  j["cells"] = std::move(cells);
  j["unused_cells"] =
      p.rows * p.cols - static_cast<int>(p.cell.size());
  Json arrows = Json::array();
  for (const GridArrow& a : p.arrows) {
    arrows.push_back(Json{{"from", Json::array({a.from_r, a.from_c})},
                          {"to", Json::array({a.to_r, a.to_c})},
                          {"class", a.cls},
                          {"channels", a.channels}});
  }
  j["arrows"] = std::move(arrows);
  return j;
}

Json physical_json(const PhysicalEstimate& e) {
  Json j;
  j["max_gbps"] = e.max_gbps;
  Json links = Json::array();
  for (const auto& l : e.per_link_gbps) {
    links.push_back(Json{
        {"src", l.src}, {"dst", l.dst}, {"class", l.cls}, {"gbps", l.gbps}});
  }
  j["per_link_gbps"] = std::move(links);
  Json mem = Json::array();
  for (const auto& m : e.per_core_input_memory) {
    mem.push_back(Json{{"layer", m.layer},
                       {"input_bytes", m.input_bytes},
                       {"crossbar_ok", m.crossbar_ok}});
  }
  j["per_core_input_memory"] = std::move(mem);
  j["warnings"] = e.warnings;
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string comparison_csv(const ComparisonTable& t) {
  std::ostringstream out;
  out << "network,fabric,fabric_vertices,fabric_links,fabric_diameter,"
         "mapped,homomorphism,outcome,stage_latency,max_bandwidth,"
         "links_used\r\n";
  for (const CompareCell& c : t.cells) {
    out << csv_field(c.network) << ',' << csv_field(c.fabric) << ','
        << c.fabric_vertices << ',' << c.fabric_links << ','
        << c.fabric_diameter << ',' << (c.mapped ? "true" : "false") << ','
        << (c.homomorphism ? "true" : "false") << ',' << csv_field(c.outcome)
        << ',' << c.stage_latency << ',' << csv_field(rat_str(c.max_bandwidth))
        << ',' << c.links_used << "\r\n";
  }
  return out.str();
}

namespace {

const char* series_color(size_t i) {
  static const char* palette[] = {"#4c72b0", "#dd8452", "#55a868", "#c44e52",
                                  "#8172b3", "#937860", "#da8bc3", "#8c8c8c",
                                  "#ccb974", "#64b5cd"};
  return palette[i % 10];
}

std::string fmt_double(double v) {
  std::ostringstream out;
  out.precision(4);
  out << v;
  return out.str();
}

// One grouped bar panel; values indexed [network][fabric], <0 means absent.
void bar_panel(std::ostringstream& svg, int x0, int y0, int width, int height,
               const std::string& title,
               const std::vector<std::string>& groups,
               const std::vector<std::string>& series,
               const std::vector<std::vector<double>>& values) {
  double vmax = 1e-9;
  for (const auto& row : values)
    for (double v : row) vmax = std::max(vmax, v);
  int plot_h = height - 60;
  int plot_w = width - 40;
  svg << "<text x=\"" << x0 + 8 << "\" y=\"" << y0 + 16
      << "\" font-family=\"sans-serif\" font-size=\"14\" "
         "font-weight=\"bold\">"
      << title << "</text>\n";
  int base_y = y0 + 30 + plot_h;
  svg << "<line x1=\"" << x0 + 20 << "\" y1=\"" << base_y << "\" x2=\""
      << x0 + 20 + plot_w << "\" y2=\"" << base_y
      << "\" stroke=\"#333\"/>\n";
  double group_w = static_cast<double>(plot_w) / groups.size();
  double bar_w = group_w / (series.size() + 1);
  for (size_t g = 0; g < groups.size(); ++g) {
    double gx = x0 + 20 + g * group_w;
    for (size_t s = 0; s < series.size(); ++s) {
      double v = values[g][s];
      if (v < 0) continue;
      double h = v / vmax * plot_h;
      double bx = gx + bar_w / 2 + s * bar_w;
      svg << "<rect x=\"" << bx << "\" y=\"" << base_y - h << "\" width=\""
          << bar_w * 0.9 << "\" height=\"" << h << "\" fill=\""
          << series_color(s) << "\"/>\n";
      svg << "<text x=\"" << bx + bar_w * 0.45 << "\" y=\"" << base_y - h - 3
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"8\">"
          << fmt_double(v) << "</text>\n";
    }
    svg << "<text x=\"" << gx + group_w / 2 << "\" y=\"" << base_y + 14
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << groups[g] << "</text>\n";
  }
}

}  // namespace

std::string comparison_svg(const ComparisonTable& t) {
  std::vector<std::string> networks, fabrics;
  for (const CompareCell& c : t.cells) {
    if (std::find(networks.begin(), networks.end(), c.network) ==
        networks.end())
      networks.push_back(c.network);
    if (std::find(fabrics.begin(), fabrics.end(), c.fabric) == fabrics.end())
      fabrics.push_back(c.fabric);
  }
  std::vector<std::vector<double>> latency(
      networks.size(), std::vector<double>(fabrics.size(), -1));
  std::vector<std::vector<double>> bandwidth = latency;
  for (const CompareCell& c : t.cells) {
    size_t g = std::find(networks.begin(), networks.end(), c.network) -
               networks.begin();
    size_t s =
        std::find(fabrics.begin(), fabrics.end(), c.fabric) - fabrics.begin();
    latency[g][s] = c.stage_latency;
    bandwidth[g][s] = boost::rational_cast<double>(c.max_bandwidth);
  }
  const int panel_w = 960, panel_h = 280;
  int legend_h = 24 + 16 * ((fabrics.size() + 3) / 4);
  int height = 2 * panel_h + legend_h + 20;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << panel_w
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << panel_w << " "
      << height << "\">\n";
  svg << "<rect width=\"" << panel_w << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";
  bar_panel(svg, 0, 0, panel_w, panel_h, "pipeline stage latency (cycles)",
            networks, fabrics, latency);
  bar_panel(svg, 0, panel_h, panel_w, panel_h,
            "peak link bandwidth (channels per c_max cycle)", networks,
            fabrics, bandwidth);
  int ly = 2 * panel_h + 16;
  for (size_t s = 0; s < fabrics.size(); ++s) {
    int col = static_cast<int>(s % 4);
    int row = static_cast<int>(s / 4);
    int lx = 20 + col * 230;
    svg << "<rect x=\"" << lx << "\" y=\"" << ly + row * 16 - 9
        << "\" width=\"10\" height=\"10\" fill=\"" << series_color(s)
        << "\"/>\n";
    svg << "<text x=\"" << lx + 14 << "\" y=\"" << ly + row * 16
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << fabrics[s]
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string fabric_dot(const Fabric& f) {
  std::ostringstream out;
  out << "graph \"" << f.name() << "\" {\n";
  out << "  node [shape=circle fontsize=10];\n";
  if (f.kind == FabricKind::kPrism) {
    std::vector<bool> declared(f.graph.vertex_count(), false);
    for (size_t u = 0; u < f.units.size(); ++u) {
      out << "  subgraph cluster_u" << u + 1 << " {\n";
      out << "    label=\"unit " << u + 1 << "\";\n";
      for (VertexId v : f.units[u]) {
        if (declared[v]) continue;
        declared[v] = true;
        out << "    \"" << f.vertex_label(v) << "\";\n";
      }
      out << "  }\n";
    }
  }
  for (auto [u, v] : f.graph.edges()) {
    out << "  \"" << f.vertex_label(u) << "\" -- \"" << f.vertex_label(v)
        << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string netgraph_dot(const NetGraph& net) {
  std::ostringstream out;
  out << "digraph net {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box fontsize=10];\n";
  for (const NetVertex& v : net.vertices) {
    out << "  \"" << v.name << "\"";
    if (v.resample) out << " [style=dashed]";
    out << ";\n";
  }
  for (const NetEdge& e : net.edges) {
    // color by the most specific class any component carries
    std::string color = "#2e8b57";
    int rank = 0;
    for (const PayloadComponent& c : e.components) {
      std::string cls = arrow_class_name(c, net);
      int r = 0;
      if (cls == "concat") r = 1;
      else if (cls == "hop") r = 2;
      else if (cls == "residual-blue") r = 3;
      else if (cls == "resampled-residual-orange") r = 4;
      else if (cls == "to-resampler-red") r = 5;
      if (r > rank) {
        rank = r;
        if (cls == "concat") color = "#7a3fb8";
        else if (cls == "hop") color = "#888888";
        else if (cls == "residual-blue") color = "#1f5fd0";
        else if (cls == "resampled-residual-orange") color = "#e8821e";
        else if (cls == "to-resampler-red") color = "#cc2f2f";
      }
    }
    out << "  \"" << net.vertices[e.src].name << "\" -> \""
        << net.vertices[e.dst].name << "\" [color=\"" << color
        << "\" label=\"" << e.payload() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace prismfab
