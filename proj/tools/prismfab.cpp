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

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "prismfab/casestudy.hpp"
#include "prismfab/export.hpp"
#include "prismfab/fabric.hpp"
#include "prismfab/generators.hpp"
#include "prismfab/mapper.hpp"
#include "prismfab/metrics.hpp"

namespace {

using namespace prismfab;

// Exit codes: 0 clean embedding, 1 usage or input error, 2 placed but with
// multi-hop routes (pipeline stalls), 3 no placement produced.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStalls = 2;
constexpr int kExitFailed = 3;

struct OutputSink {
  std::string dir;
  std::vector<std::string> formats;  // empty means everything

  bool wants(const std::string& fmt) const {
    if (dir.empty()) return false;
    if (formats.empty()) return true;
    for (const std::string& f : formats)
      if (f == fmt) return true;
    return false;
  }

  void write(const std::string& name, const std::string& content) const {
    std::filesystem::create_directories(dir);
    std::filesystem::path path = std::filesystem::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
  }

  void emit(const std::string& base, const std::string& fmt,
            const std::string& content) const {
    if (wants(fmt)) write(base + "." + fmt, content);
  }
};

struct FabricDesc {
  bool prism = true;
  int unit = 0;
  bool auto_size = false;
  int cores = 0;
  int rows = 0, cols = 0;
};

// kpp6:auto | kpp6:40 | mesh:4x10
FabricDesc parse_fabric_desc(const std::string& s) {
  FabricDesc d;
  if (s.rfind("kpp", 0) == 0) {
    size_t colon = s.find(':');
    if (colon == std::string::npos || colon == 3)
      throw std::invalid_argument("fabric descriptor needs kpp<unit>:<cores|auto>");
    d.prism = true;
    d.unit = std::stoi(s.substr(3, colon - 3));
    std::string rest = s.substr(colon + 1);
    if (rest == "auto") {
      d.auto_size = true;
    } else {
      d.cores = std::stoi(rest);
      if (d.cores <= 0) throw std::invalid_argument("core count must be positive");
    }
    return d;
  }
  if (s.rfind("mesh:", 0) == 0) {
    std::string rest = s.substr(5);
    size_t x = rest.find('x');
    if (x == std::string::npos)
      throw std::invalid_argument("fabric descriptor needs mesh:<rows>x<cols>");
    d.prism = false;
    d.rows = std::stoi(rest.substr(0, x));
    d.cols = std::stoi(rest.substr(x + 1));
    if (d.rows <= 0 || d.cols <= 0)
      throw std::invalid_argument("mesh dimensions must be positive");
    return d;
  }
  throw std::invalid_argument("unknown fabric descriptor: " + s);
}

// @file.arch loads a declaration file; anything else is a preset name.
NetGraph resolve_net(const std::string& spec, const Fabric* fabric,
                     std::string* label) {
  if (!spec.empty() && spec[0] == '@') {
    std::string path = spec.substr(1);
    ArchSpec arch = parse_archspec_file(path);
    *label = arch.name.empty()
                 ? std::filesystem::path(path).stem().string()
                 : arch.name;
    return consolidate(arch);
  }
  *label = spec;
  return build_network(spec, fabric);
}

int cmd_topo(const std::string& kind, int unit, int cores, int rows, int cols,
             const OutputSink& out) {
  Fabric f;
  if (kind == "kpp") {
    f = build_kpp(unit, cores);
  } else if (kind == "mesh") {
    f = build_mesh(rows, cols);
  } else {
    throw std::invalid_argument("unknown fabric kind: " + kind);
  }
  FabricStats st = fabric_stats(f);
  std::cout << f.name() << ": " << st.vertices << " vertices, " << st.edges
            << " edges, degree " << st.min_degree << ".." << st.max_degree
            << ", diameter " << st.diameter;
  if (f.kind == FabricKind::kPrism)
    std::cout << ", " << f.prism_count << " units";
  std::cout << "\n";
  out.emit("fabric", "json", dump_json(fabric_json(f)));
  out.emit("fabric", "dot", fabric_dot(f));
  return kExitOk;
}

int cmd_map(const std::string& net_spec, const std::string& fabric_spec,
            const std::string& strategy_spec, double budget,
            const OutputSink& out) {
  FabricDesc d = parse_fabric_desc(fabric_spec);
  // Probe fabric of the right kind so representation choices (densenet
  // window) see the real target before sizing is known.
  Fabric probe = d.prism ? build_kpp(d.unit, d.unit)
                         : build_mesh(d.rows, d.cols);
  std::string label;
  NetGraph net = resolve_net(net_spec, &probe, &label);

  Fabric fabric;
  if (d.prism && d.auto_size) {
    fabric = auto_sized_prism(d.unit, net);
  } else if (d.prism) {
    int cores = d.cores;
    if (cores < net.vertex_count()) {
      cores = net.vertex_count();
      std::cerr << "note: fabric grown to " << cores << " cores to fit "
                << label << "\n";
    }
    fabric = build_kpp(d.unit, cores);
  } else {
    int rows = d.rows, cols = d.cols;
    if (rows * cols < net.vertex_count()) {
      cols = (net.vertex_count() + rows - 1) / rows;
      std::cerr << "note: mesh grown to " << rows << "x" << cols
                << " to fit " << label << "\n";
    }
    fabric = build_mesh(rows, cols);
  }

  Strategy strategy = strategy_from_name(strategy_spec);
  HColorResult result =
      h_color(net, fabric, strategy, static_cast<long long>(budget));

  out.emit("fabric", "json", dump_json(fabric_json(fabric)));
  out.emit("net", "json", dump_json(netgraph_json(net)));
  out.emit("net", "dot", netgraph_dot(net));

  if (const Mapping* m = std::get_if<Mapping>(&result)) {
    MetricsReport rep = link_bandwidth(net, fabric, *m);
    rep.network = label;
    std::cout << label << " on " << fabric.name() << ": homomorphism via "
              << m->strategy_used << ", stage latency "
              << rep.stage_latency_cycles << ", max link bandwidth "
              << rat_str(rep.max_link_bandwidth_norm) << "\n";
    out.emit("mapping", "json", dump_json(mapping_json(net, *m)));
    out.emit("metrics", "json", dump_json(metrics_json(rep)));
    return kExitOk;
  }

  const Failure& fail = std::get<Failure>(result);
  if (strategy == Strategy::kAuto) {
    // Fall back to a stalled placement so the pipeline still runs.
    std::vector<VertexId> assignment =
        fill_assignment(net, fabric, fail.colored_prefix);
    Mapping m = route_edges(net, fabric, assignment);
    m.strategy_used = "fill+" + fail_reason_name(fail.reason);
    MetricsReport rep = link_bandwidth(net, fabric, m);
    rep.network = label;
    std::cout << label << " on " << fabric.name()
              << ": no clean embedding (" << fail_reason_name(fail.reason)
              << "), placed with stalls, stage latency "
              << rep.stage_latency_cycles << ", max link bandwidth "
              << rat_str(rep.max_link_bandwidth_norm) << "\n";
    out.emit("mapping", "json", dump_json(mapping_json(net, m)));
    out.emit("failure", "json", dump_json(failure_json(fail)));
    out.emit("metrics", "json", dump_json(metrics_json(rep)));
    return kExitStalls;
  }
  std::cout << label << " on " << fabric.name() << ": "
            << fail_reason_name(fail.reason) << " after "
            << fail.colored_prefix.size() << " placements\n";
  out.emit("failure", "json", dump_json(failure_json(fail)));
  return kExitFailed;
}

int cmd_compare(double budget, const OutputSink& out) {
  CompareOptions opt;
  if (budget > 0) opt.search_budget = static_cast<long long>(budget);
  ComparisonTable table = run_comparison(opt);
  for (const CompareCell& c : table.cells) {
    std::cout << c.network << " on " << c.fabric << ": "
              << (c.homomorphism ? "clean" : c.mapped ? "stalls" : "failed")
              << " (" << c.outcome << "), latency " << c.stage_latency
              << ", max bandwidth " << rat_str(c.max_bandwidth) << ", links "
              << c.links_used << "/" << c.fabric_links << "\n";
  }
  for (const RatioSummary& r : table.ratios) {
    std::cout << r.name << " = " << rat_str(r.value) << " ("
              << boost::rational_cast<double>(r.value) << ")\n";
  }
  out.emit("comparison", "json", dump_json(comparison_json(table)));
  out.emit("comparison", "csv", comparison_csv(table));
  out.emit("comparison", "svg", comparison_svg(table));
  return kExitOk;
}

int cmd_casestudy(int rows, int cols, int bits, double cycle_ns, int crossbar,
                  const OutputSink& out) {
  NetGraph net = build_network("resnet32");
  if (rows * cols < net.vertex_count()) {
    throw std::invalid_argument(
        "grid too small: need " + std::to_string(net.vertex_count()) +
        " cores, got " + std::to_string(rows * cols));
  }
  Fabric fabric = build_kpp(6, rows * cols);
  HColorResult result = h_color(net, fabric);
  const Mapping* m = std::get_if<Mapping>(&result);
  if (!m) throw std::runtime_error("placement failed on the core array");

  CorePlacement placement = place_on_grid(net, *m, rows, cols);
  placement.bits_act = bits;
  placement.cycle_ns = cycle_ns;
  placement.crossbar_dim = crossbar;
  PhysicalEstimate est = estimate_physical(placement, net);
  MetricsReport rep = link_bandwidth(net, fabric, *m);
  rep.network = "resnet32";

  int green = 0, blue = 0, orange = 0, red = 0;
  for (const GridArrow& a : placement.arrows) {
    if (a.cls == "feedforward-green") ++green;
    else if (a.cls == "residual-blue") ++blue;
    else if (a.cls == "resampled-residual-orange") ++orange;
    else if (a.cls == "to-resampler-red") ++red;
  }
  std::cout << "resnet32 on " << rows << "x" << cols << " core array ("
            << fabric.name() << "): " << net.vertex_count()
            << " cores used, " << rows * cols - net.vertex_count()
            << " idle\n";
  std::cout << "arrows: " << green << " feedforward-green, " << blue
            << " residual-blue, " << orange << " resampled-residual-orange, "
            << red << " to-resampler-red\n";
  std::cout << "max link " << est.max_gbps << " Gbps ("
            << bits << "-bit activations, " << cycle_ns << " ns cycle)\n";
  for (const std::string& w : est.warnings)
    std::cout << "warning: " << w << "\n";
  out.emit("placement", "json", dump_json(placement_json(placement, net)));
  out.emit("physical", "json", dump_json(physical_json(est)));
  out.emit("placement", "svg", placement_svg(placement, net));
  out.emit("metrics", "json", dump_json(metrics_json(rep)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prism fabric construction, network consolidation and mapping"};
  app.require_subcommand(1);

  std::string out_dir;
  std::vector<std::string> formats;
  long long seed = 0;  // reserved; all tie-breaking is deterministic
  app.add_option("--out", out_dir, "directory for generated files");
  app.add_option("--format", formats,
                 "restrict outputs (json,csv,svg,dot), default all")
      ->delimiter(',');
  app.add_option("--seed", seed, "reserved, accepted for compatibility");

  auto* topo = app.add_subcommand("topo", "build a fabric and report stats");
  topo->fallthrough();  // lets --out/--format appear after the subcommand
  std::string kind = "kpp";
  int unit = 6, cores = 40, rows = 4, cols = 10;
  topo->add_option("--kind", kind, "kpp or mesh");
  topo->add_option("--unit", unit, "prism unit size (even, >= 4)");
  topo->add_option("--cores", cores, "minimum core count");
  topo->add_option("--rows", rows, "mesh rows");
  topo->add_option("--cols", cols, "mesh cols");

  auto* map_cmd = app.add_subcommand("map", "color a network onto a fabric");
  map_cmd->fallthrough();
  std::string net_spec = "resnet32";
  std::string fabric_spec = "kpp6:auto";
  std::string strategy_spec = "auto";
  double budget = 0;
  map_cmd->add_option("--net", net_spec, "preset name or @file.arch");
  map_cmd->add_option("--fabric", fabric_spec, "kpp<unit>:<cores|auto> or mesh:<R>x<C>");
  map_cmd->add_option("--strategy", strategy_spec,
                      "auto|path|resnet|densenet|inception|backtrack");
  map_cmd->add_option("--budget", budget, "search node budget, e.g. 1e6");

  auto* compare = app.add_subcommand("compare", "fabric comparison study");
  compare->fallthrough();
  double cmp_budget = 0;
  compare->add_option("--budget", cmp_budget, "per-cell search budget");

  auto* casestudy =
      app.add_subcommand("casestudy", "residual network on a core array");
  casestudy->fallthrough();
  int cs_rows = 4, cs_cols = 10, cs_bits = 8, cs_crossbar = 576;
  double cs_cycle = 100.0;
  casestudy->add_option("--rows", cs_rows, "core array rows");
  casestudy->add_option("--cols", cs_cols, "core array cols");
  casestudy->add_option("--bits", cs_bits, "activation bits");
  casestudy->add_option("--cycle-ns", cs_cycle, "cycle time in ns");
  casestudy->add_option("--crossbar", cs_crossbar, "crossbar dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  OutputSink out{out_dir, formats};
  try {
    if (topo->parsed()) return cmd_topo(kind, unit, cores, rows, cols, out);
    if (map_cmd->parsed())
      return cmd_map(net_spec, fabric_spec, strategy_spec, budget, out);
    if (compare->parsed()) return cmd_compare(cmp_budget, out);
    if (casestudy->parsed())
      return cmd_casestudy(cs_rows, cs_cols, cs_bits, cs_cycle, cs_crossbar,
                           out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
