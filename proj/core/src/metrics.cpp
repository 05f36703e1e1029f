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

#include "prismfab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "prismfab/generators.hpp"

namespace prismfab {

int stage_latency(const Mapping& m) {
  size_t longest = 2;
  for (const auto& route : m.routes)
    longest = std::max(longest, route.size());
  return static_cast<int>(longest) - 1;
}

MetricsReport link_bandwidth(const NetGraph& net, const Fabric& fabric,
                             const Mapping& m, int c_max, int cycle_T) {
  if (m.routes.size() != net.edges.size())
    throw std::invalid_argument("mapping routes do not match net edges");
  if (c_max <= 0) c_max = net.max_channels();
  if (cycle_T < 1) throw std::invalid_argument("cycle_T must be positive");

  MetricsReport r;
  r.fabric = fabric.name();
  r.stage_latency_cycles = stage_latency(m);
  r.total_fabric_links = fabric.graph.edge_count();

  std::map<std::pair<VertexId, VertexId>, long long> load;
  long long max_component = 0;
  for (size_t i = 0; i < net.edges.size(); ++i) {
    long long payload = net.edges[i].payload();
    for (const PayloadComponent& c : net.edges[i].components)
      max_component = std::max(max_component, static_cast<long long>(c.channels));
    const auto& route = m.routes[i];
    for (size_t j = 0; j + 1 < route.size(); ++j) {
      VertexId a = std::min(route[j], route[j + 1]);
      VertexId b = std::max(route[j], route[j + 1]);
      load[{a, b}] += payload;
    }
  }
  long long denom = static_cast<long long>(c_max) * cycle_T;
  Rat max_bw(0);
  for (const auto& [link, payload] : load) {
    Rat bw(payload, denom);
    r.per_link_bandwidth.push_back({link.first, link.second, bw});
    max_bw = std::max(max_bw, bw);
  }
  r.max_link_bandwidth_norm = max_bw;
  r.max_component_bandwidth_norm = Rat(max_component, denom);
  r.total_links_used = static_cast<int>(load.size());
  return r;
}

Rat densenet_bandwidth_bound(int growth, int block_size, int unit_size,
                             int cycle_T) {
  if (growth < 1 || block_size < 1 || cycle_T < 1)
    throw std::invalid_argument("growth, block size and cycle must be positive");
  if (unit_size < 4 || unit_size % 2 != 0)
    throw std::invalid_argument("unit size must be even and >= 4");
  long long rounds = 0;
  long long over = block_size - unit_size;
  if (over > 0) rounds = (over + unit_size - 3) / (unit_size - 2);
  return Rat(growth * (1 + rounds), cycle_T);
}

SimResult simulate_pipeline(const NetGraph& net, const Fabric& fabric,
                            const Mapping& m, int num_waves, int c_max,
                            int cycle_T) {
  if (num_waves < 1) throw std::invalid_argument("need at least one wave");
  if (m.routes.size() != net.edges.size())
    throw std::invalid_argument("mapping routes do not match net edges");
  if (c_max <= 0) c_max = net.max_channels();

  int n = net.vertex_count();
  // Evaluation order that resolves dependencies within a wave.
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return net.vertices[a].depth < net.vertices[b].depth;
  });

  std::vector<long long> out_interval(n, 1);
  for (size_t i = 0; i < net.edges.size(); ++i) {
    long long hops = static_cast<long long>(m.routes[i].size()) - 1;
    out_interval[net.edges[i].src] =
        std::max(out_interval[net.edges[i].src], hops);
  }

  std::map<std::pair<VertexId, VertexId>, long long> traffic;
  std::vector<long long> prev(n, 0), cur(n, 0);
  std::vector<std::vector<int>> incoming = net.in_edges();
  long long prev_total = 0;
  SimResult res;
  res.num_waves = num_waves;
  for (int w = 1; w <= num_waves; ++w) {
    for (VertexId v : order) cur[v] = prev[v] + out_interval[v];
    for (VertexId v : order) {
      for (int ei : incoming[v]) {
        long long hops = static_cast<long long>(m.routes[ei].size()) - 1;
        cur[v] = std::max(cur[v], cur[net.edges[ei].src] + hops);
      }
    }
    // The wave's transfers cross every link of their route once.
    for (size_t i = 0; i < net.edges.size(); ++i) {
      const auto& route = m.routes[i];
      long long payload = net.edges[i].payload();
      for (size_t j = 0; j + 1 < route.size(); ++j) {
        VertexId a = std::min(route[j], route[j + 1]);
        VertexId b = std::max(route[j], route[j + 1]);
        traffic[{a, b}] += payload;
      }
    }
    long long total = 0;
    for (VertexId v : order) total = std::max(total, cur[v]);
    res.steady_cycles_per_wave = total - prev_total;
    prev_total = total;
    prev = cur;
  }
  res.total_cycles = prev_total;
  long long denom =
      static_cast<long long>(c_max) * cycle_T * num_waves;
  for (const auto& [link, t] : traffic)
    res.per_link_traffic.push_back({link.first, link.second, Rat(t, denom)});
  return res;
}

std::vector<std::pair<int, int>> mesh_shapes_for(int n) {
  std::vector<std::pair<int, int>> shapes;
  auto add = [&](int rows) {
    int cols = (n + rows - 1) / rows;
    if (rows > cols) std::swap(rows, cols);
    std::pair<int, int> s{rows, cols};
    if (std::find(shapes.begin(), shapes.end(), s) == shapes.end())
      shapes.push_back(s);
  };
  add(1);
  add(2);
  add(4);
  add(std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n)))));
  return shapes;
}

namespace {

CompareCell make_cell(const std::string& net_name, const NetGraph& net,
                      const Fabric& fabric, long long budget) {
  CompareCell cell;
  cell.network = net_name;
  cell.fabric = fabric.name();
  cell.fabric_vertices = fabric.graph.vertex_count();
  cell.fabric_links = fabric.graph.edge_count();
  cell.fabric_diameter = fabric.graph.diameter();

  HColorResult r = h_color(net, fabric, Strategy::kAuto, budget);
  Mapping mapping;
  if (auto* ok = std::get_if<Mapping>(&r)) {
    mapping = *ok;
    cell.homomorphism = true;
    cell.outcome = ok->strategy_used;
  } else {
    const Failure& f = std::get<Failure>(r);
    cell.outcome = fail_reason_name(f.reason);
    mapping = route_edges(net, fabric,
                          fill_assignment(net, fabric, f.colored_prefix));
  }
  cell.mapped = true;
  MetricsReport mr = link_bandwidth(net, fabric, mapping);
  cell.stage_latency = mr.stage_latency_cycles;
  cell.max_bandwidth = mr.max_link_bandwidth_norm;
  cell.links_used = mr.total_links_used;
  return cell;
}

}  // namespace

ComparisonTable run_comparison(const CompareOptions& opt) {
  ComparisonTable table;
  // (network, 5pp latency) for the mesh penalty summary.
  std::map<std::string, int> prism_latency;
  std::map<std::string, const CompareCell*> dn_by_unit;

  for (const std::string& name : opt.networks) {
    for (int unit : opt.prism_units) {
      Fabric probe = build_kpp(unit, unit);
      NetGraph net = build_network(name, &probe);
      Fabric fabric = auto_sized_prism(unit, net);
      table.cells.push_back(make_cell(name, net, fabric, opt.search_budget));
      if (unit == 6) prism_latency[name] = table.cells.back().stage_latency;
    }
    if (opt.include_meshes) {
      Fabric probe = build_mesh(1, 1);
      int n = build_network(name, &probe).vertex_count();
      for (auto [rows, cols] : mesh_shapes_for(n)) {
        Fabric fabric = build_mesh(rows, cols);
        NetGraph net = build_network(name, &fabric);
        table.cells.push_back(make_cell(name, net, fabric, opt.search_budget));
      }
    }
  }

  // Summary ratios over the dense network's row.
  const CompareCell* dn5 = nullptr;
  const CompareCell* dn7 = nullptr;
  const CompareCell* dn_best_mesh = nullptr;
  for (const CompareCell& c : table.cells) {
    if (c.network != "densenet201") continue;
    if (c.fabric.rfind("5pp-", 0) == 0) dn5 = &c;
    if (c.fabric.rfind("7pp-", 0) == 0) dn7 = &c;
    if (c.fabric.rfind("mesh-", 0) == 0) {
      if (!dn_best_mesh ||
          std::tuple(c.max_bandwidth, c.fabric_diameter, c.fabric_links) <
              std::tuple(dn_best_mesh->max_bandwidth,
                         dn_best_mesh->fabric_diameter,
                         dn_best_mesh->fabric_links))
        dn_best_mesh = &c;
    }
  }
  if (dn5 && dn7 && dn7->max_bandwidth > Rat(0)) {
    table.ratios.push_back(
        {"densenet_bandwidth_5pp_over_7pp",
         dn5->max_bandwidth / dn7->max_bandwidth});
    table.ratios.push_back(
        {"links_7pp_over_5pp", Rat(dn7->fabric_links, dn5->fabric_links)});
  }
  if (dn5 && dn_best_mesh && dn5->max_bandwidth > Rat(0)) {
    table.ratios.push_back(
        {"densenet_bandwidth_best_mesh_over_5pp",
         dn_best_mesh->max_bandwidth / dn5->max_bandwidth});
    table.ratios.push_back(
        {"links_5pp_over_best_mesh",
         Rat(dn5->fabric_links, dn_best_mesh->fabric_links)});
  }
  Rat worst(0);
  for (const CompareCell& c : table.cells) {
    if (c.fabric.rfind("mesh-", 0) != 0) continue;
    auto it = prism_latency.find(c.network);
    if (it == prism_latency.end() || it->second < 1) continue;
    worst = std::max(worst, Rat(c.stage_latency, it->second));
  }
  if (worst > Rat(0))
    table.ratios.push_back({"latency_best_improvement", worst});
  return table;
}

}  // namespace prismfab
