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
#include <map>
#include <set>
#include <string>

#include "prismfab/fabric.hpp"
#include "prismfab/generators.hpp"
#include "prismfab/netgraph.hpp"

using namespace prismfab;

namespace {

size_t max_edge_components(const NetGraph& g) {
  size_t best = 0;
  for (const NetEdge& e : g.edges) best = std::max(best, e.components.size());
  return best;
}

int count_origin(const NetGraph& g, Origin o) {
  int n = 0;
  for (const NetEdge& e : g.edges)
    for (const PayloadComponent& c : e.components)
      if (c.origin == o) ++n;
  return n;
}

}  // namespace

TEST_CASE("feedforward chains") {
  ArchSpec ff = gen_feedforward(8);
  CHECK(ff.layers.size() == 8);
  CHECK(ff.links.size() == 7);
  CHECK(ff.layers[0].name == "l1");
  CHECK(ff.layers[0].channels == 64);
  NetGraph g = consolidate(ff);
  CHECK(g.vertex_count() == 8);
  CHECK(g.edges.size() == 7);
  for (const NetEdge& e : g.edges) CHECK(e.dst == e.src + 1);

  ArchSpec one = gen_feedforward(3, {16}, {5});
  CHECK(one.layers[2].channels == 16);
  CHECK(one.layers[1].kernel == 5);

  ArchSpec alex = gen_alexnet();
  CHECK(alex.layers.size() == 8);
  CHECK(alex.layers[0].channels == 96);
  CHECK(alex.layers[0].kernel == 11);
  CHECK(alex.layers.back().channels == 1000);
  CHECK(consolidate(alex).max_channels() == 4096);
}

TEST_CASE("resnet shape and arrow classes") {
  ArchSpec spec = gen_resnet(32);
  CHECK(spec.layers.size() == 33);
  CHECK(spec.layers[0].name == "c0");
  NetGraph g = consolidate(spec);
  CHECK(g.vertex_count() == 33);
  CHECK(g.edges.size() == 34);
  CHECK(count_origin(g, Origin::kFeedforward) == 30);
  CHECK(count_origin(g, Origin::kResidual) == 15);  // 13 merged + 2 adjusted
  CHECK(count_origin(g, Origin::kResample) == 2);
  CHECK(count_origin(g, Origin::kHop) == 0);

  // stage channel ladder
  CHECK(spec.layers[1].channels == 16);
  CHECK(spec.layers.back().channels == 64);

  // fanout beyond one only where a stream forks into the resampler
  auto outs = g.out_edges();
  int forks = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    CHECK(outs[v].size() <= 2);
    if (outs[v].size() == 2) {
      ++forks;
      CHECK(g.vertices[v].stride == 2);
    }
  }
  CHECK(forks == 2);

  CHECK(gen_resnet(20).layers.size() == 21);
  CHECK(gen_resnet(44).layers.size() == 45);
  CHECK_THROWS_AS(gen_resnet(33), std::invalid_argument);
  CHECK_THROWS_AS(gen_resnet(2), std::invalid_argument);
}

TEST_CASE("dense block representations") {
  // one block of six at unit six: every stream fits the window, so the
  // hybrid layout degenerates to the complete one
  DenseNetModel complete = gen_densenet({6}, DenseRep::kComplete);
  DenseNetModel hybrid6 = gen_densenet({6}, DenseRep::kHybrid, 6);
  CHECK(complete.net.edges.size() == 15);
  CHECK(hybrid6.net == complete.net);

  DenseNetModel path = gen_densenet({6}, DenseRep::kPath);
  CHECK(path.net.edges.size() == 5);
  // the final chain edge accumulates every older stream
  CHECK(path.net.edges.back().components.size() == 5);

  // one block of eight: two streams fall out of the window and get
  // forwarded round robin
  DenseNetModel hybrid8 = gen_densenet({8}, DenseRep::kHybrid, 6);
  CHECK(count_origin(hybrid8.net, Origin::kHop) == 4);
  CHECK(max_edge_components(hybrid8.net) == 2);

  // every hybrid edge respects the rail window of its unit
  for (int unit : {4, 6, 8}) {
    DenseNetModel m = gen_densenet({6, 12, 48, 32}, DenseRep::kHybrid, unit);
    for (const NetEdge& e : m.net.edges)
      CHECK(rail_adjacent(unit, std::min(e.src, e.dst),
                          std::max(e.src, e.dst)));
  }
}

TEST_CASE("dense 201-layer chain") {
  DenseNetModel m = gen_densenet({6, 12, 48, 32}, DenseRep::kHybrid, 6);
  CHECK(m.net.vertex_count() == 101);
  CHECK(m.arch.name == "densenet201");
  CHECK(m.arch.layers[0].name == "b1l1");
  CHECK(m.arch.layers[6].name == "t1");
  CHECK(m.arch.layers[19].name == "t2");
  CHECK(m.arch.layers[68].name == "t3");
  CHECK(m.arch.layers[100].name == "b4l32");

  // the third transition consumes the whole 48-layer block plus its input
  CHECK(max_edge_components(m.net) == 13);
  CHECK(max_edge_components(gen_densenet({6, 12, 48, 32}, DenseRep::kHybrid, 8)
                                .net) == 9);
  CHECK(max_edge_components(gen_densenet({6, 12, 48, 32}, DenseRep::kHybrid, 4)
                                .net) == 25);
  CHECK(max_edge_components(gen_densenet({6, 12, 48, 32}, DenseRep::kPath)
                                .net) == 49);

  // every stream a consumer needs arrives exactly once
  std::map<int, std::set<int>> got;
  for (const NetEdge& e : m.net.edges) {
    for (const PayloadComponent& c : e.components) {
      CHECK(got[e.dst].insert(c.producer).second);  // no duplicates
    }
  }
}

TEST_CASE("dense declaration consolidates to the complete form") {
  // the arch text is representation-free; rule consolidation must
  // reproduce the complete graph since every pair has a two-step detour
  DenseNetModel m = gen_densenet({4, 6}, DenseRep::kComplete);
  NetGraph from_arch = consolidate(m.arch);
  CHECK(from_arch.vertex_count() == m.net.vertex_count());
  REQUIRE(from_arch.edges.size() == m.net.edges.size());
  for (const NetEdge& e : m.net.edges) {
    int i = from_arch.edge_index(e.src, e.dst);
    REQUIRE(i >= 0);
    CHECK(from_arch.edges[i].payload() == e.payload());
  }
}

namespace {

struct BlockTag {
  int block = 0;   // 0 when not an i-block vertex
  char branch = 0;
  int pos = 0;
};

BlockTag parse_block(const std::string& name) {
  BlockTag t;
  if (name.size() < 3 || name[0] != 'i' || !isdigit(name[1])) return t;
  size_t i = 1;
  while (i < name.size() && isdigit(name[i])) ++i;
  if (i >= name.size() || name[i] < 'a' || name[i] > 'd') return t;
  t.block = std::stoi(name.substr(1, i - 1));
  t.branch = name[i];
  t.pos = std::stoi(name.substr(i + 1));
  return t;
}

}  // namespace

TEST_CASE("inception v4 and the emergent connectors") {
  Fabric probe = build_kpp(6, 6);
  NetGraph g = build_network("inception_v4", &probe);
  CHECK(g.vertex_count() == 146);
  // the heaviest edges collect one stream per merged branch
  CHECK(max_edge_components(g) == 4);

  // connectors between consecutive blocks, measured from the consolidated
  // edges: sources x heads must form a complete bipartite block
  std::vector<std::string> connectors;
  for (int k = 1; k <= 17; ++k) {
    std::set<int> heads;
    for (int v = 0; v < g.vertex_count(); ++v) {
      BlockTag t = parse_block(g.vertices[v].name);
      if (t.block == k && t.pos == 1) heads.insert(v);
    }
    REQUIRE(!heads.empty());
    std::set<int> srcs;
    for (const NetEdge& e : g.edges)
      if (heads.count(e.dst)) srcs.insert(e.src);
    for (int s : srcs)
      for (int h : heads) CHECK(g.has_edge(s, h));
    connectors.push_back("K" + std::to_string(srcs.size()) +
                         std::to_string(heads.size()));
  }
  std::vector<std::string> expect = {
      "K22", "K14", "K14", "K14", "K14", "K12", "K14", "K14", "K14",
      "K14", "K14", "K14", "K14", "K12", "K14", "K24", "K21"};
  CHECK(connectors == expect);

  // at most four branches anywhere
  std::map<int, std::set<char>> branches;
  for (const NetVertex& v : g.vertices) {
    BlockTag t = parse_block(v.name);
    if (t.block) branches[t.block].insert(t.branch);
  }
  CHECK(branches.size() == 17);
  for (const auto& [k, b] : branches) CHECK(b.size() <= 4);
}

TEST_CASE("inception residual variants") {
  Fabric probe = build_kpp(6, 6);
  NetGraph v1 = build_network("inception_resnet_v1", &probe);
  CHECK(v1.vertex_count() == 43);
  // single-branch blocks: shortcuts merge onto the carrier, no extra edges
  CHECK(count_origin(v1, Origin::kResidual) == 20);

  NetGraph v2 = build_network("inception_resnet_v2", &probe);
  CHECK(v2.vertex_count() == 63);
  CHECK(count_origin(v2, Origin::kResidual) == 20);

  // forked stem of five plus ten vertices per four-branch block
  CHECK(build_network("inception_v1", &probe).vertex_count() == 95);
  CHECK(build_network("inception_v3", &probe).vertex_count() == 115);
}

TEST_CASE("build_network dispatch") {
  CHECK(build_network("resnet32").vertex_count() == 33);
  CHECK(build_network("resnet44").vertex_count() == 45);
  CHECK(build_network("alexnet").vertex_count() == 8);

  // densenet follows the fabric: hybrid on prisms, path elsewhere
  Fabric prism = build_kpp(6, 6);
  Fabric mesh = build_mesh(4, 10);
  CHECK(max_edge_components(build_network("densenet201", &prism)) == 13);
  CHECK(max_edge_components(build_network("densenet201", &mesh)) == 49);
  CHECK(max_edge_components(build_network("densenet201")) == 49);
  CHECK(max_edge_components(build_network("densenet201:complete", &prism)) ==
        1);
  CHECK(max_edge_components(build_network("densenet201:path", &prism)) == 49);

  CHECK_THROWS_AS(build_network("lenet"), std::invalid_argument);
  CHECK_THROWS_AS(build_network("resnet33"), std::invalid_argument);

  auto names = builtin_network_names();
  CHECK(std::find(names.begin(), names.end(), "resnet32") != names.end());
  CHECK(std::find(names.begin(), names.end(), "inception_v4") != names.end());
  for (const std::string& n : names) CHECK(build_network(n).vertex_count() > 0);
}
