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

#include <map>
#include <set>

#include "prismfab/archspec.hpp"
#include "prismfab/netgraph.hpp"

using namespace prismfab;

namespace {

int count_origin(const NetGraph& g, Origin o) {
  int n = 0;
  for (const NetEdge& e : g.edges)
    for (const PayloadComponent& c : e.components)
      if (c.origin == o) ++n;
  return n;
}

// every forwarded stream must hop between a producer, holders that already
// received it, and finally the consumer; no stream teleports
void audit_hop_chains(const NetGraph& g) {
  // receive[v] = set of producers whose stream reaches v
  std::map<int, std::set<int>> receive;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const NetEdge& e : g.edges) {
      for (const PayloadComponent& c : e.components) {
        if (receive[e.dst].insert(c.producer).second) changed = true;
      }
    }
  }
  for (const NetEdge& e : g.edges) {
    for (const PayloadComponent& c : e.components) {
      if (c.origin != Origin::kHop) continue;
      bool sane = e.src == c.producer || receive[e.src].count(c.producer) > 0;
      CHECK_MESSAGE(sane, "hop of stream ", c.producer, " leaves ", e.src,
                    " which never received it");
    }
  }
}

}  // namespace

TEST_CASE("residual remaps onto the carrier edge") {
  NetGraph g = consolidate(parse_archspec(R"(
layer a channels=16
layer b channels=16
layer c channels=16
link a -> b
link b -> c
link a -> c residual
)"));
  // the a->c stream rides b, so only the two chain edges remain
  CHECK(g.edges.size() == 2);
  REQUIRE(g.has_edge(1, 2));
  const NetEdge& bc = g.edges[g.edge_index(1, 2)];
  REQUIRE(bc.components.size() == 2);
  CHECK(bc.payload() == 32);
  CHECK(count_origin(g, Origin::kResidual) == 1);
  // the residual component still names its true producer
  bool found = false;
  for (const auto& c : bc.components)
    if (c.origin == Origin::kResidual) found = c.producer == 0;
  CHECK(found);
}

TEST_CASE("several parallel streams merge onto one simple edge") {
  NetGraph g = consolidate(parse_archspec(R"(
layer a channels=8
layer b channels=8
layer c channels=8
layer d channels=8
link a -> b
link b -> c
link c -> d
link a -> c residual
link b -> d residual
)"));
  CHECK(g.edges.size() == 3);
  const NetEdge& cd = g.edges[g.edge_index(2, 3)];
  CHECK(cd.payload() == 16);  // feedforward c + residual stream of b
  audit_hop_chains(g);
}

TEST_CASE("concat blocks expand to complete bipartite components") {
  NetGraph g = consolidate(parse_archspec(R"(
layer a channels=8
layer b channels=8
layer c channels=8
layer d channels=8
layer e channels=8
layer f channels=8
concat { a b } -> { c d e f }
)"));
  CHECK(count_origin(g, Origin::kConcat) == 8);  // K_{2,4}
  // payload of each connector edge is one full stream
  for (const NetEdge& e : g.edges)
    for (const PayloadComponent& c : e.components) {
      CHECK(c.channels == 8);
      CHECK((c.producer == 0 || c.producer == 1));
    }
}

TEST_CASE("skip link over two stages hops along the chain") {
  NetGraph g = consolidate(parse_archspec(R"(
layer l1 channels=4
layer l2 channels=4
layer l3 channels=4
layer l4 channels=4
link l1 -> l2
link l2 -> l3
link l3 -> l4
link l1 -> l4
)"));
  // no direct edge 0->3 survives; the stream hops 0->1->2->3, one hop
  // component per traversed chain edge including the delivery
  CHECK(g.edges.size() == 3);
  CHECK(g.edge_index(0, 3) == -1);
  CHECK(count_origin(g, Origin::kHop) == 3);
  const NetEdge& last = g.edges[g.edge_index(2, 3)];
  CHECK(last.payload() == 8);  // feedforward plus the delivered stream
  audit_hop_chains(g);
}

TEST_CASE("a two step fallback path suppresses rerouting") {
  // x->t spans two depths but x->y->t exists, so the link stays direct
  NetGraph g = consolidate(parse_archspec(R"(
layer x channels=4
layer y channels=4
layer t channels=4
link x -> y
link y -> t
link x -> t residual
)"));
  REQUIRE(g.has_edge(1, 2));
  const NetEdge& yt = g.edges[g.edge_index(1, 2)];
  // residual remapped onto the carrier y, still one edge
  CHECK(yt.components.size() == 2);
  CHECK(g.edges.size() == 2);
}

TEST_CASE("plain skip into a resampler reroutes through the carrier") {
  NetGraph g = consolidate(parse_archspec(R"(
layer prev channels=16
layer c1 channels=32 stride=2
layer c2 channels=32
layer r channels=32 kernel=1 resample
link prev -> c1
link c1 -> c2
link prev -> r
link r -> c2 residual
)"));
  // prev's stream enters the resampler from the carrier c1
  CHECK(g.edge_index(0, 3) == -1);
  REQUIRE(g.has_edge(1, 3));
  const NetEdge& to_r = g.edges[g.edge_index(1, 3)];
  REQUIRE(to_r.components.size() == 1);
  CHECK(to_r.components[0].origin == Origin::kResample);
  CHECK(to_r.components[0].producer == 0);
  // and the adjusted stream comes back to the block exit
  REQUIRE(g.has_edge(3, 2));
  CHECK(g.edges[g.edge_index(3, 2)].components[0].origin == Origin::kResidual);
}

TEST_CASE("hop transform is idempotent") {
  ArchSpec spec = parse_archspec(R"(
layer l1 channels=4
layer l2 channels=4
layer l3 channels=4
layer l4 channels=4
layer l5 channels=4
link l1 -> l2
link l2 -> l3
link l3 -> l4
link l4 -> l5
link l1 -> l5
link l2 -> l4
)");
  NetGraph once = consolidate(spec);
  NetGraph twice = once;
  apply_hop_transform(twice);
  CHECK(once == twice);
  audit_hop_chains(once);
}

TEST_CASE("payload is conserved end to end") {
  // whatever the representation, each consumer still receives every stream
  // its declaration asked for exactly once
  ArchSpec spec = parse_archspec(R"(
layer a channels=4
layer b channels=4
layer c channels=4
layer d channels=4
layer e channels=4
link a -> b
link b -> c
link c -> d
link d -> e
link a -> d
link b -> e residual
)");
  NetGraph g = consolidate(spec);
  audit_hop_chains(g);
  // d receives c (ff) and a (skip); e receives d (ff) and b (residual)
  std::map<int, std::set<int>> delivered;
  for (const NetEdge& e : g.edges)
    for (const PayloadComponent& c : e.components)
      delivered[e.dst].insert(c.producer);
  CHECK(delivered[3] == std::set<int>{0, 2});
  CHECK(delivered[4] == std::set<int>{1, 3});
}

TEST_CASE("depths and cycle detection") {
  NetGraph g;
  g.vertices.resize(3);
  g.add_component(0, 1, {Origin::kFeedforward, 0, 4});
  g.add_component(1, 2, {Origin::kFeedforward, 1, 4});
  g.sort_canonical();
  g.compute_depths();
  CHECK(g.vertices[0].depth == 0);
  CHECK(g.vertices[2].depth == 2);
  g.add_component(2, 0, {Origin::kFeedforward, 2, 4});
  g.sort_canonical();
  CHECK_THROWS_AS(g.compute_depths(), std::invalid_argument);
}

TEST_CASE("max channels scans vertices") {
  NetGraph g;
  g.vertices.resize(2);
  g.vertices[0].channels = 48;
  g.vertices[1].channels = 64;
  CHECK(g.max_channels() == 64);
}
