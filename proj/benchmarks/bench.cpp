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

#include <benchmark/benchmark.h>

#include "prismfab/fabric.hpp"
#include "prismfab/generators.hpp"
#include "prismfab/mapper.hpp"
#include "prismfab/metrics.hpp"

namespace {

using namespace prismfab;

void bm_build_kpp(benchmark::State& state) {
  int cores = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Fabric f = build_kpp(6, cores);
    benchmark::DoNotOptimize(f.graph.edge_count());
  }
  state.SetComplexityN(cores);
}
BENCHMARK(bm_build_kpp)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void bm_h_color_resnet32(benchmark::State& state) {
  NetGraph net = build_network("resnet32");
  Fabric f = auto_sized_prism(6, net);
  for (auto _ : state) {
    HColorResult r = h_color(net, f);
    benchmark::DoNotOptimize(r.index());
  }
}
BENCHMARK(bm_h_color_resnet32);

void bm_h_color_inception(benchmark::State& state) {
  Fabric probe = build_kpp(6, 6);
  NetGraph net = build_network("inception_v4", &probe);
  Fabric f = auto_sized_prism(6, net);
  for (auto _ : state) {
    HColorResult r = h_color(net, f);
    benchmark::DoNotOptimize(r.index());
  }
}
BENCHMARK(bm_h_color_inception);

void bm_backtrack_path(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  NetGraph net = consolidate(gen_feedforward(n));
  Fabric f = build_kpp(6, n + 4);
  for (auto _ : state) {
    HColorResult r = h_color(net, f, Strategy::kBacktrack);
    benchmark::DoNotOptimize(r.index());
  }
}
BENCHMARK(bm_backtrack_path)->DenseRange(6, 18, 4);

void bm_simulate_densenet(benchmark::State& state) {
  Fabric probe = build_kpp(6, 6);
  NetGraph net = build_network("densenet201", &probe);
  Fabric f = auto_sized_prism(6, net);
  HColorResult r = h_color(net, f);
  const Mapping& m = std::get<Mapping>(r);
  for (auto _ : state) {
    SimResult s = simulate_pipeline(net, f, m, 8);
    benchmark::DoNotOptimize(s.total_cycles);
  }
}
BENCHMARK(bm_simulate_densenet);

}  // namespace

BENCHMARK_MAIN();
