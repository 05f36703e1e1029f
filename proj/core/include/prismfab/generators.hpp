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

#ifndef PRISMFAB_GENERATORS_HPP_
#define PRISMFAB_GENERATORS_HPP_

#include <string>
#include <vector>

#include "prismfab/archspec.hpp"
#include "prismfab/fabric.hpp"
#include "prismfab/netgraph.hpp"

namespace prismfab {

// Plain chain of num_layers vertices. channels may be empty (uniform 64),
// a single value (uniform), or one value per layer. kernels likewise.
ArchSpec gen_feedforward(int num_layers, const std::vector<int>& channels = {},
                         const std::vector<int>& kernels = {});

// Classic 8-layer feedforward preset (5 conv + 3 dense equivalents).
ArchSpec gen_alexnet();

// Residual network for 32x32 inputs: initial conv, three stages of
// (depth-2)/6 two-conv blocks at 16/32/64 channels, stride-2 transitions
// with a dedicated 1x1 resample layer on the shortcut. depth must be
// 6m+2 with m >= 1.
ArchSpec gen_resnet(int depth);

// How a dense block's all-to-all connectivity is laid out as a graph.
enum class DenseRep {
  kComplete,  // every forward pair is a direct edge
  kPath,      // single chain, edges accumulate forwarded payloads
  kHybrid,    // direct edges within a sliding window, older activations
              // forwarded round-robin across the window
};

struct DenseNetModel {
  ArchSpec arch;  // declarative dense connectivity
  NetGraph net;   // representation-specific communication graph
};

// Dense blocks joined by transition layers (no stem). Every layer and
// transition produces `growth` channels. For kHybrid the window tracks a
// prism fabric of the given unit size under the identity placement: a
// consumer at even chain position reaches unit_size-2 predecessors, at odd
// position unit_size-1.
DenseNetModel gen_densenet(const std::vector<int>& block_sizes, DenseRep rep,
                           int unit_size = 6, int growth = 32);

// Inception family: shared 5-vertex stem, then a sequence of
// multi-branch blocks joined by concat connectors. Versions:
//   v1/v2/v3     9/10/11 four-branch blocks
//   v4           17 blocks with the tapered tail shapes
//   resnet_v1    20 single-branch blocks with shortcut links
//   resnet_v2    20 two-branch blocks with shortcut links
ArchSpec gen_inception(const std::string& version);

// Consolidated graph for a named preset network. DenseNet picks its
// representation from the fabric (hybrid of the unit size on a prism,
// path on a mesh or when fabric is null); an explicit suffix
// ":complete", ":path" or ":hybrid" overrides. Unknown name throws.
NetGraph build_network(const std::string& name, const Fabric* fabric = nullptr);

// Preset names accepted by build_network (without densenet suffixes).
std::vector<std::string> builtin_network_names();

}  // namespace prismfab

#endif  // PRISMFAB_GENERATORS_HPP_
