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

#include "prismfab/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace prismfab {

namespace {

void add_layer(ArchSpec& s, const std::string& name, int channels,
               int stride = 1, int kernel = 3, int pool = 0,
               bool resample = false) {
  ArchLayer l;
  l.name = name;
  l.channels = channels;
  l.stride = stride;
  l.kernel = kernel;
  l.pool = pool;
  l.resample = resample;
  s.layers.push_back(std::move(l));
}

void add_link(ArchSpec& s, const std::string& src, const std::string& dst,
              bool residual = false) {
  ArchLink l;
  l.src = src;
  l.dst = dst;
  l.residual = residual;
  s.links.push_back(std::move(l));
}

void add_concat(ArchSpec& s, std::vector<std::string> srcs,
                std::vector<std::string> dsts) {
  ArchConcat c;
  c.srcs = std::move(srcs);
  c.dsts = std::move(dsts);
  s.concats.push_back(std::move(c));
}

}  // namespace

ArchSpec gen_feedforward(int num_layers, const std::vector<int>& channels,
                         const std::vector<int>& kernels) {
  if (num_layers < 1) throw std::invalid_argument("need at least one layer");
  if (!channels.empty() && channels.size() != 1 &&
      channels.size() != static_cast<size_t>(num_layers))
    throw std::invalid_argument("channels must be empty, one value, or per-layer");
  if (!kernels.empty() && kernels.size() != 1 &&
      kernels.size() != static_cast<size_t>(num_layers))
    throw std::invalid_argument("kernels must be empty, one value, or per-layer");

  ArchSpec s;
  s.name = "feedforward" + std::to_string(num_layers);
  for (int i = 0; i < num_layers; ++i) {
    int ch = channels.empty() ? 64
             : channels.size() == 1 ? channels[0]
                                    : channels[i];
    int k = kernels.empty() ? 3 : kernels.size() == 1 ? kernels[0] : kernels[i];
    add_layer(s, "l" + std::to_string(i + 1), ch, 1, k);
    if (i > 0) add_link(s, "l" + std::to_string(i), "l" + std::to_string(i + 1));
  }
  return s;
}

ArchSpec gen_alexnet() {
  ArchSpec s = gen_feedforward(8, {96, 256, 384, 384, 256, 4096, 4096, 1000},
                               {11, 5, 3, 3, 3, 1, 1, 1});
  s.name = "alexnet";
  return s;
}

ArchSpec gen_resnet(int depth) {
  if (depth < 8 || (depth - 2) % 6 != 0)
    throw std::invalid_argument("resnet depth must be 6m+2 with m >= 1");
  int blocks_per_stage = (depth - 2) / 6;
  const int stage_channels[3] = {16, 32, 64};

  ArchSpec s;
  s.name = "resnet" + std::to_string(depth);
  add_layer(s, "c0", 16);
  std::string prev = "c0";
  for (int st = 0; st < 3; ++st) {
    int ch = stage_channels[st];
    for (int b = 1; b <= blocks_per_stage; ++b) {
      bool transition = st > 0 && b == 1;
      std::string base =
          "s" + std::to_string(st + 1) + "b" + std::to_string(b);
      std::string v = base + "c1";
      std::string w = base + "c2";
      add_layer(s, v, ch, transition ? 2 : 1);
      add_layer(s, w, ch);
      add_link(s, prev, v);
      add_link(s, v, w);
      if (transition) {
        // Shortcut crosses a stride change, so it runs through a 1x1
        // resampling layer instead of linking directly.
        std::string r = "s" + std::to_string(st + 1) + "r";
        add_layer(s, r, ch, 2, 1, 0, true);
        add_link(s, prev, r);
        add_link(s, r, w, true);
      } else {
        add_link(s, prev, w, true);
      }
      prev = w;
    }
  }
  return s;
}

DenseNetModel gen_densenet(const std::vector<int>& block_sizes, DenseRep rep,
                           int unit_size, int growth) {
  if (block_sizes.empty()) throw std::invalid_argument("empty block list");
  for (int d : block_sizes)
    if (d < 1) throw std::invalid_argument("block sizes must be positive");
  if (growth < 1) throw std::invalid_argument("growth must be positive");
  if (rep == DenseRep::kHybrid && (unit_size < 4 || unit_size % 2 != 0))
    throw std::invalid_argument("hybrid window needs an even unit size >= 4");

  // Temporal chain: block layers, then a transition before each next block.
  int nb = static_cast<int>(block_sizes.size());
  std::vector<std::string> chain;
  std::vector<int> oldest;  // chain position of the oldest producer consumed
  int input_pos = 0;
  for (int b = 0; b < nb; ++b) {
    for (int i = 1; i <= block_sizes[b]; ++i) {
      oldest.push_back(input_pos);
      chain.push_back("b" + std::to_string(b + 1) + "l" + std::to_string(i));
    }
    if (b + 1 < nb) {
      oldest.push_back(input_pos);
      input_pos = static_cast<int>(chain.size());
      chain.push_back("t" + std::to_string(b + 1));
    }
  }
  int n = static_cast<int>(chain.size());

  // last_use[q]: last consumer position that still needs q's stream.
  // oldest is nondecreasing, so this is the last p with oldest[p] <= q.
  std::vector<int> last_use(n, 0);
  for (int q = 0; q < n; ++q) {
    int last = q;
    for (int p = q + 1; p < n; ++p)
      if (oldest[p] <= q) last = p;
    last_use[q] = last;
  }

  DenseNetModel m;
  m.arch.name = block_sizes == std::vector<int>{6, 12, 48, 32} && growth == 32
                    ? "densenet201"
                    : "densenet";
  for (int p = 0; p < n; ++p) {
    bool is_transition = chain[p][0] == 't';
    add_layer(m.arch, chain[p], growth, 1, is_transition ? 1 : 3,
              is_transition ? 2 : 0);
  }
  for (int p = 1; p < n; ++p) {
    int s_count = p - oldest[p];
    if (s_count < 1) continue;
    add_link(m.arch, chain[p - 1], chain[p]);
    if (s_count >= 2) {
      std::vector<std::string> srcs;
      for (int q = oldest[p]; q <= p - 2; ++q) srcs.push_back(chain[q]);
      add_concat(m.arch, std::move(srcs), {chain[p]});
    }
  }

  NetGraph& g = m.net;
  g.vertices.resize(n);
  for (int p = 0; p < n; ++p) {
    NetVertex& v = g.vertices[p];
    const ArchLayer& l = m.arch.layers[p];
    v.name = l.name;
    v.channels = l.channels;
    v.stride = l.stride;
    v.kernel = l.kernel;
    v.pool = l.pool;
    v.resample = l.resample;
  }
  for (int p = 1; p < n; ++p) {
    int s_count = p - oldest[p];
    if (s_count < 1) continue;
    switch (rep) {
      case DenseRep::kComplete:
        for (int q = oldest[p]; q < p; ++q)
          g.add_component(q, p,
                          {q == p - 1 ? Origin::kFeedforward : Origin::kConcat,
                           q, growth});
        break;
      case DenseRep::kPath:
        g.add_component(p - 1, p, {Origin::kFeedforward, p - 1, growth});
        for (int q = 0; q < p - 1; ++q)
          if (last_use[q] >= p)
            g.add_component(p - 1, p, {Origin::kHop, q, growth});
        break;
      case DenseRep::kHybrid: {
        int w0 = (p % 2 == 1) ? unit_size - 1 : unit_size - 2;
        int w = std::min(w0, s_count);
        for (int delta = 1; delta <= w; ++delta)
          g.add_component(p - delta, p,
                          {delta == 1 ? Origin::kFeedforward : Origin::kConcat,
                           p - delta, growth});
        // Streams older than the window get forwarded by the in-window
        // holders, dealt round-robin oldest stream to oldest holder.
        for (int i = 0; i < s_count - w; ++i) {
          int q = oldest[p] + i;
          int holder = p - w + (i % w);
          g.add_component(holder, p, {Origin::kHop, q, growth});
        }
        break;
      }
    }
  }
  g.sort_canonical();
  g.compute_depths();
  return m;
}

ArchSpec gen_inception(const std::string& version) {
  std::vector<std::vector<int>> blocks;
  bool shortcut = false;
  bool forked_stem = true;
  if (version == "v1" || version == "v2" || version == "v3") {
    int count = version == "v1" ? 9 : version == "v2" ? 10 : 11;
    blocks.assign(count, {1, 2, 3, 4});
  } else if (version == "v4") {
    blocks.push_back({1, 2});
    for (int i = 0; i < 4; ++i) blocks.push_back({1, 2, 3, 4});
    blocks.push_back({1, 2});
    for (int i = 0; i < 7; ++i) blocks.push_back({1, 2, 3, 4});
    blocks.push_back({1, 2});
    blocks.push_back({1, 2, 4, 4});
    blocks.push_back({1, 2, 3, 3});
    blocks.push_back({2});
  } else if (version == "resnet_v1") {
    blocks.assign(20, {2});
    shortcut = true;
    forked_stem = false;
  } else if (version == "resnet_v2") {
    blocks.assign(20, {1, 2});
    shortcut = true;
    forked_stem = false;
  } else {
    throw std::invalid_argument("unsupported inception version: " + version);
  }

  const int ch = 64;
  ArchSpec s;
  s.name = version.rfind("resnet_", 0) == 0 ? "inception_resnet_" + version.substr(7)
                                            : "inception_" + version;
  add_layer(s, "s1", ch);
  add_layer(s, "s2", ch);
  add_layer(s, "s3", ch);
  add_link(s, "s1", "s2");
  add_link(s, "s2", "s3");
  std::vector<std::string> prev_tails;
  std::string prev_main_tail;  // longest-branch tail, shortcut source
  if (forked_stem) {
    add_layer(s, "ta", ch);
    add_layer(s, "tb", ch);
    add_link(s, "s3", "ta");
    add_link(s, "s3", "tb");
    prev_tails = {"ta", "tb"};
    prev_main_tail = "tb";
  } else {
    prev_tails = {"s3"};
    prev_main_tail = "s3";
  }

  for (size_t k = 0; k < blocks.size(); ++k) {
    const std::vector<int>& lens = blocks[k];
    int nbranch = static_cast<int>(lens.size());
    int maxlen = *std::max_element(lens.begin(), lens.end());
    auto vname = [&](int branch, int j) {
      return "i" + std::to_string(k + 1) +
             std::string(1, static_cast<char>('a' + branch)) +
             std::to_string(j);
    };
    // Declare depth-major so declaration order matches latency order.
    for (int j = 1; j <= maxlen; ++j)
      for (int br = 0; br < nbranch; ++br)
        if (lens[br] >= j) add_layer(s, vname(br, j), ch);
    for (int br = 0; br < nbranch; ++br)
      for (int j = 1; j < lens[br]; ++j)
        add_link(s, vname(br, j), vname(br, j + 1));

    std::vector<std::string> heads, tails;
    for (int br = 0; br < nbranch; ++br) {
      heads.push_back(vname(br, 1));
      tails.push_back(vname(br, lens[br]));
    }
    add_concat(s, prev_tails, heads);
    int main_branch = static_cast<int>(
        std::max_element(lens.begin(), lens.end()) - lens.begin());
    std::string main_tail = vname(main_branch, lens[main_branch]);
    if (shortcut && lens[main_branch] >= 2)
      add_link(s, prev_main_tail, main_tail, true);
    prev_tails = std::move(tails);
    prev_main_tail = main_tail;
  }
  return s;
}

NetGraph build_network(const std::string& name, const Fabric* fabric) {
  std::string base = name;
  std::string suffix;
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    base = name.substr(0, colon);
    suffix = name.substr(colon + 1);
  }

  if (base == "alexnet" || base == "feedforward8")
    return consolidate(gen_alexnet());

  if (base == "densenet201") {
    DenseRep rep;
    int unit = fabric && fabric->kind == FabricKind::kPrism ? fabric->unit_size : 6;
    if (suffix == "complete") {
      rep = DenseRep::kComplete;
    } else if (suffix == "path") {
      rep = DenseRep::kPath;
    } else if (suffix == "hybrid") {
      rep = DenseRep::kHybrid;
    } else if (suffix.empty()) {
      rep = fabric && fabric->kind == FabricKind::kPrism ? DenseRep::kHybrid
                                                         : DenseRep::kPath;
    } else {
      throw std::invalid_argument("unknown densenet representation: " + suffix);
    }
    return gen_densenet({6, 12, 48, 32}, rep, unit).net;
  }
  if (!suffix.empty())
    throw std::invalid_argument("unknown network: " + name);

  if (base.rfind("resnet", 0) == 0) {
    std::string digits = base.substr(6);
    if (!digits.empty() &&
        digits.find_first_not_of("0123456789") == std::string::npos)
      return consolidate(gen_resnet(std::stoi(digits)));
  }
  if (base.rfind("inception_resnet_", 0) == 0)
    return consolidate(gen_inception("resnet_" + base.substr(17)));
  if (base.rfind("inception_", 0) == 0)
    return consolidate(gen_inception(base.substr(10)));

  throw std::invalid_argument("unknown network: " + name);
}

std::vector<std::string> builtin_network_names() {
  return {"alexnet",      "resnet20",     "resnet32",
          "resnet44",     "resnet56",     "resnet110",
          "densenet201",  "inception_v1", "inception_v2",
          "inception_v3", "inception_v4", "inception_resnet_v1",
          "inception_resnet_v2"};
}

}  // namespace prismfab
