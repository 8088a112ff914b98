// Copyright 2026 The graphlet-lens Authors
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

#include "graphlet_lens/streaming_counter.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace glens {

GraphletRatios count_ratios(const GraphletCounts& counts) {
  GraphletRatios out{};
  const std::int64_t total = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  if (total <= 0) return out;
  for (int k = 0; k < kNumGraphlets; ++k) {
    out[k] = static_cast<double>(counts[k]) / static_cast<double>(total);
  }
  return out;
}

std::vector<std::size_t> checkpoint_positions(std::size_t edge_count,
                                              std::size_t n_checkpoints) {
  if (n_checkpoints == 0) throw std::invalid_argument("n_checkpoints must be >= 1");
  std::vector<std::size_t> out;
  if (edge_count == 0) return out;
  out.reserve(std::min(edge_count, n_checkpoints));
  for (std::size_t k = 1; k <= n_checkpoints; ++k) {
    const std::size_t pos = (k * edge_count + n_checkpoints - 1) / n_checkpoints;
    if (out.empty() || pos != out.back()) out.push_back(pos);
  }
  return out;
}

GraphletCountSeries count_stream(const TemporalGraph& g, const TriadAtlas& atlas,
                                 std::size_t n_checkpoints) {
  const auto positions = checkpoint_positions(g.edge_count(), n_checkpoints);
  GraphletCountSeries series;
  series.checkpoints.reserve(positions.size());

  AdjacencyState state(g.node_count());
  GraphletCounts counts{};
  std::size_t next = 0;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (!state.has_edge(e.src, e.dst)) {
      series.neighbor_work += for_each_affected_triple(
          state, e.src, e.dst, [&](NodeId, TriadCode before) {
            if (const int old = atlas.graphlet_raw(before.mask)) --counts[old - 1];
            ++counts[atlas.graphlet_raw(before.mask | 1) - 1];
          });
      state.apply_edge(e);
#ifndef NDEBUG
      for (auto c : counts) assert(c >= 0);
#endif
    }
    if (next < positions.size() && i + 1 == positions[next]) {
      CountCheckpoint cp;
      cp.edges_processed = i + 1;
      cp.evolution_ratio =
          static_cast<double>(i + 1) / static_cast<double>(edges.size());
      cp.counts = counts;
      cp.ratios = count_ratios(counts);
      series.checkpoints.push_back(cp);
      ++next;
    }
  }
  return series;
}

GraphletCounts census_bruteforce(const AdjacencyState& state,
                                 const TriadAtlas& atlas) {
  GraphletCounts centered{};
  std::vector<std::pair<NodeId, std::uint8_t>> nbrs;
  for (NodeId v = 0; v < state.capacity(); ++v) {
    const auto& map = state.neighbors(v);
    nbrs.assign(map.begin(), map.end());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const auto [x, vx] = nbrs[i];
        const auto [y, vy] = nbrs[j];
        const auto code = TriadCode::from_pairs(vx, vy, state.pair_state(x, y));
        ++centered[atlas.graphlet_raw(code.mask) - 1];
      }
    }
  }
  GraphletCounts out{};
  for (int k = 0; k < kNumGraphlets; ++k) {
    out[k] = centered[k] / atlas.centers_in(GraphletId(k + 1));
  }
  return out;
}

}  // namespace glens
