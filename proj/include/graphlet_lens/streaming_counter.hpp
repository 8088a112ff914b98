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

// Incremental graphlet-instance counting over an edge stream.
//
// Each new directed edge u->v can only change the induced triads
// (u, v, w) with w adjacent to u or v, so every arrival visits the union
// of the two neighborhoods once: decrement the old class of each (u, v, w)
// when it was already connected, then increment the new class. Total work
// is proportional to the sum of squared final degrees, which is also the
// order of the number of graphlet instances in the final snapshot.

#ifndef GRAPHLET_LENS_STREAMING_COUNTER_HPP_
#define GRAPHLET_LENS_STREAMING_COUNTER_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "graphlet_lens/graph_core.hpp"
#include "graphlet_lens/triad_atlas.hpp"

namespace glens {

using GraphletCounts = std::array<std::int64_t, kNumGraphlets>;
using GraphletRatios = std::array<double, kNumGraphlets>;

struct CountCheckpoint {
  double evolution_ratio = 0;     // edges processed / total edges
  std::size_t edges_processed = 0;
  GraphletCounts counts{};
  GraphletRatios ratios{};
};

struct GraphletCountSeries {
  std::vector<CountCheckpoint> checkpoints;
  /// Neighbor entries scanned over the whole replay.
  std::uint64_t neighbor_work = 0;

  const GraphletCounts& final_counts() const { return checkpoints.back().counts; }
};

/// counts[k] / sum, or all zero when the sum is zero.
GraphletRatios count_ratios(const GraphletCounts& counts);

/// Edge counts (1-based, strictly increasing, last == edge_count) after
/// which checkpoints are recorded: ceil(k * edge_count / n) for k = 1..n,
/// with repeats removed.
std::vector<std::size_t> checkpoint_positions(std::size_t edge_count,
                                              std::size_t n_checkpoints);

/// Calls fn(w, code) once for every node w != u, v adjacent to u or v,
/// where `code` is the triad of (a=u, b=v, c=w) in the current state, i.e.
/// before u->v is applied. The smaller neighborhood is scanned first and
/// the larger one is filtered by membership in it. Returns the number of
/// neighbor entries scanned.
template <class Fn>
std::size_t for_each_affected_triple(const AdjacencyState& state, NodeId u,
                                     NodeId v, Fn&& fn) {
  const std::uint8_t uv = state.pair_state(u, v);
  const auto& nu = state.neighbors(u);
  const auto& nv = state.neighbors(v);
  const bool u_small = nu.size() <= nv.size();
  const auto& small = u_small ? nu : nv;
  const auto& large = u_small ? nv : nu;
  const NodeId small_owner = u_small ? u : v;
  const NodeId large_owner = u_small ? v : u;

  for (const auto& [w, small_bits] : small) {
    if (w == large_owner) continue;
    auto it = large.find(w);
    const std::uint8_t large_bits = it == large.end() ? kNoEdge : it->second;
    const std::uint8_t uw = u_small ? small_bits : large_bits;
    const std::uint8_t vw = u_small ? large_bits : small_bits;
    fn(w, TriadCode::from_pairs(uv, uw, vw));
  }
  for (const auto& [w, large_bits] : large) {
    if (w == small_owner || small.contains(w)) continue;
    const std::uint8_t uw = u_small ? kNoEdge : large_bits;
    const std::uint8_t vw = u_small ? large_bits : kNoEdge;
    fn(w, TriadCode::from_pairs(uv, uw, vw));
  }
  return small.size() + large.size();
}

/// Replays the stream and records graphlet counts at evenly spaced
/// evolution ratios. Duplicate edges change nothing but still advance the
/// evolution ratio.
GraphletCountSeries count_stream(const TemporalGraph& g, const TriadAtlas& atlas,
                                 std::size_t n_checkpoints = 1000);

/// Static census of one snapshot: each node paired with every two of its
/// neighbors, with triangle-like instances (three centers) divided out.
GraphletCounts census_bruteforce(const AdjacencyState& state,
                                 const TriadAtlas& atlas);

}  // namespace glens

#endif  // GRAPHLET_LENS_STREAMING_COUNTER_HPP_
