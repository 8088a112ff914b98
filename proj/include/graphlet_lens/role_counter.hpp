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

// Early-stage local structure: orbit counts around a node or an edge at
// the snapshot where a degree threshold is first reached.

#ifndef GRAPHLET_LENS_ROLE_COUNTER_HPP_
#define GRAPHLET_LENS_ROLE_COUNTER_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "graphlet_lens/graph_core.hpp"
#include "graphlet_lens/triad_atlas.hpp"

namespace glens {

inline constexpr int kNumRoles = 30;
using RoleRatios = std::array<double, kNumRoles>;

/// Orbit counts of one subject; `ratios` is counts / sum (all zero when the
/// sum is zero).
struct RoleVector {
  std::array<std::int64_t, kNumRoles> counts{};
  RoleRatios ratios{};

  static RoleVector from_counts(const std::array<std::int64_t, kNumRoles>& counts);
};

/// Node-orbit counts of v over every connected triple containing v. Work is
/// proportional to the sum of neighbor degrees. Throws std::out_of_range for
/// an unknown node.
RoleVector node_roles_at(const AdjacencyState& state, NodeId v, const TriadAtlas& atlas);

/// Edge-orbit counts of src->dst over every connected triple holding both
/// endpoints. Throws std::invalid_argument if the edge is absent.
RoleVector edge_roles_at(const AdjacencyState& state, NodeId src, NodeId dst,
                         const TriadAtlas& atlas);

/// Triangle and wedge features on the undirected skeleton of the snapshot.
struct NppFeatures {
  double triangles = 0;        // neighbor pairs of v that are adjacent
  double wedges_centered = 0;  // neighbor pairs of v
  double wedges_ended = 0;     // paths v - w - x, x != v
  double edges_not_incident = 0;
  /// Pairs (w, x) with w a neighbor of v, x neither v nor a neighbor of v,
  /// and w, x non-adjacent; x ranges over nodes of the snapshot.
  double nonadjacent_pairs = 0;
};
NppFeatures npp_features(const AdjacencyState& state, NodeId v);

/// Coordinate-wise mean and population standard deviation of a reference
/// population of ratio vectors.
class RoleStandardizer {
 public:
  RoleStandardizer() = default;
  explicit RoleStandardizer(std::span<const RoleRatios> population);

  /// z-scores; coordinates with zero spread (or an empty population) map to 0.
  RoleRatios apply(const RoleRatios& ratios) const;
  const RoleRatios& mean() const { return mean_; }
  const RoleRatios& stddev() const { return stddev_; }

 private:
  RoleRatios mean_{};
  RoleRatios stddev_{};
};

/// z-scores every vector against the population formed by the vectors
/// themselves.
std::vector<RoleRatios> standardize_role_ratios(std::span<const RoleRatios> vectors);

enum class Subject { kNode, kEdge };

struct ScanOptions {
  int d_theta = 2;
  Subject subject = Subject::kNode;
  /// Structural edges between refreshes of the z-score reference population.
  std::size_t refresh_interval = 1000;
};

struct ThresholdEvent {
  NodeId node = 0;  // the node, or the edge source
  NodeId dst = 0;   // edge target; unused for node events
  /// Stream position (1-based, duplicates included) at which it triggered.
  std::size_t trigger_index = 0;
  RoleVector roles;
  RoleRatios standardized{};
  NppFeatures npp;  // node events only
  std::size_t snapshot_nodes = 0;
  std::size_t snapshot_edges = 0;
};

/// One replay. A node triggers when its in-degree reaches d_theta. An edge
/// triggers at the first instant it exists and the in-degrees of its
/// endpoints sum to at least d_theta; edges triggering on the same arrival
/// are reported in insertion order. Each subject triggers at most once.
///
/// The reference population for `standardized` is every node with in-degree
/// exactly d_theta (every edge with in-degree sum exactly d_theta). Its
/// statistics are recomputed when an event needs them and at least
/// `refresh_interval` structural edges have passed since the last refresh.
std::vector<ThresholdEvent> scan_threshold_events(const TemporalGraph& g,
                                                  const TriadAtlas& atlas,
                                                  const ScanOptions& options);

}  // namespace glens

#endif  // GRAPHLET_LENS_ROLE_COUNTER_HPP_
