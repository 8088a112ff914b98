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

#include "graphlet_lens/role_counter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "graphlet_lens/streaming_counter.hpp"

namespace glens {
namespace {

void check_node(const AdjacencyState& state, NodeId v) {
  if (v >= state.capacity()) {
    throw std::out_of_range("unknown node " + std::to_string(v));
  }
}

std::uint64_t arc_key(NodeId src, NodeId dst) {
  return (static_cast<std::uint64_t>(src) << 32) | dst;
}

}  // namespace

RoleVector RoleVector::from_counts(const std::array<std::int64_t, kNumRoles>& counts) {
  RoleVector r;
  r.counts = counts;
  const auto total = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  if (total > 0) {
    for (int i = 0; i < kNumRoles; ++i) {
      r.ratios[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    }
  }
  return r;
}

RoleVector node_roles_at(const AdjacencyState& state, NodeId v, const TriadAtlas& atlas) {
  check_node(state, v);
  std::array<std::int64_t, kNumRoles> counts{};
  const auto& nv = state.neighbors(v);
  std::vector<std::pair<NodeId, std::uint8_t>> nbrs(nv.begin(), nv.end());

  // v adjacent to both others.
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      const auto code = TriadCode::from_pairs(nbrs[i].second, nbrs[j].second,
                                              state.pair_state(nbrs[i].first, nbrs[j].first));
      ++counts[atlas.node_orbit_raw(code.mask, 0) - 1];
    }
  }
  // v at the end of a path v - w - x.
  for (const auto& [w, vw] : nbrs) {
    for (const auto& [x, wx] : state.neighbors(w)) {
      if (x == v || nv.contains(x)) continue;
      const auto code = TriadCode::from_pairs(vw, kNoEdge, wx);
      ++counts[atlas.node_orbit_raw(code.mask, 0) - 1];
    }
  }
  return RoleVector::from_counts(counts);
}

RoleVector edge_roles_at(const AdjacencyState& state, NodeId src, NodeId dst,
                         const TriadAtlas& atlas) {
  check_node(state, src);
  check_node(state, dst);
  if (!state.has_edge(src, dst)) {
    throw std::invalid_argument("edge " + std::to_string(src) + "->" +
                                std::to_string(dst) + " is not present");
  }
  std::array<std::int64_t, kNumRoles> counts{};
  for_each_affected_triple(state, src, dst, [&](NodeId, TriadCode code) {
    ++counts[atlas.edge_orbit_raw(code.mask, 0) - 1];
  });
  return RoleVector::from_counts(counts);
}

NppFeatures npp_features(const AdjacencyState& state, NodeId v) {
  check_node(state, v);
  NppFeatures f;
  const auto& nv = state.neighbors(v);
  const double k = static_cast<double>(nv.size());
  f.wedges_centered = k * (k - 1) / 2;
  f.edges_not_incident = static_cast<double>(state.adjacent_pair_count()) - k;

  // Nodes of the snapshot other than v and its neighbors.
  const double outside = static_cast<double>(state.active_node_count()) - 1 - k;
  double shared_total = 0;
  for (const auto& [w, bits] : nv) {
    const auto& nw = state.neighbors(w);
    double shared = 0;
    const auto& small = nw.size() < nv.size() ? nw : nv;
    const auto& large = nw.size() < nv.size() ? nv : nw;
    for (const auto& entry : small) shared += large.contains(entry.first);
    shared_total += shared;
    const double deg_w = static_cast<double>(nw.size());
    f.wedges_ended += deg_w - 1;
    f.nonadjacent_pairs += outside - (deg_w - 1 - shared);
  }
  f.triangles = shared_total / 2;
  return f;
}

RoleStandardizer::RoleStandardizer(std::span<const RoleRatios> population) {
  if (population.empty()) return;
  const double n = static_cast<double>(population.size());
  for (const auto& r : population) {
    for (int i = 0; i < kNumRoles; ++i) mean_[i] += r[i];
  }
  for (double& m : mean_) m /= n;
  for (const auto& r : population) {
    for (int i = 0; i < kNumRoles; ++i) stddev_[i] += (r[i] - mean_[i]) * (r[i] - mean_[i]);
  }
  for (double& s : stddev_) s = std::sqrt(s / n);
  for (int i = 0; i < kNumRoles; ++i) {
    const bool constant = std::all_of(population.begin(), population.end(),
                                      [&](const RoleRatios& r) { return r[i] == population[0][i]; });
    if (constant) {
      mean_[i] = population[0][i];
      stddev_[i] = 0;
    }
  }
}

RoleRatios RoleStandardizer::apply(const RoleRatios& ratios) const {
  RoleRatios z{};
  for (int i = 0; i < kNumRoles; ++i) {
    z[i] = stddev_[i] > 0 ? (ratios[i] - mean_[i]) / stddev_[i] : 0.0;
  }
  return z;
}

std::vector<RoleRatios> standardize_role_ratios(std::span<const RoleRatios> vectors) {
  const RoleStandardizer standardizer(vectors);
  std::vector<RoleRatios> out;
  out.reserve(vectors.size());
  for (const auto& r : vectors) out.push_back(standardizer.apply(r));
  return out;
}

namespace {

class ThresholdScanner {
 public:
  ThresholdScanner(const TemporalGraph& g, const TriadAtlas& atlas,
                   const ScanOptions& options)
      : g_(g), atlas_(atlas), options_(options), state_(g.node_count()) {}

  std::vector<ThresholdEvent> run() {
    const auto& edges = g_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (state_.has_edge(e.src, e.dst)) continue;
      state_.apply_edge(e);
      ++structural_;
      if (options_.subject == Subject::kNode) {
        on_node_arrival(e, i + 1);
      } else {
        insertion_[arc_key(e.src, e.dst)] = structural_;
        on_edge_arrival(e, i + 1);
      }
    }
    return std::move(events_);
  }

 private:
  std::int64_t in_sum(NodeId a, NodeId b) const {
    return static_cast<std::int64_t>(state_.in_degree(a)) + state_.in_degree(b);
  }

  void on_node_arrival(const TemporalEdge& e, std::size_t position) {
    if (static_cast<std::int64_t>(state_.in_degree(e.dst)) != options_.d_theta) return;
    ThresholdEvent ev = make_event(e.dst, 0, position);
    ev.roles = node_roles_at(state_, e.dst, atlas_);
    ev.npp = npp_features(state_, e.dst);
    ev.standardized = standardizer().apply(ev.roles.ratios);
    events_.push_back(std::move(ev));
  }

  void on_edge_arrival(const TemporalEdge& e, std::size_t position) {
    const std::int64_t d = options_.d_theta;
    std::vector<std::pair<std::size_t, std::pair<NodeId, NodeId>>> hits;
    if (in_sum(e.src, e.dst) >= d) hits.push_back({structural_, {e.src, e.dst}});
    // Only sums involving in_degree(e.dst) changed.
    for (const auto& [x, bits] : state_.neighbors(e.dst)) {
      if (in_sum(e.dst, x) != d) continue;
      if (bits & kForward) {
        hits.push_back({insertion_.at(arc_key(e.dst, x)), {e.dst, x}});
      }
      if ((bits & kBackward) && x != e.src) {
        hits.push_back({insertion_.at(arc_key(x, e.dst)), {x, e.dst}});
      }
    }
    std::sort(hits.begin(), hits.end());
    for (const auto& [order, arc] : hits) {
      ThresholdEvent ev = make_event(arc.first, arc.second, position);
      ev.roles = edge_roles_at(state_, arc.first, arc.second, atlas_);
      ev.standardized = standardizer().apply(ev.roles.ratios);
      events_.push_back(std::move(ev));
    }
  }

  ThresholdEvent make_event(NodeId a, NodeId b, std::size_t position) const {
    ThresholdEvent ev;
    ev.node = a;
    ev.dst = b;
    ev.trigger_index = position;
    ev.snapshot_nodes = state_.active_node_count();
    ev.snapshot_edges = state_.directed_edge_count();
    return ev;
  }

  const RoleStandardizer& standardizer() {
    if (refreshed_at_ && structural_ - *refreshed_at_ < options_.refresh_interval) {
      return standardizer_;
    }
    std::vector<RoleRatios> population;
    const std::int64_t d = options_.d_theta;
    for (NodeId v = 0; v < state_.capacity(); ++v) {
      if (options_.subject == Subject::kNode) {
        if (state_.in_degree(v) == d) {
          population.push_back(node_roles_at(state_, v, atlas_).ratios);
        }
        continue;
      }
      for (const auto& [x, bits] : state_.neighbors(v)) {
        if ((bits & kForward) && in_sum(v, x) == d) {
          population.push_back(edge_roles_at(state_, v, x, atlas_).ratios);
        }
      }
    }
    standardizer_ = RoleStandardizer(population);
    refreshed_at_ = structural_;
    return standardizer_;
  }

  const TemporalGraph& g_;
  const TriadAtlas& atlas_;
  ScanOptions options_;
  AdjacencyState state_;
  std::size_t structural_ = 0;
  std::unordered_map<std::uint64_t, std::size_t> insertion_;
  std::optional<std::size_t> refreshed_at_;
  RoleStandardizer standardizer_;
  std::vector<ThresholdEvent> events_;
};

}  // namespace

std::vector<ThresholdEvent> scan_threshold_events(const TemporalGraph& g,
                                                  const TriadAtlas& atlas,
                                                  const ScanOptions& options) {
  if (options.d_theta < 1) throw std::invalid_argument("d_theta must be >= 1");
  if (options.refresh_interval == 0) {
    throw std::invalid_argument("refresh_interval must be >= 1");
  }
  return ThresholdScanner(g, atlas, options).run();
}

}  // namespace glens
