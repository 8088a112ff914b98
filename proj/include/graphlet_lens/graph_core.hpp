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

#ifndef GRAPHLET_LENS_GRAPH_CORE_HPP_
#define GRAPHLET_LENS_GRAPH_CORE_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphlet_lens/common.hpp"

namespace glens {

struct TemporalEdge {
  NodeId src = 0;
  NodeId dst = 0;
  Timestamp time = 0;

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

/// An edge as it appears in an input file, before id compaction.
struct RawEdge {
  std::int64_t src = 0;
  std::int64_t dst = 0;
  Timestamp time = 0;
};

struct IngestStats {
  std::size_t data_lines = 0;  // non-comment, non-blank lines
  std::size_t self_loops = 0;  // dropped
  std::size_t distinct_pairs = 0;  // distinct directed (src,dst) pairs kept
};

/// Time-ordered stream of directed edges over densely numbered nodes.
/// Immutable once built.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  /// Compacts ids (ascending original id -> 0, 1, ...), drops self-loops,
  /// and stably sorts by time.
  static TemporalGraph from_raw(std::span<const RawEdge> raw);

  /// Takes already-compacted edges; they are stably re-sorted by time.
  /// `original_ids[i]` is the external id of node i.
  TemporalGraph(std::vector<TemporalEdge> edges,
                std::vector<std::int64_t> original_ids);

  const std::vector<TemporalEdge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t node_count() const { return original_ids_.size(); }
  bool empty() const { return edges_.empty(); }

  std::int64_t original_id(NodeId v) const { return original_ids_.at(v); }
  const std::vector<std::int64_t>& original_ids() const { return original_ids_; }
  const IngestStats& ingest_stats() const { return stats_; }

 private:
  std::vector<TemporalEdge> edges_;
  std::vector<std::int64_t> original_ids_;
  IngestStats stats_;
};

/// Parses a SNAP-style "src dst time" stream. '#' lines are comments.
/// Throws ParseError (with line number) on malformed lines or when no edge
/// line is present.
TemporalGraph parse_edge_list(std::istream& in);
TemporalGraph load_edge_list(const std::filesystem::path& path);

/// Same directed pairs and same multiset of times, with the times assigned
/// to edges by a uniformly random bijection; re-sorted by time.
TemporalGraph shuffle_times(const TemporalGraph& g, std::uint64_t seed);

/// Direction bits of an unordered node pair, seen from the first node.
inline constexpr std::uint8_t kNoEdge = 0;
inline constexpr std::uint8_t kForward = 1;   // this -> neighbor
inline constexpr std::uint8_t kBackward = 2;  // neighbor -> this
inline constexpr std::uint8_t kBoth = 3;

constexpr std::uint8_t swap_direction(std::uint8_t bits) {
  return static_cast<std::uint8_t>(((bits & kForward) << 1) |
                                   ((bits & kBackward) >> 1));
}

enum class EdgeUpdate { kNewDirected, kDuplicate, kNewReciprocal };

/// Mutable snapshot: the set of directed edges seen so far.
class AdjacencyState {
 public:
  using NeighborMap = std::unordered_map<NodeId, std::uint8_t>;

  explicit AdjacencyState(std::size_t node_count);

  EdgeUpdate apply_edge(NodeId src, NodeId dst);
  EdgeUpdate apply_edge(const TemporalEdge& e) { return apply_edge(e.src, e.dst); }

  /// Direction bits of pair (u, v) from u's side.
  std::uint8_t pair_state(NodeId u, NodeId v) const;
  bool has_edge(NodeId src, NodeId dst) const {
    return (pair_state(src, dst) & kForward) != 0;
  }

  const NeighborMap& neighbors(NodeId v) const { return adj_[v]; }
  std::size_t neighbor_count(NodeId v) const { return adj_[v].size(); }
  /// Directed edges incident to v; a reciprocal pair counts twice.
  std::uint32_t degree(NodeId v) const { return degree_[v]; }
  std::uint32_t in_degree(NodeId v) const { return in_degree_[v]; }
  std::uint32_t out_degree(NodeId v) const { return degree_[v] - in_degree_[v]; }

  std::size_t capacity() const { return adj_.size(); }
  /// Nodes with at least one incident edge.
  std::size_t active_node_count() const { return active_nodes_; }
  std::size_t directed_edge_count() const { return directed_edges_; }
  std::size_t adjacent_pair_count() const { return adjacent_pairs_; }

 private:
  std::vector<NeighborMap> adj_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> in_degree_;
  std::size_t active_nodes_ = 0;
  std::size_t directed_edges_ = 0;
  std::size_t adjacent_pairs_ = 0;
};

/// Snapshot after the first `prefix` edges of the stream.
AdjacencyState replay(const TemporalGraph& g, std::size_t prefix);
inline AdjacencyState replay(const TemporalGraph& g) {
  return replay(g, g.edge_count());
}

}  // namespace glens

#endif  // GRAPHLET_LENS_GRAPH_CORE_HPP_
