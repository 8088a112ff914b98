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

#ifndef GRAPHLET_LENS_CENTRALITY_HPP_
#define GRAPHLET_LENS_CENTRALITY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "graphlet_lens/graph_core.hpp"

namespace glens {

/// Compressed out-adjacency of a snapshot; neighbor lists are sorted.
class DirectedCsr {
 public:
  static DirectedCsr from_state(const AdjacencyState& state);
  static DirectedCsr from_edges(std::size_t node_count,
                                std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size(); }
  std::span<const NodeId> out(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  /// Index of the first out-edge of v; edge ids are CSR positions.
  std::size_t first_edge(NodeId v) const { return offsets_[v]; }
  std::pair<NodeId, NodeId> edge(std::size_t id) const;
  /// Nodes with at least one incident edge.
  const std::vector<bool>& active() const { return active_; }
  std::size_t active_count() const { return active_count_; }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<NodeId> sources_;
  std::vector<bool> active_;
  std::size_t active_count_ = 0;
};

std::vector<double> in_degree_centrality(const DirectedCsr& g);

/// Unnormalized directed betweenness (ordered source-target pairs).
/// Sources are split into a fixed number of chunks reduced in order, so the
/// result does not depend on `threads`.
std::vector<double> betweenness(const DirectedCsr& g, int threads = 1);
/// Per CSR edge id.
std::vector<double> edge_betweenness(const DirectedCsr& g, int threads = 1);

/// Wasserman-Faust closeness over outgoing shortest paths:
/// ((r - 1) / (n - 1)) * ((r - 1) / sum of distances), with r the reachable
/// set including v and n the number of active nodes. Zero when r = 1.
std::vector<double> closeness(const DirectedCsr& g, int threads = 1);

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-9;  // L1 change between iterations
  int max_iterations = 1000;
};
/// Power iteration with uniform teleport over active nodes; dangling mass is
/// spread uniformly. Inactive nodes score 0.
std::vector<double> pagerank(const DirectedCsr& g, const PageRankOptions& options = {});
/// One power-iteration step, for fixed-point checks.
std::vector<double> pagerank_step(const DirectedCsr& g, std::span<const double> p,
                                  double damping = 0.85);

enum class Measure { kInDegree, kBetweenness, kCloseness, kPageRank, kEdgeBetweenness };

std::string_view measure_name(Measure m);
/// Accepts "in-degree" (or "degree"), "betweenness", "closeness",
/// "pagerank", "edge-betweenness".
std::optional<Measure> parse_measure(std::string_view name);

struct CentralityOptions {
  int threads = 1;
  /// All-pairs measures refuse snapshots with more active nodes.
  std::size_t max_nodes = 100000;
  PageRankOptions pagerank;
};

struct CentralityScores {
  Measure measure = Measure::kInDegree;
  std::vector<double> values;
  /// Subject of each value for kEdgeBetweenness; empty otherwise.
  std::vector<std::pair<NodeId, NodeId>> edges;
};

/// Throws std::invalid_argument on an empty snapshot and std::length_error
/// when an all-pairs measure exceeds `max_nodes`.
CentralityScores compute_centrality(const AdjacencyState& state, Measure measure,
                                    const CentralityOptions& options = {});

/// Subjects sorted by descending score, ties by ascending index.
std::vector<std::size_t> rank_descending(std::span<const double> scores);

/// True for the first ceil(fraction * n) subjects of rank_descending.
std::vector<bool> label_top_fraction(std::span<const double> scores, double fraction);

/// Groups 1..6: top 50-100%, 30-50%, 10-30%, 5-10%, 1-5%, 0-1%, each
/// boundary at ceil(p * n) ranks.
std::vector<int> bin_six_groups(std::span<const double> scores);

}  // namespace glens

#endif  // GRAPHLET_LENS_CENTRALITY_HPP_
