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

#ifndef GRAPHLET_LENS_TRANSITION_GRAPH_HPP_
#define GRAPHLET_LENS_TRANSITION_GRAPH_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graphlet_lens/graph_core.hpp"
#include "graphlet_lens/streaming_counter.hpp"
#include "graphlet_lens/triad_atlas.hpp"

namespace glens {

/// Occurrence counts of the 28 transition types, indexed by
/// TransitionId::index().
struct GraphletTransitionGraph {
  std::array<std::uint64_t, kNumTransitions> weights{};
};

/// Replays the stream; for each structural arrival u->v, every third node
/// adjacent to u or v contributes one transition from the class of
/// (u, v, w) without u->v to the graphlet with it.
GraphletTransitionGraph compute_gtg(const TemporalGraph& g, const TriadAtlas& atlas);

/// Per-graphlet bookkeeping derived from transition weights. `births` are
/// arrivals from a one-dyad triad; `inbound` and `outbound` are transitions
/// between graphlets. births + inbound - outbound equals the final census.
struct TransitionBalance {
  GraphletCounts births{};
  GraphletCounts inbound{};
  GraphletCounts outbound{};

  GraphletCounts net() const;
};
TransitionBalance balance(const GraphletTransitionGraph& gtg, const TriadAtlas& atlas);

struct ProfileOptions {
  int n_random = 50;
  double epsilon = 4.0;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Significance of observed statistics against a randomized baseline.
struct SignificanceProfile {
  std::vector<double> observed;
  std::vector<double> random_mean;
  std::vector<double> significance;  // (w - w~) / (w + w~ + eps)
  std::vector<double> profile;       // significance / ||significance||, or 0

  double norm() const;
};

/// Builds the profile from observed and baseline statistics.
SignificanceProfile significance_profile(std::span<const double> observed,
                                         std::span<const double> random_mean,
                                         double epsilon);

/// Characteristic profile over the 28 transitions; the baseline is the mean
/// over `n_random` time-shuffled replicas. Replica i uses
/// child_seed(seed, i), so results do not depend on the thread count.
SignificanceProfile compute_cp(const TemporalGraph& g, const TriadAtlas& atlas,
                               const ProfileOptions& options);

enum class NullModel {
  /// Time shuffling; leaves the final snapshot unchanged.
  kTimeShuffle,
  /// Degree-preserving switching of the final snapshot, keeping the
  /// in/out degree of single edges and the mutual-edge degree of every node.
  kDegreePreserving,
};

/// Profile over the 13 final graphlet counts.
SignificanceProfile cp_from_occurrences(const TemporalGraph& g,
                                        const TriadAtlas& atlas,
                                        const ProfileOptions& options,
                                        NullModel null_model = NullModel::kDegreePreserving);

/// Final snapshot rewired by degree-preserving edge switches
/// (`swaps_per_edge` attempts per edge).
AdjacencyState rewire_degree_preserving(const AdjacencyState& state,
                                        std::uint64_t seed,
                                        int swaps_per_edge = 10);

/// Pearson correlation of two profiles of equal length.
double cp_similarity(std::span<const double> a, std::span<const double> b);

using SimilarityMatrix = std::vector<std::vector<double>>;

struct ThresholdClassification {
  double threshold = 0;
  double accuracy = 0;
};

/// Predicts "same domain" for a pair iff similarity >= threshold, scanning
/// every distinct off-diagonal value plus one value above the maximum; the
/// smallest threshold with the best pairwise accuracy wins.
ThresholdClassification classify_by_threshold(const SimilarityMatrix& sim,
                                              std::span<const std::string> labels);

}  // namespace glens

#endif  // GRAPHLET_LENS_TRANSITION_GRAPH_HPP_
