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

#include "graphlet_lens/transition_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "graphlet_lens/parallel.hpp"
#include "graphlet_lens/random.hpp"
#include "graphlet_lens/stats.hpp"

namespace glens {
namespace {

int resolve_threads(int threads) {
  return threads > 0 ? threads : default_thread_count();
}

GraphletCounts final_census(const TemporalGraph& g, const TriadAtlas& atlas) {
  if (g.empty()) return {};
  return count_stream(g, atlas, 1).final_counts();
}

std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::vector<double> to_doubles(std::span<const std::uint64_t> xs) {
  return {xs.begin(), xs.end()};
}

std::vector<double> to_doubles(std::span<const std::int64_t> xs) {
  return {xs.begin(), xs.end()};
}

}  // namespace

GraphletTransitionGraph compute_gtg(const TemporalGraph& g, const TriadAtlas& atlas) {
  GraphletTransitionGraph gtg;
  AdjacencyState state(g.node_count());
  for (const auto& e : g.edges()) {
    if (state.has_edge(e.src, e.dst)) continue;
    for_each_affected_triple(state, e.src, e.dst, [&](NodeId, TriadCode before) {
      if (const int t = atlas.transition_raw(before.mask, 0)) ++gtg.weights[t - 1];
    });
    state.apply_edge(e);
  }
  return gtg;
}

GraphletCounts TransitionBalance::net() const {
  GraphletCounts out{};
  for (int k = 0; k < kNumGraphlets; ++k) out[k] = births[k] + inbound[k] - outbound[k];
  return out;
}

TransitionBalance balance(const GraphletTransitionGraph& gtg, const TriadAtlas& atlas) {
  TransitionBalance b;
  for (const auto& t : atlas.transitions()) {
    const auto w = static_cast<std::int64_t>(gtg.weights[t.id.index()]);
    if (t.source_graphlet) {
      b.outbound[t.source_graphlet->index()] += w;
      b.inbound[t.target.index()] += w;
    } else {
      b.births[t.target.index()] += w;
    }
  }
  return b;
}

double SignificanceProfile::norm() const {
  double ss = 0;
  for (double x : profile) ss += x * x;
  return std::sqrt(ss);
}

SignificanceProfile significance_profile(std::span<const double> observed,
                                         std::span<const double> random_mean,
                                         double epsilon) {
  if (observed.size() != random_mean.size()) {
    throw std::invalid_argument("observed and baseline differ in length");
  }
  if (epsilon < 0) throw std::invalid_argument("epsilon must be non-negative");
  SignificanceProfile sp;
  sp.observed.assign(observed.begin(), observed.end());
  sp.random_mean.assign(random_mean.begin(), random_mean.end());
  sp.significance.resize(observed.size());
  double ss = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double denom = observed[i] + random_mean[i] + epsilon;
    const double s = denom > 0 ? (observed[i] - random_mean[i]) / denom : 0.0;
    sp.significance[i] = s;
    ss += s * s;
  }
  sp.profile.assign(observed.size(), 0.0);
  if (ss > 0) {
    const double n = std::sqrt(ss);
    for (std::size_t i = 0; i < observed.size(); ++i) sp.profile[i] = sp.significance[i] / n;
  }
  return sp;
}

SignificanceProfile compute_cp(const TemporalGraph& g, const TriadAtlas& atlas,
                               const ProfileOptions& options) {
  if (options.n_random < 1) throw std::invalid_argument("n_random must be >= 1");
  const auto observed = compute_gtg(g, atlas);
  std::vector<GraphletTransitionGraph> replicas(options.n_random);
  parallel_for(replicas.size(), resolve_threads(options.threads), [&](std::size_t i) {
    const auto shuffled = g.empty() ? g : shuffle_times(g, child_seed(options.seed, i));
    replicas[i] = compute_gtg(shuffled, atlas);
  });
  std::vector<double> mean_weights(kNumTransitions, 0.0);
  for (const auto& r : replicas) {
    for (int t = 0; t < kNumTransitions; ++t) mean_weights[t] += static_cast<double>(r.weights[t]);
  }
  for (double& m : mean_weights) m /= static_cast<double>(replicas.size());
  return significance_profile(to_doubles(observed.weights), mean_weights, options.epsilon);
}

AdjacencyState rewire_degree_preserving(const AdjacencyState& state,
                                        std::uint64_t seed, int swaps_per_edge) {
  struct Arc {
    NodeId src, dst;
  };
  std::vector<Arc> singles;
  std::vector<Arc> mutuals;
  std::unordered_set<std::uint64_t> adjacent;
  for (NodeId u = 0; u < state.capacity(); ++u) {
    for (const auto& [w, bits] : state.neighbors(u)) {
      if (bits == kForward) singles.push_back({u, w});
      if (bits == kBoth && u < w) mutuals.push_back({u, w});
      if (u < w) adjacent.insert(pair_key(u, w));
    }
  }
  // Unordered-map iteration order is implementation-defined; sort so a seed
  // gives the same result on every standard library.
  const auto by_nodes = [](const Arc& a, const Arc& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  };
  std::sort(singles.begin(), singles.end(), by_nodes);
  std::sort(mutuals.begin(), mutuals.end(), by_nodes);

  Rng rng(seed);
  const std::size_t total = singles.size() + mutuals.size();
  const std::uint64_t attempts =
      static_cast<std::uint64_t>(std::max(swaps_per_edge, 0)) * total;
  for (std::uint64_t k = 0; k < attempts; ++k) {
    auto& pool = rng.below(total) < singles.size() ? singles : mutuals;
    if (pool.size() < 2) continue;
    const std::size_t i = rng.below(pool.size());
    const std::size_t j = rng.below(pool.size());
    if (i == j) continue;
    Arc& x = pool[i];
    Arc& y = pool[j];
    // x = a->b, y = c->d becomes a->d, c->b.
    if (x.src == y.src || x.src == y.dst || x.dst == y.src || x.dst == y.dst) continue;
    if (adjacent.contains(pair_key(x.src, y.dst)) ||
        adjacent.contains(pair_key(y.src, x.dst))) {
      continue;
    }
    adjacent.erase(pair_key(x.src, x.dst));
    adjacent.erase(pair_key(y.src, y.dst));
    std::swap(x.dst, y.dst);
    adjacent.insert(pair_key(x.src, x.dst));
    adjacent.insert(pair_key(y.src, y.dst));
  }

  AdjacencyState out(state.capacity());
  for (const auto& a : singles) out.apply_edge(a.src, a.dst);
  for (const auto& a : mutuals) {
    out.apply_edge(a.src, a.dst);
    out.apply_edge(a.dst, a.src);
  }
  return out;
}

SignificanceProfile cp_from_occurrences(const TemporalGraph& g,
                                        const TriadAtlas& atlas,
                                        const ProfileOptions& options,
                                        NullModel null_model) {
  if (options.n_random < 1) throw std::invalid_argument("n_random must be >= 1");
  const auto observed = final_census(g, atlas);
  const auto final_state =
      null_model == NullModel::kDegreePreserving ? replay(g) : AdjacencyState(0);
  std::vector<GraphletCounts> replicas(options.n_random);
  parallel_for(replicas.size(), resolve_threads(options.threads), [&](std::size_t i) {
    const auto seed = child_seed(options.seed, i);
    if (null_model == NullModel::kTimeShuffle) {
      replicas[i] = g.empty() ? GraphletCounts{} : final_census(shuffle_times(g, seed), atlas);
    } else {
      replicas[i] = census_bruteforce(rewire_degree_preserving(final_state, seed), atlas);
    }
  });
  std::vector<double> mean_counts(kNumGraphlets, 0.0);
  for (const auto& r : replicas) {
    for (int k = 0; k < kNumGraphlets; ++k) mean_counts[k] += static_cast<double>(r[k]);
  }
  for (double& m : mean_counts) m /= static_cast<double>(replicas.size());
  return significance_profile(to_doubles(observed), mean_counts, options.epsilon);
}

double cp_similarity(std::span<const double> a, std::span<const double> b) {
  return pearson(a, b);
}

ThresholdClassification classify_by_threshold(const SimilarityMatrix& sim,
                                              std::span<const std::string> labels) {
  const std::size_t n = sim.size();
  if (n < 2) throw std::invalid_argument("need at least two graphs");
  if (labels.size() != n) throw std::invalid_argument("one label per graph required");
  for (const auto& row : sim) {
    if (row.size() != n) throw std::invalid_argument("similarity matrix must be square");
  }

  std::vector<double> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) candidates.push_back(sim[i][j]);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  candidates.push_back(std::nextafter(candidates.back(),
                                      std::numeric_limits<double>::infinity()));

  const double pairs = static_cast<double>(n * (n - 1) / 2);
  ThresholdClassification best{candidates.front(), -1.0};
  for (double threshold : candidates) {
    std::size_t correct = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool predicted = sim[i][j] >= threshold;
        correct += predicted == (labels[i] == labels[j]);
      }
    }
    const double accuracy = static_cast<double>(correct) / pairs;
    if (accuracy > best.accuracy) best = {threshold, accuracy};
  }
  return best;
}

}  // namespace glens
