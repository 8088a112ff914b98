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

#include "graphlet_lens/centrality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "graphlet_lens/parallel.hpp"

namespace glens {
namespace {

constexpr std::size_t kSourceChunks = 16;

// Single-source shortest-path DAG with path counts (Brandes' first phase).
struct BfsScratch {
  std::vector<NodeId> order;
  std::vector<std::int64_t> dist;
  std::vector<double> sigma;
  std::vector<double> delta;

  explicit BfsScratch(std::size_t n) : dist(n, -1), sigma(n, 0), delta(n, 0) {
    order.reserve(n);
  }

  void run(const DirectedCsr& g, NodeId s) {
    for (NodeId v : order) {
      dist[v] = -1;
      sigma[v] = 0;
      delta[v] = 0;
    }
    order.clear();
    dist[s] = 0;
    sigma[s] = 1;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      for (NodeId w : g.out(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
  }
};

// Accumulates per-source dependencies into `out`, chunk by chunk in a fixed
// order so floating-point sums are reproducible for any worker count.
template <class Accumulate>
std::vector<double> brandes(const DirectedCsr& g, std::size_t out_size, int threads,
                            Accumulate accumulate) {
  const std::size_t n = g.node_count();
  const std::size_t chunks = std::min<std::size_t>(kSourceChunks, std::max<std::size_t>(n, 1));
  std::vector<std::vector<double>> partial(chunks, std::vector<double>(out_size, 0.0));
  parallel_for(chunks, threads, [&](std::size_t c) {
    BfsScratch scratch(n);
    const std::size_t lo = c * n / chunks;
    const std::size_t hi = (c + 1) * n / chunks;
    for (std::size_t s = lo; s < hi; ++s) {
      if (!g.active()[s]) continue;
      scratch.run(g, static_cast<NodeId>(s));
      accumulate(scratch, static_cast<NodeId>(s), partial[c]);
    }
  });
  std::vector<double> out(out_size, 0.0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < out_size; ++i) out[i] += p[i];
  }
  return out;
}

}  // namespace

DirectedCsr DirectedCsr::from_edges(std::size_t node_count,
                                    std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<std::pair<NodeId, NodeId>> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  DirectedCsr g;
  g.offsets_.assign(node_count + 1, 0);
  g.active_.assign(node_count, false);
  for (const auto& [s, t] : sorted) {
    if (s >= node_count || t >= node_count) throw std::out_of_range("edge endpoint out of range");
    if (s == t) throw std::invalid_argument("self-loops are not supported");
    ++g.offsets_[s + 1];
    g.active_[s] = true;
    g.active_[t] = true;
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.targets_.reserve(sorted.size());
  g.sources_.reserve(sorted.size());
  for (const auto& [s, t] : sorted) {
    g.sources_.push_back(s);
    g.targets_.push_back(t);
  }
  g.active_count_ = static_cast<std::size_t>(std::count(g.active_.begin(), g.active_.end(), true));
  return g;
}

DirectedCsr DirectedCsr::from_state(const AdjacencyState& state) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(state.directed_edge_count());
  for (NodeId u = 0; u < state.capacity(); ++u) {
    for (const auto& [w, bits] : state.neighbors(u)) {
      if (bits & kForward) edges.emplace_back(u, w);
    }
  }
  return from_edges(state.capacity(), edges);
}

std::pair<NodeId, NodeId> DirectedCsr::edge(std::size_t id) const {
  return {sources_.at(id), targets_.at(id)};
}

std::vector<double> in_degree_centrality(const DirectedCsr& g) {
  std::vector<double> out(g.node_count(), 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (NodeId w : g.out(v)) out[w] += 1;
  }
  return out;
}

std::vector<double> betweenness(const DirectedCsr& g, int threads) {
  return brandes(g, g.node_count(), threads,
                 [&](BfsScratch& b, NodeId s, std::vector<double>& acc) {
                   for (std::size_t i = b.order.size(); i-- > 0;) {
                     const NodeId v = b.order[i];
                     for (NodeId w : g.out(v)) {
                       if (b.dist[w] == b.dist[v] + 1) {
                         b.delta[v] += b.sigma[v] / b.sigma[w] * (1 + b.delta[w]);
                       }
                     }
                     if (v != s) acc[v] += b.delta[v];
                   }
                 });
}

std::vector<double> edge_betweenness(const DirectedCsr& g, int threads) {
  return brandes(g, g.edge_count(), threads,
                 [&](BfsScratch& b, NodeId, std::vector<double>& acc) {
                   for (std::size_t i = b.order.size(); i-- > 0;) {
                     const NodeId v = b.order[i];
                     const auto nbrs = g.out(v);
                     for (std::size_t k = 0; k < nbrs.size(); ++k) {
                       const NodeId w = nbrs[k];
                       if (b.dist[w] != b.dist[v] + 1) continue;
                       const double c = b.sigma[v] / b.sigma[w] * (1 + b.delta[w]);
                       acc[g.first_edge(v) + k] += c;
                       b.delta[v] += c;
                     }
                   }
                 });
}

std::vector<double> closeness(const DirectedCsr& g, int threads) {
  const std::size_t n = g.node_count();
  const double active = static_cast<double>(g.active_count());
  std::vector<double> out(n, 0.0);
  const std::size_t chunks = std::min<std::size_t>(kSourceChunks, std::max<std::size_t>(n, 1));
  parallel_for(chunks, threads, [&](std::size_t c) {
    BfsScratch scratch(n);
    for (std::size_t s = c * n / chunks; s < (c + 1) * n / chunks; ++s) {
      if (!g.active()[s]) continue;
      scratch.run(g, static_cast<NodeId>(s));
      const double r = static_cast<double>(scratch.order.size());
      if (r <= 1) continue;
      double total = 0;
      for (NodeId v : scratch.order) total += static_cast<double>(scratch.dist[v]);
      out[s] = (r - 1) / (active - 1) * ((r - 1) / total);
    }
  });
  return out;
}

std::vector<double> pagerank_step(const DirectedCsr& g, std::span<const double> p,
                                  double damping) {
  const std::size_t n = g.node_count();
  const double active = static_cast<double>(g.active_count());
  double dangling = 0;
  std::vector<double> next(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    if (!g.active()[v]) continue;
    const auto nbrs = g.out(v);
    if (nbrs.empty()) {
      dangling += p[v];
      continue;
    }
    const double share = p[v] / static_cast<double>(nbrs.size());
    for (NodeId w : nbrs) next[w] += share;
  }
  const double base = (1 - damping) / active + damping * dangling / active;
  for (NodeId v = 0; v < n; ++v) {
    if (g.active()[v]) next[v] = base + damping * next[v];
  }
  return next;
}

std::vector<double> pagerank(const DirectedCsr& g, const PageRankOptions& options) {
  if (g.active_count() == 0) throw std::invalid_argument("pagerank of an empty graph");
  const std::size_t n = g.node_count();
  std::vector<double> p(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    if (g.active()[v]) p[v] = 1.0 / static_cast<double>(g.active_count());
  }
  for (int it = 0; it < options.max_iterations; ++it) {
    auto next = pagerank_step(g, p, options.damping);
    double change = 0;
    for (std::size_t v = 0; v < n; ++v) change += std::abs(next[v] - p[v]);
    p = std::move(next);
    if (change < options.tolerance) break;
  }
  return p;
}

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::kInDegree: return "in-degree";
    case Measure::kBetweenness: return "betweenness";
    case Measure::kCloseness: return "closeness";
    case Measure::kPageRank: return "pagerank";
    case Measure::kEdgeBetweenness: return "edge-betweenness";
  }
  return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
  if (name == "in-degree" || name == "degree") return Measure::kInDegree;
  if (name == "betweenness") return Measure::kBetweenness;
  if (name == "closeness") return Measure::kCloseness;
  if (name == "pagerank") return Measure::kPageRank;
  if (name == "edge-betweenness") return Measure::kEdgeBetweenness;
  return std::nullopt;
}

CentralityScores compute_centrality(const AdjacencyState& state, Measure measure,
                                    const CentralityOptions& options) {
  if (state.directed_edge_count() == 0) {
    throw std::invalid_argument("centrality of an empty snapshot");
  }
  const bool all_pairs = measure == Measure::kBetweenness ||
                         measure == Measure::kCloseness ||
                         measure == Measure::kEdgeBetweenness;
  if (all_pairs && state.active_node_count() > options.max_nodes) {
    throw std::length_error(std::string(measure_name(measure)) + " needs exact all-pairs search; " +
                            std::to_string(state.active_node_count()) +
                            " nodes exceed the bound of " + std::to_string(options.max_nodes));
  }
  const auto g = DirectedCsr::from_state(state);
  CentralityScores scores;
  scores.measure = measure;
  switch (measure) {
    case Measure::kInDegree: scores.values = in_degree_centrality(g); break;
    case Measure::kBetweenness: scores.values = betweenness(g, options.threads); break;
    case Measure::kCloseness: scores.values = closeness(g, options.threads); break;
    case Measure::kPageRank: scores.values = pagerank(g, options.pagerank); break;
    case Measure::kEdgeBetweenness:
      scores.values = edge_betweenness(g, options.threads);
      scores.edges.reserve(g.edge_count());
      for (std::size_t e = 0; e < g.edge_count(); ++e) scores.edges.push_back(g.edge(e));
      break;
  }
  return scores;
}

std::vector<std::size_t> rank_descending(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

std::vector<bool> label_top_fraction(std::span<const double> scores, double fraction) {
  if (!(fraction > 0 && fraction < 1)) throw std::invalid_argument("fraction must be in (0, 1)");
  const double n = static_cast<double>(scores.size());
  // Guards against products such as 0.3 * 10 landing a hair above an integer.
  const auto k = static_cast<std::size_t>(std::ceil(fraction * n * (1 - 1e-12)));
  std::vector<bool> out(scores.size(), false);
  const auto order = rank_descending(scores);
  for (std::size_t r = 0; r < k && r < order.size(); ++r) out[order[r]] = true;
  return out;
}

std::vector<int> bin_six_groups(std::span<const double> scores) {
  const std::size_t n = scores.size();
  const auto cut = [n](std::size_t percent) { return (percent * n + 99) / 100; };
  const std::array<std::size_t, 5> bounds = {cut(1), cut(5), cut(10), cut(30), cut(50)};
  const auto order = rank_descending(scores);
  std::vector<int> out(n, 1);
  for (std::size_t r = 0; r < n; ++r) {
    int group = 1;
    for (std::size_t b = 0; b < bounds.size(); ++b) {
      if (r < bounds[b]) {
        group = 6 - static_cast<int>(b);
        break;
      }
    }
    out[order[r]] = group;
  }
  return out;
}

}  // namespace glens
