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

// Brute-force reference implementations and random generators for tests.
// Nothing here calls into the library's counting, orbit or centrality code;
// results are only translated into the library's id numbering at the end.

#ifndef GRAPHLET_LENS_TESTS_ORACLES_HPP_
#define GRAPHLET_LENS_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "graphlet_lens/graph_core.hpp"
#include "graphlet_lens/triad_atlas.hpp"

namespace oracle {

using glens::NodeId;

// ---- triads -------------------------------------------------------------

// Mask over (a, b, c) with bit0 a->b, bit1 b->a, bit2 a->c, bit3 c->a,
// bit4 b->c, bit5 c->b.
constexpr int bit_of(int from, int to) {
  constexpr int table[3][3] = {{-1, 0, 2}, {1, -1, 4}, {3, 5, -1}};
  return table[from][to];
}

inline std::uint8_t relabel(std::uint8_t mask, const std::array<int, 3>& p) {
  std::uint8_t out = 0;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x != y && (mask >> bit_of(x, y) & 1)) out |= static_cast<std::uint8_t>(1 << bit_of(p[x], p[y]));
    }
  }
  return out;
}

inline const std::vector<std::array<int, 3>>& all_perms() {
  static const std::vector<std::array<int, 3>> perms = [] {
    std::vector<std::array<int, 3>> out;
    std::array<int, 3> p = {0, 1, 2};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

inline std::uint8_t canonical(std::uint8_t mask) {
  std::uint8_t best = 0xff;
  for (const auto& p : all_perms()) best = std::min(best, relabel(mask, p));
  return best;
}

inline bool weakly_connected(std::uint8_t mask) {
  // Union of the three undirected pairs must reach all three nodes.
  const bool ab = mask & 0x03, ac = mask & 0x0c, bc = mask & 0x30;
  return (ab && ac) || (ab && bc) || (ac && bc);
}

// Connected class representatives ordered by (edge count, mask).
inline const std::vector<std::uint8_t>& graphlet_reps() {
  static const std::vector<std::uint8_t> reps = [] {
    std::set<std::pair<int, int>> found;
    for (int m = 0; m < 64; ++m) {
      const auto c = canonical(static_cast<std::uint8_t>(m));
      if (weakly_connected(c)) found.insert({__builtin_popcount(c), c});
    }
    std::vector<std::uint8_t> out;
    for (const auto& [_, c] : found) out.push_back(static_cast<std::uint8_t>(c));
    return out;
  }();
  return reps;
}

// 1-based graphlet id of a connected mask, 0 otherwise.
inline int graphlet_of(std::uint8_t mask) {
  if (!weakly_connected(mask)) return 0;
  const auto& reps = graphlet_reps();
  const auto c = canonical(mask);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (reps[i] == c) return static_cast<int>(i) + 1;
  }
  return -1;
}

// Node and edge orbit numbering: by graphlet, then smallest member
// position (slot) in the representative.
struct OrbitTables {
  std::array<std::array<int, 3>, 64> node{};
  std::array<std::array<int, 6>, 64> edge{};
  int node_orbits = 0;
  int edge_orbits = 0;
};

inline const OrbitTables& orbit_tables() {
  static const OrbitTables tables = [] {
    OrbitTables t;
    const auto& reps = graphlet_reps();
    std::vector<std::array<int, 3>> rep_node(reps.size());
    std::vector<std::array<int, 6>> rep_edge(reps.size());
    for (std::size_t g = 0; g < reps.size(); ++g) {
      std::vector<std::array<int, 3>> autos;
      for (const auto& p : all_perms()) {
        if (relabel(reps[g], p) == reps[g]) autos.push_back(p);
      }
      rep_node[g].fill(0);
      for (int pos = 0; pos < 3; ++pos) {
        int smallest = pos;
        for (const auto& a : autos) smallest = std::min(smallest, a[pos]);
        if (smallest == pos) rep_node[g][pos] = ++t.node_orbits;
      }
      for (int pos = 0; pos < 3; ++pos) {
        int smallest = pos;
        for (const auto& a : autos) smallest = std::min(smallest, a[pos]);
        rep_node[g][pos] = rep_node[g][smallest];
      }
      rep_edge[g].fill(0);
      // Slots of the representative in increasing order; an orbit is new
      // when no automorphism maps the slot to a smaller one.
      for (int s = 0; s < 6; ++s) {
        if (!(reps[g] >> s & 1)) continue;
        int smallest = s;
        for (const auto& a : autos) {
          for (int x = 0; x < 3; ++x) {
            for (int y = 0; y < 3; ++y) {
              if (x != y && bit_of(x, y) == s) smallest = std::min(smallest, bit_of(a[x], a[y]));
            }
          }
        }
        rep_edge[g][s] = smallest == s ? ++t.edge_orbits : rep_edge[g][smallest];
      }
    }
    for (int m = 0; m < 64; ++m) {
      t.node[m].fill(0);
      t.edge[m].fill(0);
      const int g = graphlet_of(static_cast<std::uint8_t>(m));
      if (g == 0) continue;
      for (const auto& p : all_perms()) {
        if (relabel(static_cast<std::uint8_t>(m), p) != reps[g - 1]) continue;
        for (int pos = 0; pos < 3; ++pos) t.node[m][pos] = rep_node[g - 1][p[pos]];
        for (int x = 0; x < 3; ++x) {
          for (int y = 0; y < 3; ++y) {
            if (x != y && (m >> bit_of(x, y) & 1)) t.edge[m][bit_of(x, y)] = rep_edge[g - 1][bit_of(p[x], p[y])];
          }
        }
        break;
      }
    }
    return t;
  }();
  return tables;
}

// ---- dense graphs ---------------------------------------------------------

struct Dense {
  explicit Dense(std::size_t n) : n(n), adj(n, std::vector<char>(n, 0)) {}
  std::size_t n;
  std::vector<std::vector<char>> adj;  // adj[u][v]: u -> v present

  bool add(NodeId u, NodeId v) {
    if (u == v || adj[u][v]) return false;
    adj[u][v] = 1;
    return true;
  }
  bool touches(NodeId v) const {
    for (std::size_t x = 0; x < n; ++x) {
      if (adj[v][x] || adj[x][v]) return true;
    }
    return false;
  }
  bool linked(NodeId u, NodeId v) const { return adj[u][v] || adj[v][u]; }
  std::uint8_t mask(NodeId a, NodeId b, NodeId c) const {
    std::uint8_t m = 0;
    const NodeId nodes[3] = {a, b, c};
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        if (x != y && adj[nodes[x]][nodes[y]]) m |= static_cast<std::uint8_t>(1 << bit_of(x, y));
      }
    }
    return m;
  }
  int in_degree(NodeId v) const {
    int d = 0;
    for (std::size_t x = 0; x < n; ++x) d += adj[x][v];
    return d;
  }
};

inline Dense dense_prefix(const glens::TemporalGraph& g, std::size_t prefix) {
  Dense d(g.node_count());
  for (std::size_t i = 0; i < prefix; ++i) d.add(g.edges()[i].src, g.edges()[i].dst);
  return d;
}

// O(n^3) census over all unordered triples.
inline std::array<std::int64_t, 13> census(const Dense& d) {
  std::array<std::int64_t, 13> out{};
  for (NodeId a = 0; a < d.n; ++a) {
    for (NodeId b = a + 1; b < d.n; ++b) {
      for (NodeId c = b + 1; c < d.n; ++c) {
        const int g = graphlet_of(d.mask(a, b, c));
        if (g > 0) ++out[g - 1];
      }
    }
  }
  return out;
}

inline std::array<std::int64_t, 30> node_orbit_tally(const Dense& d, NodeId v) {
  std::array<std::int64_t, 30> out{};
  for (NodeId x = 0; x < d.n; ++x) {
    for (NodeId y = x + 1; y < d.n; ++y) {
      if (x == v || y == v) continue;
      const int o = orbit_tables().node[d.mask(v, x, y)][0];
      if (o > 0) ++out[o - 1];
    }
  }
  return out;
}

inline std::array<std::int64_t, 30> edge_orbit_tally(const Dense& d, NodeId u, NodeId v) {
  std::array<std::int64_t, 30> out{};
  for (NodeId w = 0; w < d.n; ++w) {
    if (w == u || w == v) continue;
    const int o = orbit_tables().edge[d.mask(u, v, w)][0];
    if (o > 0) ++out[o - 1];
  }
  return out;
}

struct Npp {
  double triangles = 0, wedges_centered = 0, wedges_ended = 0, edges_not_incident = 0,
         nonadjacent_pairs = 0;
};

inline Npp npp(const Dense& d, NodeId v) {
  Npp out;
  std::vector<char> active(d.n);
  for (NodeId x = 0; x < d.n; ++x) active[x] = d.touches(x);
  for (NodeId x = 0; x < d.n; ++x) {
    for (NodeId y = x + 1; y < d.n; ++y) {
      if (!d.linked(x, y)) continue;
      if (x != v && y != v) out.edges_not_incident += 1;
    }
  }
  for (NodeId x = 0; x < d.n; ++x) {
    for (NodeId y = x + 1; y < d.n; ++y) {
      if (x == v || y == v) continue;
      if (d.linked(v, x) && d.linked(v, y)) {
        out.wedges_centered += 1;
        if (d.linked(x, y)) out.triangles += 1;
      }
    }
  }
  for (NodeId w = 0; w < d.n; ++w) {
    if (w == v || !d.linked(v, w)) continue;
    for (NodeId x = 0; x < d.n; ++x) {
      if (x != v && x != w && d.linked(w, x)) out.wedges_ended += 1;
    }
  }
  // Pairs (w, x): w a neighbor of v, x active, neither v nor a neighbor
  // of v, and w, x not adjacent.
  for (NodeId w = 0; w < d.n; ++w) {
    if (w == v || !d.linked(v, w)) continue;
    for (NodeId x = 0; x < d.n; ++x) {
      if (x == v || x == w || !active[x] || d.linked(v, x)) continue;
      if (!d.linked(w, x)) out.nonadjacent_pairs += 1;
    }
  }
  return out;
}

// ---- paths ----------------------------------------------------------------

constexpr int kUnreached = -1;

// All-pairs hop distances by Floyd-Warshall.
inline std::vector<std::vector<int>> distances(const Dense& d) {
  const int inf = 1 << 28;
  std::vector<std::vector<int>> dist(d.n, std::vector<int>(d.n, inf));
  for (std::size_t i = 0; i < d.n; ++i) {
    dist[i][i] = 0;
    for (std::size_t j = 0; j < d.n; ++j) {
      if (d.adj[i][j]) dist[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < d.n; ++k) {
    for (std::size_t i = 0; i < d.n; ++i) {
      for (std::size_t j = 0; j < d.n; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }
  for (auto& row : dist) {
    for (auto& x : row) {
      if (x >= inf) x = kUnreached;
    }
  }
  return dist;
}

// Number of shortest paths between every ordered pair, by dynamic
// programming over increasing distance.
inline std::vector<std::vector<double>> path_counts(const Dense& d,
                                                    const std::vector<std::vector<int>>& dist) {
  std::vector<std::vector<double>> sigma(d.n, std::vector<double>(d.n, 0.0));
  for (std::size_t s = 0; s < d.n; ++s) {
    sigma[s][s] = 1;
    int max_d = 0;
    for (std::size_t t = 0; t < d.n; ++t) max_d = std::max(max_d, dist[s][t]);
    for (int len = 1; len <= max_d; ++len) {
      for (std::size_t t = 0; t < d.n; ++t) {
        if (dist[s][t] != len) continue;
        for (std::size_t p = 0; p < d.n; ++p) {
          if (d.adj[p][t] && dist[s][p] == len - 1) sigma[s][t] += sigma[s][p];
        }
      }
    }
  }
  return sigma;
}

// Pair-dependency betweenness: sum over s != v != t of
// sigma_sv * sigma_vt / sigma_st for v on a shortest s-t path.
inline std::vector<double> betweenness(const Dense& d) {
  const auto dist = distances(d);
  const auto sigma = path_counts(d, dist);
  std::vector<double> out(d.n, 0.0);
  for (std::size_t s = 0; s < d.n; ++s) {
    for (std::size_t t = 0; t < d.n; ++t) {
      if (s == t || dist[s][t] <= 0) continue;
      for (std::size_t v = 0; v < d.n; ++v) {
        if (v == s || v == t || dist[s][v] < 0 || dist[v][t] < 0) continue;
        if (dist[s][v] + dist[v][t] == dist[s][t]) out[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
      }
    }
  }
  return out;
}

inline std::map<std::pair<NodeId, NodeId>, double> edge_betweenness(const Dense& d) {
  const auto dist = distances(d);
  const auto sigma = path_counts(d, dist);
  std::map<std::pair<NodeId, NodeId>, double> out;
  for (NodeId u = 0; u < d.n; ++u) {
    for (NodeId v = 0; v < d.n; ++v) {
      if (!d.adj[u][v]) continue;
      double total = 0;
      for (std::size_t s = 0; s < d.n; ++s) {
        for (std::size_t t = 0; t < d.n; ++t) {
          if (s == t || dist[s][t] <= 0 || dist[s][u] < 0 || dist[v][t] < 0) continue;
          if (dist[s][u] + 1 + dist[v][t] == dist[s][t]) total += sigma[s][u] * sigma[v][t] / sigma[s][t];
        }
      }
      out[{u, v}] = total;
    }
  }
  return out;
}

// ---- random streams ---------------------------------------------------------

struct StreamShape {
  std::size_t nodes = 30;
  std::size_t edges = 200;
  double reciprocal = 0.2;  // chance the next edge reverses a recent one
  double duplicate = 0.1;   // chance the next edge repeats a recent one
  double self_loop = 0.0;
  int time_span = 0;        // 0: strictly increasing times
};

inline std::vector<glens::RawEdge> random_raw_stream(std::mt19937_64& rng, const StreamShape& shape) {
  std::vector<glens::RawEdge> out;
  std::uniform_int_distribution<std::int64_t> node(0, static_cast<std::int64_t>(shape.nodes) - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t i = 0; i < shape.edges; ++i) {
    glens::RawEdge e;
    const double r = coin(rng);
    if (!out.empty() && r < shape.duplicate) {
      std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
      e = out[pick(rng)];
    } else if (!out.empty() && r < shape.duplicate + shape.reciprocal) {
      std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
      const auto base = out[pick(rng)];
      e.src = base.dst;
      e.dst = base.src;
    } else if (r < shape.duplicate + shape.reciprocal + shape.self_loop) {
      e.src = e.dst = node(rng);
    } else {
      do {
        e.src = node(rng);
        e.dst = node(rng);
      } while (e.src == e.dst);
    }
    if (shape.time_span > 0) {
      e.time = std::uniform_int_distribution<int>(0, shape.time_span)(rng);
    } else {
      e.time = static_cast<glens::Timestamp>(i);
    }
    out.push_back(e);
  }
  return out;
}

inline glens::TemporalGraph random_graph(std::uint64_t seed, const StreamShape& shape) {
  std::mt19937_64 rng(seed);
  const auto raw = random_raw_stream(rng, shape);
  return glens::TemporalGraph::from_raw(raw);
}

// Shapes used by the randomized corpus: n <= 60, m <= 400.
inline StreamShape corpus_shape(std::uint64_t i) {
  std::mt19937_64 rng(0xC0FFEE + i);
  StreamShape s;
  s.nodes = 3 + rng() % 58;
  s.edges = 1 + rng() % 400;
  s.reciprocal = 0.05 + 0.4 * static_cast<double>(rng() % 100) / 100.0;
  s.duplicate = 0.2 * static_cast<double>(rng() % 100) / 100.0;
  return s;
}

}  // namespace oracle

#endif  // GRAPHLET_LENS_TESTS_ORACLES_HPP_
