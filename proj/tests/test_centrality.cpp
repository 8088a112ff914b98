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

#include <cmath>
#include <numeric>

#include "doctest.h"
#include "graphlet_lens/centrality.hpp"
#include "oracles.hpp"

using namespace glens;

namespace {

AdjacencyState state_of(std::initializer_list<std::pair<NodeId, NodeId>> edges, std::size_t n) {
  AdjacencyState s(n);
  for (const auto& [u, v] : edges) s.apply_edge(u, v);
  return s;
}

struct Sample {
  AdjacencyState state;
  oracle::Dense dense;
};

Sample sample(std::uint64_t seed, std::size_t nodes, std::size_t edges) {
  oracle::StreamShape shape;
  shape.nodes = nodes;
  shape.edges = edges;
  shape.reciprocal = 0.15;
  const auto g = oracle::random_graph(seed, shape);
  return {replay(g), oracle::dense_prefix(g, g.edge_count())};
}

double l1(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

}  // namespace

TEST_CASE("directed path") {
  const auto s = state_of({{0, 1}, {1, 2}}, 3);
  const auto b = compute_centrality(s, Measure::kBetweenness).values;
  CHECK(b == std::vector<double>{0, 1, 0});
  CHECK(compute_centrality(s, Measure::kInDegree).values == std::vector<double>{0, 1, 1});
  const auto eb = compute_centrality(s, Measure::kEdgeBetweenness);
  REQUIRE(eb.edges.size() == 2);
  for (std::size_t i = 0; i < eb.edges.size(); ++i) CHECK(eb.values[i] == 2.0);
  // Node 0 reaches two nodes at total distance 3; node 1 reaches one.
  const auto c = compute_centrality(s, Measure::kCloseness).values;
  CHECK(c[0] == doctest::Approx(2.0 / 2.0 * 2.0 / 3.0));
  CHECK(c[1] == doctest::Approx(1.0 / 2.0 * 1.0));
  CHECK(c[2] == 0.0);
}

TEST_CASE("two-node cycle has uniform PageRank") {
  const auto s = state_of({{0, 1}, {1, 0}}, 2);
  const auto p = compute_centrality(s, Measure::kPageRank).values;
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[1] == doctest::Approx(0.5));
}

TEST_CASE("Brandes equals the pair-dependency oracle") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = seed < 10 ? 6 + 2 * seed : 100;
    const auto [state, dense] = sample(seed, n, n * 4);
    const auto b = compute_centrality(state, Measure::kBetweenness).values;
    const auto want = oracle::betweenness(dense);
    for (std::size_t v = 0; v < n; ++v) CHECK(b[v] == doctest::Approx(want[v]).epsilon(1e-9));

    const auto eb = compute_centrality(state, Measure::kEdgeBetweenness);
    const auto ewant = oracle::edge_betweenness(dense);
    REQUIRE(eb.edges.size() == ewant.size());
    for (std::size_t i = 0; i < eb.edges.size(); ++i) {
      CHECK(eb.values[i] == doctest::Approx(ewant.at(eb.edges[i])).epsilon(1e-9));
    }
  }
}

TEST_CASE("all-pairs measures do not depend on the worker count") {
  const auto [state, dense] = sample(5, 80, 400);
  CentralityOptions one, many;
  many.threads = 5;
  for (const Measure m : {Measure::kBetweenness, Measure::kEdgeBetweenness, Measure::kCloseness}) {
    CHECK(compute_centrality(state, m, one).values == compute_centrality(state, m, many).values);
  }
}

TEST_CASE("closeness equals the reachable-set formula over hop distances") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto [state, dense] = sample(seed + 30, 25, 60);
    const auto c = compute_centrality(state, Measure::kCloseness).values;
    const auto dist = oracle::distances(dense);
    double active = 0;
    for (NodeId v = 0; v < dense.n; ++v) active += dense.touches(v);
    for (NodeId s = 0; s < dense.n; ++s) {
      double reached = 0, total = 0;
      for (NodeId t = 0; t < dense.n; ++t) {
        if (t != s && dist[s][t] > 0) {
          reached += 1;
          total += dist[s][t];
        }
      }
      const double want = reached > 0 ? reached / (active - 1) * (reached / total) : 0.0;
      CHECK(c[s] == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("PageRank is a fixed point of the damped walk") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto [state, dense] = sample(seed + 60, 50, 150);
    const auto g = DirectedCsr::from_state(state);
    const auto p = pagerank(g);
    CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(l1(pagerank_step(g, p), p) < 1e-8);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (!g.active()[v]) CHECK(p[v] == 0.0);
    }
  }
}

TEST_CASE("in-degree matches the snapshot") {
  const auto [state, dense] = sample(9, 30, 120);
  const auto d = compute_centrality(state, Measure::kInDegree).values;
  for (NodeId v = 0; v < dense.n; ++v) CHECK(d[v] == dense.in_degree(v));
}

TEST_CASE("all-pairs measures refuse oversized snapshots") {
  const auto s = state_of({{0, 1}, {1, 2}, {2, 3}}, 4);
  CentralityOptions opt;
  opt.max_nodes = 3;
  CHECK_THROWS_AS(compute_centrality(s, Measure::kBetweenness, opt), std::length_error);
  CHECK_THROWS_AS(compute_centrality(s, Measure::kCloseness, opt), std::length_error);
  CHECK_NOTHROW(compute_centrality(s, Measure::kInDegree, opt));
  CHECK_NOTHROW(compute_centrality(s, Measure::kPageRank, opt));
}

TEST_CASE("measure names round-trip") {
  for (const Measure m : {Measure::kInDegree, Measure::kBetweenness, Measure::kCloseness,
                          Measure::kPageRank, Measure::kEdgeBetweenness}) {
    CHECK(parse_measure(measure_name(m)) == m);
  }
  CHECK_FALSE(parse_measure("eigenvector").has_value());
}

TEST_CASE("top-fraction labels") {
  SUBCASE("distinct scores") {
    const std::vector<double> s = {3, 9, 1, 7, 5, 0, 2, 4, 6, 8};
    const auto top = label_top_fraction(s, 0.2);
    CHECK(std::count(top.begin(), top.end(), true) == 2);
    CHECK(top[1]);
    CHECK(top[9]);
  }
  SUBCASE("ties resolve to the smallest ids") {
    const std::vector<double> s(10, 1.0);
    const auto top = label_top_fraction(s, 0.2);
    CHECK(top[0]);
    CHECK(top[1]);
    CHECK(std::count(top.begin(), top.end(), true) == 2);
  }
  SUBCASE("positive count is the ceiling") {
    std::mt19937_64 rng(4);
    for (std::size_t n = 1; n < 120; ++n) {
      std::vector<double> s(n);
      for (auto& x : s) x = static_cast<double>(rng() % 7);
      for (const double f : {0.2, 0.3, 0.5}) {
        const auto top = label_top_fraction(s, f);
        const auto want = static_cast<long>(std::ceil(f * n - 1e-9));
        CHECK(std::count(top.begin(), top.end(), true) == want);
      }
    }
  }
  CHECK_THROWS_AS(label_top_fraction(std::vector<double>{1.0}, 1.0), std::invalid_argument);
}

TEST_CASE("six percentile groups") {
  std::vector<double> s(100);
  std::iota(s.begin(), s.end(), 0.0);
  const auto g = bin_six_groups(s);
  std::array<int, 6> sizes{};
  for (int x : g) ++sizes[x - 1];
  CHECK(sizes == std::array<int, 6>{50, 20, 20, 5, 4, 1});
  CHECK(g[99] == 6);
  CHECK(g[0] == 1);
  CHECK(bin_six_groups(std::vector<double>{4.2}) == std::vector<int>{6});

  // Independent recount: rank r (0-based, descending) belongs to the
  // smallest top-p% band with r < ceil(p * n / 100).
  std::mt19937_64 rng(8);
  for (std::size_t n = 1; n < 300; n += 7) {
    std::vector<double> xs(n);
    for (auto& x : xs) x = static_cast<double>(rng() % 50);
    const auto groups = bin_six_groups(xs);
    const auto order = rank_descending(xs);
    const int percent[5] = {1, 5, 10, 30, 50};
    for (std::size_t r = 0; r < n; ++r) {
      int want = 1;
      for (int b = 0; b < 5; ++b) {
        if (static_cast<double>(r) < std::ceil(percent[b] * static_cast<double>(n) / 100.0)) {
          want = 6 - b;
          break;
        }
      }
      CHECK(groups[order[r]] == want);
    }
  }
}
