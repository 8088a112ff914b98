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

#include <numeric>

#include "doctest.h"
#include "graphlet_lens/streaming_counter.hpp"
#include "oracles.hpp"

using namespace glens;

namespace {

const TriadAtlas& atlas() {
  static const TriadAtlas a = TriadAtlas::build();
  return a;
}

TemporalGraph stream(std::initializer_list<std::pair<NodeId, NodeId>> edges) {
  std::vector<TemporalEdge> out;
  NodeId n = 0;
  Timestamp t = 0;
  for (const auto& [u, v] : edges) {
    out.push_back({u, v, t++});
    n = std::max({n, u + 1, v + 1});
  }
  std::vector<std::int64_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return TemporalGraph(std::move(out), std::move(ids));
}

int id_of(std::initializer_list<std::pair<int, int>> edges) {
  std::uint8_t m = 0;
  for (const auto& [a, b] : edges) m |= static_cast<std::uint8_t>(1 << oracle::bit_of(a, b));
  return atlas().classify(TriadCode{m})->value;
}

}  // namespace

TEST_CASE("wedge and cycle toy streams") {
  const int path = id_of({{0, 1}, {1, 2}});
  const int cycle = id_of({{0, 1}, {1, 2}, {2, 0}});
  const auto wedge = count_stream(stream({{0, 1}, {1, 2}}), atlas(), 2);
  GraphletCounts want{};
  want[path - 1] = 1;
  CHECK(wedge.final_counts() == want);

  const auto cyc = count_stream(stream({{0, 1}, {1, 2}, {2, 0}}), atlas(), 3);
  REQUIRE(cyc.checkpoints.size() == 3);
  CHECK(cyc.checkpoints[1].counts[path - 1] == 1);
  GraphletCounts after{};
  after[cycle - 1] = 1;
  CHECK(cyc.final_counts() == after);
  CHECK(cyc.checkpoints.back().ratios[cycle - 1] == 1.0);
}

TEST_CASE("census_bruteforce small cases") {
  AdjacencyState empty(5);
  CHECK(census_bruteforce(empty, atlas()) == GraphletCounts{});
  AdjacencyState full(3);
  for (NodeId u = 0; u < 3; ++u) {
    for (NodeId v = 0; v < 3; ++v) {
      if (u != v) full.apply_edge(u, v);
    }
  }
  GraphletCounts want{};
  want[12] = 1;
  CHECK(census_bruteforce(full, atlas()) == want);
}

TEST_CASE("streaming counts equal the all-triples census at every checkpoint") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto shape = oracle::corpus_shape(seed);
    const auto g = oracle::random_graph(seed, shape);
    const auto series = count_stream(g, atlas(), 10);
    for (const auto& cp : series.checkpoints) {
      const auto d = oracle::dense_prefix(g, cp.edges_processed);
      CHECK(cp.counts == oracle::census(d));
      CHECK(cp.counts == census_bruteforce(replay(g, cp.edges_processed), atlas()));
    }
  }
}

TEST_CASE("Erdos-Renyi stream with 50 nodes and 300 edges") {
  oracle::StreamShape shape;
  shape.nodes = 50;
  shape.edges = 300;
  shape.reciprocal = 0;
  shape.duplicate = 0;
  const auto g = oracle::random_graph(99, shape);
  const auto series = count_stream(g, atlas(), 30);
  for (const auto& cp : series.checkpoints) {
    CHECK(cp.counts == oracle::census(oracle::dense_prefix(g, cp.edges_processed)));
  }
}

TEST_CASE("ratios and checkpoint placement") {
  const auto g = oracle::random_graph(5, oracle::corpus_shape(5));
  const auto series = count_stream(g, atlas(), 7);
  CHECK(series.checkpoints.size() == std::min<std::size_t>(7, g.edge_count()));
  double previous = 0;
  for (const auto& cp : series.checkpoints) {
    CHECK(cp.evolution_ratio > previous);
    previous = cp.evolution_ratio;
    CHECK(cp.evolution_ratio == doctest::Approx(double(cp.edges_processed) / g.edge_count()));
    const auto total = std::accumulate(cp.counts.begin(), cp.counts.end(), std::int64_t{0});
    for (int k = 0; k < 13; ++k) {
      CHECK(cp.counts[k] >= 0);
      if (total == 0) {
        CHECK(cp.ratios[k] == 0.0);
      } else {
        CHECK(cp.ratios[k] == doctest::Approx(double(cp.counts[k]) / total));
      }
    }
  }
  CHECK(series.checkpoints.back().evolution_ratio == 1.0);
  CHECK(checkpoint_positions(1000, 4) == std::vector<std::size_t>{250, 500, 750, 1000});
  CHECK(checkpoint_positions(3, 10) == std::vector<std::size_t>{1, 2, 3});
  CHECK_THROWS_AS(count_stream(g, atlas(), 0), std::invalid_argument);
}

TEST_CASE("final counts do not depend on arrival order") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto g = oracle::random_graph(seed, oracle::corpus_shape(seed + 100));
    const auto h = shuffle_times(g, seed);
    CHECK(count_stream(g, atlas(), 1).final_counts() == count_stream(h, atlas(), 1).final_counts());
  }
}

TEST_CASE("neighbor work tracks the union scans") {
  // Each structural edge scans both endpoint neighborhoods, so the total
  // is bounded by the sum of squared final degrees.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = oracle::random_graph(seed, oracle::corpus_shape(seed + 7));
    const auto series = count_stream(g, atlas(), 1);
    const auto s = replay(g);
    std::uint64_t bound = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) bound += std::uint64_t{s.degree(v)} * s.degree(v);
    CHECK(series.neighbor_work <= bound);
  }
}
