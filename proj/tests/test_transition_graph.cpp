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
#include "graphlet_lens/transition_graph.hpp"
#include "oracles.hpp"

using namespace glens;

namespace {

const TriadAtlas& atlas() {
  static const TriadAtlas a = TriadAtlas::build();
  return a;
}

TemporalGraph stream(std::initializer_list<std::pair<std::int64_t, std::int64_t>> edges) {
  std::vector<RawEdge> raw;
  Timestamp t = 0;
  for (const auto& [u, v] : edges) raw.push_back({u, v, t++});
  return TemporalGraph::from_raw(raw);
}

int transition_id(std::uint8_t source_mask, int target) {
  for (const auto& t : atlas().transitions()) {
    if (atlas().classes()[t.source_class].representative.mask == source_mask &&
        t.target.value == target) {
      return t.id.value;
    }
  }
  return 0;
}

// Replays the stream on a dense matrix and, for each new directed edge,
// classifies every third node before and after the insertion.
std::array<std::uint64_t, kNumTransitions> gtg_oracle(const TemporalGraph& g) {
  std::array<std::uint64_t, kNumTransitions> w{};
  oracle::Dense d(g.node_count());
  for (const auto& e : g.edges()) {
    if (d.adj[e.src][e.dst]) continue;
    for (NodeId x = 0; x < d.n; ++x) {
      if (x == e.src || x == e.dst) continue;
      const std::uint8_t before = d.mask(e.src, e.dst, x);
      const int target = oracle::graphlet_of(before | (1 << oracle::bit_of(0, 1)));
      if (target == 0) continue;
      const int id = transition_id(oracle::canonical(before), target);
      REQUIRE(id > 0);
      ++w[id - 1];
    }
    d.add(e.src, e.dst);
  }
  return w;
}

std::uint64_t total(const GraphletTransitionGraph& gtg) {
  return std::accumulate(gtg.weights.begin(), gtg.weights.end(), std::uint64_t{0});
}

std::uint8_t mask_of(std::initializer_list<std::pair<int, int>> edges) {
  std::uint8_t m = 0;
  for (const auto& [a, b] : edges) m |= static_cast<std::uint8_t>(1 << oracle::bit_of(a, b));
  return m;
}

}  // namespace

TEST_CASE("three-cycle stream") {
  const auto gtg = compute_gtg(stream({{0, 1}, {1, 2}, {2, 0}}), atlas());
  CHECK(total(gtg) == 2);
  const int path = oracle::graphlet_of(mask_of({{0, 1}, {1, 2}}));
  const int cycle = oracle::graphlet_of(mask_of({{0, 1}, {1, 2}, {2, 0}}));
  const int birth = transition_id(mask_of({{0, 1}}), path);
  const int close = transition_id(oracle::canonical(mask_of({{0, 1}, {1, 2}})), cycle);
  REQUIRE(birth > 0);
  REQUIRE(close > 0);
  CHECK(gtg.weights[birth - 1] == 1);
  CHECK(gtg.weights[close - 1] == 1);
  CHECK_FALSE(atlas().transitions()[birth - 1].source_graphlet.has_value());
}

TEST_CASE("two-edge path has a single birth") {
  const auto gtg = compute_gtg(stream({{0, 1}, {1, 2}}), atlas());
  CHECK(total(gtg) == 1);
  const auto b = balance(gtg, atlas());
  CHECK(std::accumulate(b.inbound.begin(), b.inbound.end(), std::int64_t{0}) == 0);
}

TEST_CASE("duplicates and a lone edge give no transitions") {
  CHECK(total(compute_gtg(stream({{0, 1}, {0, 1}, {0, 1}}), atlas())) == 0);
  CHECK(total(compute_gtg(stream({{0, 1}, {2, 3}, {1, 0}}), atlas())) == 0);
}

TEST_CASE("transition weights equal the dense before/after oracle") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = oracle::random_graph(seed, oracle::corpus_shape(seed * 3 + 1));
    CHECK(compute_gtg(g, atlas()).weights == gtg_oracle(g));
  }
}

TEST_CASE("births plus inflow minus outflow equal the final census") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = oracle::random_graph(seed, oracle::corpus_shape(seed + 11));
    const auto b = balance(compute_gtg(g, atlas()), atlas());
    CHECK(b.net() == oracle::census(oracle::dense_prefix(g, g.edge_count())));
    for (int k = 0; k < kNumGraphlets; ++k) {
      CHECK(b.births[k] >= 0);
      CHECK(b.outbound[k] <= b.births[k] + b.inbound[k]);
    }
  }
}

TEST_CASE("significance profile hand example") {
  std::vector<double> w(kNumTransitions, 0.0), base(kNumTransitions, 0.0);
  w[0] = 8;
  const auto sp = significance_profile(w, base, 4.0);
  CHECK(sp.significance[0] == doctest::Approx(2.0 / 3.0));
  CHECK(sp.profile[0] == doctest::Approx(1.0));
  for (int i = 1; i < kNumTransitions; ++i) CHECK(sp.profile[i] == 0.0);
  CHECK(sp.norm() == doctest::Approx(1.0));

  const auto flat = significance_profile(w, w, 4.0);
  CHECK(flat.norm() == 0.0);
  CHECK(significance_profile(base, base, 0.0).norm() == 0.0);
  CHECK_THROWS_AS(significance_profile(w, std::vector<double>(3), 4.0), std::invalid_argument);
}

TEST_CASE("significance is antisymmetric and bounded") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 100);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a(kNumTransitions), b(kNumTransitions);
    for (int i = 0; i < kNumTransitions; ++i) {
      a[i] = std::floor(u(rng));
      b[i] = u(rng);
    }
    const auto ab = significance_profile(a, b, 4.0);
    const auto ba = significance_profile(b, a, 4.0);
    for (int i = 0; i < kNumTransitions; ++i) {
      CHECK(ab.significance[i] == doctest::Approx(-ba.significance[i]));
      CHECK(std::abs(ab.significance[i]) < 1.0);
    }
  }
}

TEST_CASE("characteristic profiles are unit or zero and reproducible") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto g = oracle::random_graph(seed, oracle::corpus_shape(seed + 40));
    ProfileOptions opt;
    opt.n_random = 12;
    opt.seed = seed;
    const auto one = compute_cp(g, atlas(), opt);
    opt.threads = 4;
    const auto four = compute_cp(g, atlas(), opt);
    CHECK(one.profile == four.profile);
    CHECK(one.random_mean == four.random_mean);
    const double n = one.norm();
    CHECK((n == 0.0 || std::abs(n - 1.0) < 1e-9));
    CHECK(one.observed.size() == static_cast<std::size_t>(kNumTransitions));
  }
  ProfileOptions bad;
  bad.n_random = 0;
  CHECK_THROWS_AS(compute_cp(stream({{0, 1}}), atlas(), bad), std::invalid_argument);
}

TEST_CASE("profile of a stream without transitions is zero") {
  ProfileOptions opt;
  opt.n_random = 5;
  const auto cp = compute_cp(stream({{0, 1}, {1, 0}}), atlas(), opt);
  CHECK(cp.norm() == 0.0);
}

TEST_CASE("occurrence profiles") {
  const auto g = oracle::random_graph(21, oracle::corpus_shape(21));
  ProfileOptions opt;
  opt.n_random = 6;
  SUBCASE("time shuffling keeps the final snapshot") {
    const auto cp = cp_from_occurrences(g, atlas(), opt, NullModel::kTimeShuffle);
    CHECK(cp.norm() == 0.0);
    CHECK(cp.observed == cp.random_mean);
  }
  SUBCASE("degree-preserving baseline") {
    const auto cp = cp_from_occurrences(g, atlas(), opt);
    CHECK(cp.observed.size() == static_cast<std::size_t>(kNumGraphlets));
    const double n = cp.norm();
    CHECK((n == 0.0 || std::abs(n - 1.0) < 1e-9));
    opt.threads = 3;
    CHECK(cp_from_occurrences(g, atlas(), opt).profile == cp.profile);
  }
}

TEST_CASE("rewiring keeps single and mutual degrees") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    oracle::StreamShape shape;
    shape.nodes = 30;
    shape.edges = 250;
    shape.reciprocal = 0.3;
    const auto g = oracle::random_graph(seed, shape);
    const auto s = replay(g);
    const auto r = rewire_degree_preserving(s, seed);
    CHECK(r.directed_edge_count() == s.directed_edge_count());
    bool changed = false;
    for (NodeId v = 0; v < s.capacity(); ++v) {
      int single_out[2] = {0, 0}, single_in[2] = {0, 0}, mutual[2] = {0, 0};
      const AdjacencyState* states[2] = {&s, &r};
      for (int k = 0; k < 2; ++k) {
        for (const auto& [w, bits] : states[k]->neighbors(v)) {
          REQUIRE(w != v);
          single_out[k] += bits == kForward;
          single_in[k] += bits == kBackward;
          mutual[k] += bits == kBoth;
          if (k == 1 && s.pair_state(v, w) != bits) changed = true;
        }
      }
      CHECK(single_out[0] == single_out[1]);
      CHECK(single_in[0] == single_in[1]);
      CHECK(mutual[0] == mutual[1]);
    }
    CHECK(changed);
  }
}

TEST_CASE("profile similarity") {
  const std::vector<double> a = {0.1, 0.5, -0.2, 0.3};
  std::vector<double> neg(a.size());
  std::transform(a.begin(), a.end(), neg.begin(), [](double x) { return -2 * x; });
  CHECK(cp_similarity(a, a) == doctest::Approx(1.0));
  CHECK(cp_similarity(a, neg) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(cp_similarity(a, std::vector<double>(4, 0.0)), UndefinedResult);
}

TEST_CASE("threshold classification") {
  SUBCASE("block structure separates perfectly") {
    const std::vector<std::string> labels = {"x", "x", "y", "y", "y"};
    SimilarityMatrix sim(5, std::vector<double>(5));
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) sim[i][j] = i == j ? 1.0 : labels[i] == labels[j] ? 0.8 : 0.1;
    }
    const auto c = classify_by_threshold(sim, labels);
    CHECK(c.accuracy == 1.0);
    CHECK(c.threshold > 0.1);
    CHECK(c.threshold <= 0.8);
  }
  SUBCASE("two graphs from different domains") {
    const std::vector<std::string> labels = {"x", "y"};
    const SimilarityMatrix sim = {{1.0, 0.3}, {0.3, 1.0}};
    const auto c = classify_by_threshold(sim, labels);
    CHECK(c.accuracy == 1.0);
    CHECK(c.threshold > 0.3);
  }
  SUBCASE("accuracy equals a brute-force threshold search") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 6;
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) labels.push_back(rng() % 2 ? "a" : "b");
      SimilarityMatrix sim(n, std::vector<double>(n, 1.0));
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) sim[i][j] = sim[j][i] = u(rng);
      }
      std::vector<double> thresholds = {2.0};
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) thresholds.push_back(sim[i][j]);
      }
      double best = 0;
      for (double t : thresholds) {
        int correct = 0;
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) correct += (sim[i][j] >= t) == (labels[i] == labels[j]);
        }
        best = std::max(best, correct / 15.0);
      }
      CHECK(classify_by_threshold(sim, labels).accuracy == doctest::Approx(best));
    }
  }
  CHECK_THROWS_AS(classify_by_threshold({{1.0}}, std::vector<std::string>{"a"}),
                  std::invalid_argument);
}
