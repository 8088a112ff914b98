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

#include "graphlet_lens/graph_core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_set>

#include "graphlet_lens/random.hpp"

namespace glens {
namespace {

void stable_sort_by_time(std::vector<TemporalEdge>& edges) {
  std::stable_sort(edges.begin(), edges.end(),
                   [](const TemporalEdge& a, const TemporalEdge& b) {
                     return a.time < b.time;
                   });
}

std::size_t count_distinct_pairs(const std::vector<TemporalEdge>& edges) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size());
  for (const auto& e : edges) {
    seen.insert((std::uint64_t{e.src} << 32) | e.dst);
  }
  return seen.size();
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; }

// Parses one integer field starting at `pos`; advances `pos` past it.
bool parse_field(std::string_view line, std::size_t& pos, std::int64_t& out) {
  while (pos < line.size() && is_space(line[pos])) ++pos;
  if (pos >= line.size()) return false;
  const char* first = line.data() + pos;
  const char* last = line.data() + line.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || (ptr != last && !is_space(*ptr))) return false;
  pos = static_cast<std::size_t>(ptr - line.data());
  return true;
}

}  // namespace

TemporalGraph::TemporalGraph(std::vector<TemporalEdge> edges,
                             std::vector<std::int64_t> original_ids)
    : edges_(std::move(edges)), original_ids_(std::move(original_ids)) {
  for (const auto& e : edges_) {
    if (e.src >= original_ids_.size() || e.dst >= original_ids_.size()) {
      throw std::invalid_argument("edge endpoint outside node range");
    }
    if (e.src == e.dst) throw std::invalid_argument("self-loop in edge stream");
  }
  stable_sort_by_time(edges_);
  stats_.data_lines = edges_.size();
  stats_.distinct_pairs = count_distinct_pairs(edges_);
}

TemporalGraph TemporalGraph::from_raw(std::span<const RawEdge> raw) {
  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  std::size_t loops = 0;
  for (const auto& r : raw) {
    if (r.src == r.dst) {
      ++loops;
      continue;
    }
    ids.push_back(r.src);
    ids.push_back(r.dst);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > std::numeric_limits<NodeId>::max()) {
    throw std::length_error("too many distinct nodes");
  }

  std::vector<TemporalEdge> edges;
  edges.reserve(raw.size() - loops);
  auto compact = [&ids](std::int64_t x) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), x) -
                               ids.begin());
  };
  for (const auto& r : raw) {
    if (r.src == r.dst) continue;
    edges.push_back({compact(r.src), compact(r.dst), r.time});
  }

  TemporalGraph g(std::move(edges), std::move(ids));
  g.stats_.data_lines = raw.size();
  g.stats_.self_loops = loops;
  return g;
}

namespace {

bool only_space(std::string_view view, std::size_t pos) {
  for (; pos < view.size(); ++pos) {
    if (!is_space(view[pos])) return false;
  }
  return true;
}

}  // namespace

TemporalGraph parse_edge_list(std::istream& in) {
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    std::size_t pos = 0;
    while (pos < view.size() && is_space(view[pos])) ++pos;
    if (pos == view.size() || view[pos] == '#') continue;

    RawEdge e;
    if (!parse_field(view, pos, e.src) || !parse_field(view, pos, e.dst) ||
        !parse_field(view, pos, e.time) || !only_space(view, pos)) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected \"src dst timestamp\"",
                       line_no);
    }
    if (e.src < 0 || e.dst < 0) {
      throw ParseError(
          "line " + std::to_string(line_no) + ": negative node id", line_no);
    }
    raw.push_back(e);
  }
  if (raw.empty()) throw ParseError("edge list contains no edges", 0);
  auto g = TemporalGraph::from_raw(raw);
  if (g.empty()) throw ParseError("edge list contains only self-loops", 0);
  return g;
}

TemporalGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open edge list: " + path.string());
  }
  return parse_edge_list(in);
}

TemporalGraph shuffle_times(const TemporalGraph& g, std::uint64_t seed) {
  std::vector<Timestamp> times;
  times.reserve(g.edge_count());
  for (const auto& e : g.edges()) times.push_back(e.time);
  Rng rng(seed);
  rng.shuffle(std::span<Timestamp>(times));

  std::vector<TemporalEdge> edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].time = times[i];
  return TemporalGraph(std::move(edges), g.original_ids());
}

AdjacencyState::AdjacencyState(std::size_t node_count)
    : adj_(node_count), degree_(node_count, 0), in_degree_(node_count, 0) {}

std::uint8_t AdjacencyState::pair_state(NodeId u, NodeId v) const {
  const auto& nbrs = adj_[u];
  auto it = nbrs.find(v);
  return it == nbrs.end() ? kNoEdge : it->second;
}

EdgeUpdate AdjacencyState::apply_edge(NodeId src, NodeId dst) {
  auto& at_src = adj_[src];
  auto [it, inserted] = at_src.try_emplace(dst, kNoEdge);
  if (it->second & kForward) return EdgeUpdate::kDuplicate;

  const bool reciprocal = !inserted;  // dst -> src already present
  it->second |= kForward;
  adj_[dst][src] |= kBackward;

  if (degree_[src] == 0) ++active_nodes_;
  if (degree_[dst] == 0) ++active_nodes_;
  ++degree_[src];
  ++degree_[dst];
  ++in_degree_[dst];
  ++directed_edges_;
  if (!reciprocal) ++adjacent_pairs_;
  return reciprocal ? EdgeUpdate::kNewReciprocal : EdgeUpdate::kNewDirected;
}

AdjacencyState replay(const TemporalGraph& g, std::size_t prefix) {
  AdjacencyState state(g.node_count());
  const auto& edges = g.edges();
  prefix = std::min(prefix, edges.size());
  for (std::size_t i = 0; i < prefix; ++i) state.apply_edge(edges[i]);
  return state;
}

}  // namespace glens
