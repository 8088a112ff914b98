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

#include "graphlet_lens/triad_atlas.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace glens {
namespace {

std::uint8_t canonical_mask(TriadCode code) {
  std::uint8_t best = 0xff;
  for (const auto& p : kPermutations) {
    best = std::min(best, permute(code, p).mask);
  }
  return best;
}

// A permutation carrying `code` onto `rep`; both must be in one class.
const std::array<int, 3>& mapping_to(TriadCode code, TriadCode rep) {
  for (const auto& p : kPermutations) {
    if (permute(code, p) == rep) return p;
  }
  throw std::logic_error("triad code not isomorphic to its representative");
}

void check_permutation(const std::vector<int>& perm, std::size_t n,
                       const char* what) {
  if (perm.empty()) return;
  if (perm.size() != n) {
    throw std::invalid_argument(std::string(what) + " numbering needs " +
                                std::to_string(n) + " entries");
  }
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (sorted[i] != static_cast<int>(i + 1)) {
      throw std::invalid_argument(std::string(what) +
                                  " numbering is not a permutation of 1.." +
                                  std::to_string(n));
    }
  }
}

int published(const std::vector<int>& perm, int canonical) {
  return perm.empty() ? canonical : perm[canonical - 1];
}

}  // namespace

AtlasNumbering parse_numbering(std::istream& in) {
  AtlasNumbering out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos) {
      throw ParseError("numbering line " + std::to_string(line_no) +
                           ": expected key = values",
                       line_no);
    }
    std::string key = line.substr(0, eq);
    key.erase(std::remove_if(key.begin(), key.end(),
                             [](char c) { return std::isspace(c) != 0; }),
              key.end());
    std::string values = line.substr(eq + 1);
    std::replace(values.begin(), values.end(), ',', ' ');
    std::istringstream vs(values);
    std::vector<int> ids;
    for (int x; vs >> x;) ids.push_back(x);
    if (!vs.eof()) {
      throw ParseError("numbering line " + std::to_string(line_no) +
                           ": non-integer value",
                       line_no);
    }
    if (key == "graphlets") {
      out.graphlets = std::move(ids);
    } else if (key == "node_orbits") {
      out.node_orbits = std::move(ids);
    } else if (key == "edge_orbits") {
      out.edge_orbits = std::move(ids);
    } else {
      throw ParseError("numbering line " + std::to_string(line_no) +
                           ": unknown key '" + key + "'",
                       line_no);
    }
  }
  return out;
}

AtlasNumbering load_numbering(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open numbering file: " + path.string());
  return parse_numbering(in);
}

TriadAtlas TriadAtlas::build(const AtlasNumbering& numbering) {
  check_permutation(numbering.graphlets, kNumGraphlets, "graphlet");
  check_permutation(numbering.node_orbits, kNumNodeOrbits, "node orbit");
  check_permutation(numbering.edge_orbits, kNumEdgeOrbits, "edge orbit");

  TriadAtlas atlas;

  // Isomorphism classes, ordered by (edge count, smallest member mask).
  std::set<std::uint8_t> reps;
  for (int m = 0; m < 64; ++m) {
    reps.insert(canonical_mask(TriadCode{static_cast<std::uint8_t>(m)}));
  }
  std::vector<std::uint8_t> ordered(reps.begin(), reps.end());
  std::sort(ordered.begin(), ordered.end(), [](std::uint8_t a, std::uint8_t b) {
    return std::pair(__builtin_popcount(a), a) < std::pair(__builtin_popcount(b), b);
  });

  int canonical_graphlet = 0;
  for (std::uint8_t rep : ordered) {
    TriadClass c;
    c.representative = TriadCode{rep};
    c.edge_count = __builtin_popcount(rep);
    c.connected = is_connected(c.representative);
    for (const auto& p : kPermutations) {
      if (permute(c.representative, p) == c.representative) ++c.automorphisms;
    }
    if (c.connected) {
      c.graphlet = GraphletId(published(numbering.graphlets, ++canonical_graphlet));
    }
    atlas.classes_.push_back(c);
  }
  if (canonical_graphlet != kNumGraphlets) {
    throw std::logic_error("expected 13 connected triad classes, found " +
                           std::to_string(canonical_graphlet));
  }

  std::map<std::uint8_t, int> class_index;
  for (std::size_t i = 0; i < atlas.classes_.size(); ++i) {
    const auto& c = atlas.classes_[i];
    class_index[c.representative.mask] = static_cast<int>(i);
    if (c.graphlet) atlas.representatives_[c.graphlet->index()] = c.representative;
  }

  // Orbits are numbered by (graphlet id, smallest member in the
  // representative) before any published remap.
  std::array<std::array<int, 3>, kNumGraphlets> rep_node_orbit{};
  std::array<std::array<int, kNumSlots>, kNumGraphlets> rep_edge_orbit{};
  int node_seq = 0;
  int edge_seq = 0;
  for (int g = 0; g < kNumGraphlets; ++g) {
    const TriadCode rep = atlas.representatives_[g];
    std::vector<const std::array<int, 3>*> autos;
    for (const auto& p : kPermutations) {
      if (permute(rep, p) == rep) autos.push_back(&p);
    }

    std::map<int, int> node_key_to_id;
    for (int pos = 0; pos < 3; ++pos) {
      int key = pos;
      for (const auto* p : autos) key = std::min(key, (*p)[pos]);
      auto [it, fresh] = node_key_to_id.try_emplace(key, 0);
      if (fresh) {
        it->second = published(numbering.node_orbits, ++node_seq);
        atlas.node_orbits_.push_back(
            {NodeOrbitId(it->second), GraphletId(g + 1), key, 0});
      }
      rep_node_orbit[g][pos] = it->second;
    }

    std::map<int, int> edge_key_to_id;
    for (int s = 0; s < kNumSlots; ++s) {
      if (!rep.has(s)) continue;
      int key = s;
      for (const auto* p : autos) {
        key = std::min(key, slot_of((*p)[kSlotSource[s]], (*p)[kSlotTarget[s]]));
      }
      auto [it, fresh] = edge_key_to_id.try_emplace(key, 0);
      if (fresh) {
        it->second = published(numbering.edge_orbits, ++edge_seq);
        atlas.edge_orbits_.push_back(
            {EdgeOrbitId(it->second), GraphletId(g + 1), key, 0});
      }
      rep_edge_orbit[g][s] = it->second;
    }
  }
  if (node_seq != kNumNodeOrbits || edge_seq != kNumEdgeOrbits) {
    throw std::logic_error("expected 30 node and 30 edge orbits, found " +
                           std::to_string(node_seq) + " and " +
                           std::to_string(edge_seq));
  }
  for (int pos = 0; pos < 3; ++pos) {
    for (int g = 0; g < kNumGraphlets; ++g) {
      for (auto& o : atlas.node_orbits_) {
        if (o.id.value == rep_node_orbit[g][pos]) ++o.size;
      }
    }
  }
  for (int s = 0; s < kNumSlots; ++s) {
    for (int g = 0; g < kNumGraphlets; ++g) {
      for (auto& o : atlas.edge_orbits_) {
        if (o.id.value == rep_edge_orbit[g][s]) ++o.size;
      }
    }
  }

  // Per-mask tables.
  for (int m = 0; m < 64; ++m) {
    const TriadCode code{static_cast<std::uint8_t>(m)};
    const int ci = class_index.at(canonical_mask(code));
    atlas.class_of_[m] = static_cast<std::uint8_t>(ci);
    const auto& cls = atlas.classes_[ci];
    if (!cls.graphlet) continue;
    const int g = cls.graphlet->index();
    atlas.graphlet_of_[m] = static_cast<std::uint8_t>(g + 1);
    const auto& sigma = mapping_to(code, cls.representative);
    for (int pos = 0; pos < 3; ++pos) {
      atlas.node_orbit_of_[m][pos] =
          static_cast<std::uint8_t>(rep_node_orbit[g][sigma[pos]]);
    }
    for (int s = 0; s < kNumSlots; ++s) {
      if (!code.has(s)) continue;
      const int rs = slot_of(sigma[kSlotSource[s]], sigma[kSlotTarget[s]]);
      atlas.edge_orbit_of_[m][s] = static_cast<std::uint8_t>(rep_edge_orbit[g][rs]);
    }
  }

  // Transitions: every (source class, destination graphlet) pair reachable
  // by adding one directed edge. Sources that are one-dyad triads sort
  // first, then graphlet sources by id.
  using Key = std::tuple<int, int, int>;  // (source rank, source id, target)
  std::map<Key, std::pair<int, int>> found;  // -> (source class, target graphlet)
  for (int m = 0; m < 64; ++m) {
    const TriadCode code{static_cast<std::uint8_t>(m)};
    for (int s = 0; s < kNumSlots; ++s) {
      if (code.has(s)) continue;
      const TriadCode after{static_cast<std::uint8_t>(m | (1 << s))};
      if (!is_connected(after)) continue;
      const int src_class = atlas.class_of_[m];
      const auto& src = atlas.classes_[src_class];
      const int target = atlas.graphlet_of_[after.mask];
      const Key key = src.graphlet ? Key{1, src.graphlet->value, target}
                                   : Key{0, src.representative.mask, target};
      found.try_emplace(key, src_class, target);
    }
  }
  if (found.size() != static_cast<std::size_t>(kNumTransitions)) {
    throw std::logic_error("expected 28 transition classes, found " +
                           std::to_string(found.size()));
  }
  std::map<std::pair<int, int>, int> transition_id;
  int tid = 0;
  for (const auto& [key, val] : found) {
    ++tid;
    transition_id[val] = tid;
    atlas.transitions_.push_back({TransitionId(tid), val.first,
                                  atlas.classes_[val.first].graphlet,
                                  GraphletId(val.second)});
  }
  for (int m = 0; m < 64; ++m) {
    for (int s = 0; s < kNumSlots; ++s) {
      if ((m >> s) & 1) continue;
      const int after = m | (1 << s);
      if (!atlas.graphlet_of_[after]) continue;
      atlas.transition_of_[m][s] = static_cast<std::uint8_t>(
          transition_id.at({atlas.class_of_[m], atlas.graphlet_of_[after]}));
    }
  }

  std::sort(atlas.node_orbits_.begin(), atlas.node_orbits_.end(),
            [](const NodeOrbit& a, const NodeOrbit& b) { return a.id < b.id; });
  std::sort(atlas.edge_orbits_.begin(), atlas.edge_orbits_.end(),
            [](const EdgeOrbit& a, const EdgeOrbit& b) { return a.id < b.id; });
  return atlas;
}

std::optional<GraphletId> TriadAtlas::classify(TriadCode code) const {
  if (code.mask >= 64) throw std::invalid_argument("triad mask out of range");
  const int g = graphlet_of_[code.mask];
  if (g == 0) return std::nullopt;
  return GraphletId(g);
}

std::optional<NodeOrbitId> TriadAtlas::node_orbit(TriadCode code,
                                                  Position pos) const {
  if (code.mask >= 64) throw std::invalid_argument("triad mask out of range");
  const int o = node_orbit_of_[code.mask][static_cast<int>(pos)];
  if (o == 0) return std::nullopt;
  return NodeOrbitId(o);
}

std::optional<EdgeOrbitId> TriadAtlas::edge_orbit(TriadCode code, int slot) const {
  if (code.mask >= 64 || slot < 0 || slot >= kNumSlots) {
    throw std::invalid_argument("triad mask or slot out of range");
  }
  if (!code.has(slot)) {
    throw std::invalid_argument("edge slot " + std::to_string(slot) +
                                " is not present in the triad");
  }
  const int o = edge_orbit_of_[code.mask][slot];
  if (o == 0) return std::nullopt;
  return EdgeOrbitId(o);
}

std::optional<TransitionId> TriadAtlas::transition(TriadCode before,
                                                   int added_slot) const {
  if (before.mask >= 64 || added_slot < 0 || added_slot >= kNumSlots) {
    throw std::invalid_argument("triad mask or slot out of range");
  }
  if (before.has(added_slot)) {
    throw std::invalid_argument("edge slot " + std::to_string(added_slot) +
                                " is already present");
  }
  const int t = transition_of_[before.mask][added_slot];
  if (t == 0) return std::nullopt;
  return TransitionId(t);
}

int TriadAtlas::centers_in(GraphletId g) const {
  return is_connected(representatives_[g.index()]) &&
                 (representatives_[g.index()].mask & 0x03) &&
                 (representatives_[g.index()].mask & 0x0c) &&
                 (representatives_[g.index()].mask & 0x30)
             ? 3
             : 1;
}

std::string describe(TriadCode code) {
  static constexpr char kNames[] = {'a', 'b', 'c'};
  std::string out;
  for (int s = 0; s < kNumSlots; ++s) {
    if (!code.has(s)) continue;
    if (!out.empty()) out += ',';
    out += kNames[kSlotSource[s]];
    out += "->";
    out += kNames[kSlotTarget[s]];
  }
  return out.empty() ? "none" : out;
}

}  // namespace glens
