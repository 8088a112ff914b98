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

#ifndef GRAPHLET_LENS_TRIAD_ATLAS_HPP_
#define GRAPHLET_LENS_TRIAD_ATLAS_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphlet_lens/common.hpp"

namespace glens {

// Triad codes describe the induced subgraph on an ordered node triple
// (a, b, c) with one bit per directed slot:
//
//   bit 0  a->b    bit 1  b->a
//   bit 2  a->c    bit 3  c->a
//   bit 4  b->c    bit 5  c->b
//
// Bits 2k and 2k+1 describe one unordered pair, so a pair state from
// AdjacencyState (kForward/kBackward relative to the lower position) drops
// straight into place.
struct TriadCode {
  std::uint8_t mask = 0;

  static constexpr TriadCode from_pairs(std::uint8_t ab, std::uint8_t ac,
                                        std::uint8_t bc) {
    return TriadCode{static_cast<std::uint8_t>(ab | (ac << 2) | (bc << 4))};
  }
  constexpr bool has(int slot) const { return (mask >> slot) & 1; }
  constexpr int edge_count() const { return __builtin_popcount(mask); }
  friend constexpr bool operator==(TriadCode, TriadCode) = default;
};

enum class Position : int { kA = 0, kB = 1, kC = 2 };

inline constexpr int kNumSlots = 6;
inline constexpr std::array<int, kNumSlots> kSlotSource = {0, 1, 0, 2, 1, 2};
inline constexpr std::array<int, kNumSlots> kSlotTarget = {1, 0, 2, 0, 2, 1};

constexpr int slot_of(int from, int to) {
  for (int s = 0; s < kNumSlots; ++s) {
    if (kSlotSource[s] == from && kSlotTarget[s] == to) return s;
  }
  return -1;
}

/// Relabels a code: the node at position i moves to position perm[i].
constexpr TriadCode permute(TriadCode code, const std::array<int, 3>& perm) {
  std::uint8_t out = 0;
  for (int s = 0; s < kNumSlots; ++s) {
    if (code.has(s)) {
      out |= static_cast<std::uint8_t>(
          1u << slot_of(perm[kSlotSource[s]], perm[kSlotTarget[s]]));
    }
  }
  return TriadCode{out};
}

inline constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

/// Weakly connected iff at least two of the three pairs are adjacent.
constexpr bool is_connected(TriadCode code) {
  const int pairs = ((code.mask & 0x03) != 0) + ((code.mask & 0x0c) != 0) +
                    ((code.mask & 0x30) != 0);
  return pairs >= 2;
}

/// Optional published numbering. Each vector, when non-empty, is a
/// permutation: entry i is the published id of canonical id i+1.
struct AtlasNumbering {
  std::vector<int> graphlets;    // 13 entries
  std::vector<int> node_orbits;  // 30 entries
  std::vector<int> edge_orbits;  // 30 entries
};

/// Reads "graphlets = ...", "node_orbits = ...", "edge_orbits = ..." lines
/// (whitespace- or comma-separated integers, '#' comments).
AtlasNumbering parse_numbering(std::istream& in);
AtlasNumbering load_numbering(const std::filesystem::path& path);

/// One of the 16 isomorphism classes of directed triads.
struct TriadClass {
  TriadCode representative;  // smallest mask in the class
  int edge_count = 0;
  bool connected = false;
  std::optional<GraphletId> graphlet;
  int automorphisms = 0;
};

struct NodeOrbit {
  NodeOrbitId id;
  GraphletId graphlet;
  int position = 0;  // smallest member position in the representative
  int size = 0;
};

struct EdgeOrbit {
  EdgeOrbitId id;
  GraphletId graphlet;
  int slot = 0;  // smallest member slot in the representative
  int size = 0;
};

/// A transition is identified by its source triad class and destination
/// graphlet. The source is either a graphlet or one of the two one-dyad
/// triads (single edge, mutual edge) plus an isolated third node.
struct Transition {
  TransitionId id;
  int source_class = 0;  // index into TriadAtlas::classes()
  std::optional<GraphletId> source_graphlet;
  GraphletId target;
};

/// Lookup tables over all 64 triad codes, derived by brute force over
/// the six node permutations.
class TriadAtlas {
 public:
  /// Throws std::logic_error if the derived class counts are not
  /// 13 / 30 / 30 / 28, and std::invalid_argument for a malformed numbering.
  static TriadAtlas build(const AtlasNumbering& numbering = {});

  std::optional<GraphletId> classify(TriadCode code) const;
  std::optional<NodeOrbitId> node_orbit(TriadCode code, Position pos) const;
  /// Throws std::invalid_argument if `slot` is not set in `code`.
  std::optional<EdgeOrbitId> edge_orbit(TriadCode code, int slot) const;
  /// Throws std::invalid_argument if `added_slot` is already set. Undefined
  /// (nullopt) when the code with the slot added is not connected.
  std::optional<TransitionId> transition(TriadCode before, int added_slot) const;

  // Raw table access for hot loops; 0 means undefined.
  int graphlet_raw(std::uint8_t mask) const { return graphlet_of_[mask]; }
  int node_orbit_raw(std::uint8_t mask, int pos) const {
    return node_orbit_of_[mask][pos];
  }
  int edge_orbit_raw(std::uint8_t mask, int slot) const {
    return edge_orbit_of_[mask][slot];
  }
  int transition_raw(std::uint8_t mask, int slot) const {
    return transition_of_[mask][slot];
  }
  int class_of(std::uint8_t mask) const { return class_of_[mask]; }

  /// Representative mask of each graphlet, indexed by GraphletId::index().
  const std::array<TriadCode, kNumGraphlets>& canonical_order() const {
    return representatives_;
  }
  int edges_in(GraphletId g) const {
    return representatives_[g.index()].edge_count();
  }
  /// Nodes of an instance that are adjacent to both others (1 or 3).
  int centers_in(GraphletId g) const;

  const std::vector<TriadClass>& classes() const { return classes_; }
  const std::vector<NodeOrbit>& node_orbits() const { return node_orbits_; }
  const std::vector<EdgeOrbit>& edge_orbits() const { return edge_orbits_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

 private:
  TriadAtlas() = default;

  std::array<std::uint8_t, 64> graphlet_of_{};
  std::array<std::uint8_t, 64> class_of_{};
  std::array<std::array<std::uint8_t, 3>, 64> node_orbit_of_{};
  std::array<std::array<std::uint8_t, kNumSlots>, 64> edge_orbit_of_{};
  std::array<std::array<std::uint8_t, kNumSlots>, 64> transition_of_{};
  std::array<TriadCode, kNumGraphlets> representatives_{};
  std::vector<TriadClass> classes_;
  std::vector<NodeOrbit> node_orbits_;
  std::vector<EdgeOrbit> edge_orbits_;
  std::vector<Transition> transitions_;
};

/// Human-readable edge list of a code, e.g. "a->b,b->c".
std::string describe(TriadCode code);

}  // namespace glens

#endif  // GRAPHLET_LENS_TRIAD_ATLAS_HPP_
