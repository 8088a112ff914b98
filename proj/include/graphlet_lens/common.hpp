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

#ifndef GRAPHLET_LENS_COMMON_HPP_
#define GRAPHLET_LENS_COMMON_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace glens {

inline constexpr const char* kVersion = "0.1.0";

using NodeId = std::uint32_t;
using Timestamp = std::int64_t;

inline constexpr int kNumGraphlets = 13;
inline constexpr int kNumNodeOrbits = 30;
inline constexpr int kNumEdgeOrbits = 30;
inline constexpr int kNumTransitions = 28;

/// A 1-based identifier that cannot be mixed up with the other id kinds.
template <class Tag>
struct StrongId {
  int value = 0;

  constexpr StrongId() = default;
  constexpr explicit StrongId(int v) : value(v) {}
  constexpr int index() const { return value - 1; }
  friend constexpr auto operator<=>(StrongId, StrongId) = default;
};

using GraphletId = StrongId<struct GraphletTag>;
using NodeOrbitId = StrongId<struct NodeOrbitTag>;
using EdgeOrbitId = StrongId<struct EdgeOrbitTag>;
using TransitionId = StrongId<struct TransitionTag>;

/// Malformed input file; carries the offending 1-based line number (0 when
/// the error is not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A statistic that has no defined value for the given input (e.g. the
/// correlation of a constant vector).
class UndefinedResult : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace glens

#endif  // GRAPHLET_LENS_COMMON_HPP_
