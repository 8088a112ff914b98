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

#ifndef GRAPHLET_LENS_STATS_HPP_
#define GRAPHLET_LENS_STATS_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "graphlet_lens/common.hpp"

namespace glens {

/// Throws UndefinedResult when either input has zero variance and
/// std::invalid_argument on a length mismatch or fewer than two points.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Pearson correlation of the rank vectors; ties get average ranks.
double spearman(std::span<const double> xs, std::span<const double> ys);

/// 1-based ranks with ties averaged.
std::vector<double> average_ranks(std::span<const double> xs);

double mean(std::span<const double> xs);
/// Population standard deviation (divides by n).
double population_stddev(std::span<const double> xs);

/// Least-squares polynomial in the rescaled variable t = (x - x0) / scale,
/// where [x0, x0 + scale] is the x range of the fitted data.
struct Polynomial {
  std::vector<double> coeffs;  // lowest order first, in t
  double x0 = 0;
  double scale = 1;

  double operator()(double x) const;
};

/// Solves the normal equations on the [0,1]-scaled Vandermonde basis.
/// Throws UndefinedResult for a singular design (e.g. fewer distinct x
/// values than coefficients).
Polynomial polyfit(std::span<const double> xs, std::span<const double> ys,
                   int degree);

/// Mean |linear(x) - cubic(x)| of least-squares fits to (xs, ys) over
/// `n_samples` equally spaced x in [min xs, max xs]. Needs >= 4 points.
double nonlinearity(std::span<const double> xs, std::span<const double> ys,
                    std::size_t n_samples = 1000);

}  // namespace glens

#endif  // GRAPHLET_LENS_STATS_HPP_
