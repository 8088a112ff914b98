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

#include "graphlet_lens/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace glens {
namespace {

void check_paired(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("length mismatch");
  if (xs.size() < 2) throw std::invalid_argument("need at least two points");
}

// Gaussian elimination with partial pivoting on a dense n x n system.
std::vector<double> solve(std::vector<std::vector<double>> a,
                          std::vector<double> b) {
  const std::size_t n = b.size();
  double max_diag = 0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(a[i][i]));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) <= 1e-13 * max_diag || max_diag == 0) {
      throw UndefinedResult("singular least-squares design");
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty input");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double population_stddev(std::span<const double> xs) {
  const double mu = mean(xs);
  double ss = 0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(xs.size()));
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  check_paired(xs, ys);
  const double mx = mean(xs);
  const double my = mean(ys);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) {
    throw UndefinedResult("correlation undefined for a constant vector");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  check_paired(xs, ys);
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  return pearson(rx, ry);
}

double Polynomial::operator()(double x) const {
  const double t = (x - x0) / scale;
  double acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
  return acc;
}

Polynomial polyfit(std::span<const double> xs, std::span<const double> ys,
                   int degree) {
  check_paired(xs, ys);
  if (degree < 0) throw std::invalid_argument("negative degree");
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  Polynomial p;
  p.x0 = *lo;
  p.scale = *hi > *lo ? *hi - *lo : 1.0;

  const std::size_t k = static_cast<std::size_t>(degree) + 1;
  std::vector<std::vector<double>> ata(k, std::vector<double>(k, 0.0));
  std::vector<double> aty(k, 0.0);
  std::vector<double> powers(2 * k - 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double t = (xs[i] - p.x0) / p.scale;
    powers[0] = 1;
    for (std::size_t e = 1; e < powers.size(); ++e) powers[e] = powers[e - 1] * t;
    for (std::size_t r = 0; r < k; ++r) {
      aty[r] += powers[r] * ys[i];
      for (std::size_t c = 0; c < k; ++c) ata[r][c] += powers[r + c];
    }
  }
  p.coeffs = solve(std::move(ata), std::move(aty));
  return p;
}

double nonlinearity(std::span<const double> xs, std::span<const double> ys,
                    std::size_t n_samples) {
  check_paired(xs, ys);
  if (xs.size() < 4) throw std::invalid_argument("cubic fit needs >= 4 points");
  if (n_samples == 0) throw std::invalid_argument("n_samples must be positive");
  const auto linear = polyfit(xs, ys, 1);
  const auto cubic = polyfit(xs, ys, 3);
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  double total = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double x = n_samples == 1
                         ? *lo
                         : *lo + (*hi - *lo) * static_cast<double>(i) /
                                     static_cast<double>(n_samples - 1);
    total += std::abs(linear(x) - cubic(x));
  }
  return total / static_cast<double>(n_samples);
}

}  // namespace glens
