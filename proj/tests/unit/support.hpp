// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only helpers: extended-precision reference sums, finite differences
// and random instance generators. Everything here is deliberately written
// as plain loops, independent of the library's evaluation paths.

#ifndef HILBERT_TESTS_SUPPORT_HPP
#define HILBERT_TESTS_SUPPORT_HPP

#include <complex>
#include <random>
#include <vector>

#include "hilbert/levelset.hpp"

namespace testsupport {

using hilbert::Complex;

// --- extended-precision reference evaluations -----------------------------

inline long double star_sum_ref(const std::vector<long double>& g,
                                const std::vector<long double>& v, long double x) {
  long double s = 0.0L;
  for (size_t k = 0; k < g.size(); ++k) {
    const long double d = x - g[k];
    s += v[k] / (d * d);
  }
  return s;
}

inline long double phi_line_ref(const std::vector<long double>& g,
                                const std::vector<long double>& v, long double x) {
  long double s = 0.0L;
  for (size_t k = 0; k < g.size(); ++k)
    s += v[k] * (1.0L / (g[k] - x) - g[k] / (1.0L + g[k] * g[k]));
  return s;
}

inline std::complex<long double> phi_circle_ref(const std::vector<std::complex<long double>>& g,
                                                const std::vector<long double>& v,
                                                std::complex<long double> z) {
  std::complex<long double> s = 0.0L;
  const std::complex<long double> half_i(0.0L, 0.5L);
  for (size_t k = 0; k < g.size(); ++k) s += half_i * v[k] * (g[k] + z) / (g[k] - z);
  return s;
}

// Central difference of a real scalar function.
template <typename F>
double central_difference(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// --- random instances matching the acceptance distribution ---------------

inline hilbert::WeightedNodeSet random_line_set(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> node(-10.0, 10.0), weight(0.0, 5.0);
  Eigen::VectorXd g(n), v(n);
  while (true) {
    for (int k = 0; k < n; ++k) g(k) = node(rng);
    double min_gap = 1e300;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) min_gap = std::min(min_gap, std::abs(g(a) - g(b)));
    if (min_gap > 1e-6) break;
  }
  for (int k = 0; k < n; ++k) v(k) = 5.0 - weight(rng);  // (0, 5]
  return hilbert::WeightedNodeSet::line(g, v);
}

inline hilbert::WeightedNodeSet random_circle_set(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI), weight(0.0, 5.0);
  Eigen::VectorXcd g(n);
  Eigen::VectorXd v(n);
  while (true) {
    std::vector<double> th(static_cast<size_t>(n));
    for (auto& t : th) t = angle(rng);
    double min_gap = 1e300;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const double d = std::abs(std::remainder(th[static_cast<size_t>(a)] -
                                                 th[static_cast<size_t>(b)], 2.0 * M_PI));
        min_gap = std::min(min_gap, d);
      }
    if (min_gap > 1e-6) {
      for (int k = 0; k < n; ++k) g(k) = std::polar(1.0, th[static_cast<size_t>(k)]);
      break;
    }
  }
  for (int k = 0; k < n; ++k) v(k) = 5.0 - weight(rng);
  return hilbert::WeightedNodeSet::circle(g, v);
}

// Uniform alpha staying clear of the exceptional value.
inline double random_regular_alpha(std::mt19937_64& rng, const hilbert::PotentialContext& ctx) {
  std::uniform_real_distribution<double> pick(-5.0, 5.0);
  const auto astar = hilbert::exceptional_alpha(ctx);
  for (;;) {
    const double a = pick(rng);
    if (!astar || std::abs(a - *astar) > 1e-3) return a;
  }
}

}  // namespace testsupport

#endif  // HILBERT_TESTS_SUPPORT_HPP
