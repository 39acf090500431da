// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HILBERT_SUMMATION_HPP
#define HILBERT_SUMMATION_HPP

#include <Eigen/Core>
#include <complex>
#include <cstddef>

namespace hilbert {

namespace detail {

template <typename Derived>
typename Derived::Scalar pairwise_block(const Eigen::DenseBase<Derived>& terms,
                                        Eigen::Index lo, Eigen::Index n) {
  using Scalar = typename Derived::Scalar;
  if (n <= 8) {
    Scalar acc = Scalar(0);
    for (Eigen::Index k = 0; k < n; ++k) acc += terms(lo + k);
    return acc;
  }
  const Eigen::Index half = n / 2;
  return pairwise_block(terms, lo, half) + pairwise_block(terms, lo + half, n - half);
}

}  // namespace detail

/// Fixed-order pairwise (tree) reduction of a dense term vector. The split
/// points depend only on the length, so the result is bitwise reproducible
/// for a fixed input order, with ~O(eps log N) rounding error.
template <typename Derived>
typename Derived::Scalar pairwise_sum(const Eigen::DenseBase<Derived>& terms) {
  if (terms.size() == 0) return typename Derived::Scalar(0);
  return detail::pairwise_block(terms, 0, terms.size());
}

/// Neumaier-compensated sum of real terms. Fixed order, deterministic.
/// Used where a residual must be certified through heavy cancellation
/// (error ~ eps*|result| instead of eps*sum|terms|).
template <typename Derived>
double compensated_sum(const Eigen::DenseBase<Derived>& terms) {
  double sum = 0.0;
  double comp = 0.0;
  for (Eigen::Index k = 0; k < terms.size(); ++k) {
    const double t = terms(k);
    const double next = sum + t;
    if (std::abs(sum) >= std::abs(t)) {
      comp += (sum - next) + t;
    } else {
      comp += (t - next) + sum;
    }
    sum = next;
  }
  return sum + comp;
}

}  // namespace hilbert

#endif  // HILBERT_SUMMATION_HPP
