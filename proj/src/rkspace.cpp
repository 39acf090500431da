// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#include "hilbert/rkspace.hpp"

#include <cmath>
#include <utility>

#include "hilbert/summation.hpp"

namespace hilbert {

Complex evaluate(const WeightedNodeSet& s, const SpaceElement& f, Complex z) {
  if (f.coeffs.size() != s.size())
    throw ShapeMismatch("evaluate: coefficient length does not match node count");
  s.require_off_nodes(z);
  Eigen::VectorXcd terms(s.size());
  for (Eigen::Index k = 0; k < s.size(); ++k)
    terms(k) = f.coeffs(k) * s.v()(k) / (z - s.gamma()(k));
  return pairwise_sum(terms);
}

Complex inner(const WeightedNodeSet& s, const SpaceElement& f, const SpaceElement& g) {
  if (f.coeffs.size() != s.size() || g.coeffs.size() != s.size())
    throw ShapeMismatch("inner: coefficient length does not match node count");
  Eigen::VectorXcd terms(s.size());
  for (Eigen::Index k = 0; k < s.size(); ++k)
    terms(k) = f.coeffs(k) * std::conj(g.coeffs(k)) * s.v()(k);
  return pairwise_sum(terms);
}

double norm(const WeightedNodeSet& s, const SpaceElement& f) {
  return std::sqrt(std::max(0.0, inner(s, f, f).real()));
}

Complex kernel(const WeightedNodeSet& s, Complex z, Complex zeta) {
  s.require_off_nodes(z);
  s.require_off_nodes(zeta);
  Eigen::VectorXcd terms(s.size());
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    const Complex g = s.gamma()(k);
    terms(k) = s.v()(k) / (std::conj(z - g) * (zeta - g));
  }
  return pairwise_sum(terms);
}

KernelVector kernel_vector(const WeightedNodeSet& s, Complex z) {
  s.require_off_nodes(z);
  KernelVector k;
  k.anchor = z;
  k.element.coeffs.resize(s.size());
  for (Eigen::Index n = 0; n < s.size(); ++n)
    k.element.coeffs(n) = 1.0 / std::conj(z - s.gamma()(n));
  return k;
}

double basis_certificate(const WeightedNodeSet& s, const LevelSet& ls) {
  // The Gram of the normalized kernels and the column Gram of the scaled
  // transform certify the same statement (and agree exactly for a full
  // family), so a single computation serves both. For a short family the
  // kernels stay orthonormal but cannot span, and the column Gram is what
  // detects the missing direction.
  return unitarity_report(build(s, ls)).col_gram_dev;
}

Reconstructor::Reconstructor(const WeightedNodeSet& s, const LevelSet& ls,
                             Eigen::VectorXcd samples, const Tolerances& tol)
    : set_(s), lambdas_(ls.lambdas) {
  if (samples.size() != ls.size())
    throw ShapeMismatch("reconstruct: need one sample per level-set point");
  certificate_ = basis_certificate(s, ls);
  const double limit = tol.unit_rel * static_cast<double>(std::max(s.size(), ls.size()));
  if (!(certificate_ <= limit))
    throw BasisNotCertified("kernel basis certificate " + std::to_string(certificate_) +
                            " exceeds " + std::to_string(limit));
  scaled_samples_ = samples.array() * ls.weights.array();
}

Complex Reconstructor::operator()(Complex z) const {
  Eigen::VectorXcd terms(lambdas_.size());
  for (Eigen::Index j = 0; j < lambdas_.size(); ++j)
    terms(j) = scaled_samples_(j) * kernel(set_, lambdas_(j), z);
  return pairwise_sum(terms);
}

Complex reconstruct(const WeightedNodeSet& s, const LevelSet& ls,
                    const Eigen::VectorXcd& samples, Complex z, const Tolerances& tol) {
  return Reconstructor(s, ls, samples, tol)(z);
}

namespace {

Complex node_product(const WeightedNodeSet& s, Complex z) {
  Complex p = 1.0;
  for (Eigen::Index k = 0; k < s.size(); ++k) p *= z - s.gamma()(k);
  return p;
}

}  // namespace

Complex generating_function(const PotentialContext& ctx, double alpha, Complex z) {
  if (!ctx.is_line()) throw InvalidInput("generating_function: line geometry required");
  // Factored form only. Both factors are evaluated to relative accuracy, so
  // the product stays accurate even where E is tiny (near its roots);
  // expanding into polynomial coefficients would lose that.
  return (alpha - phi(ctx, z)) * node_product(ctx.nodes(), z);
}

Complex generating_function_derivative(const PotentialContext& ctx, double alpha, Complex z) {
  if (!ctx.is_line()) throw InvalidInput("generating_function_derivative: line geometry required");
  const WeightedNodeSet& s = ctx.nodes();
  const Complex p = node_product(s, z);
  Eigen::VectorXcd inv(s.size());
  for (Eigen::Index k = 0; k < s.size(); ++k) inv(k) = 1.0 / (z - s.gamma()(k));
  return -phi_derivative(ctx, z) * p + (alpha - phi(ctx, z)) * p * pairwise_sum(inv);
}

Complex biorthogonal(const PotentialContext& ctx, const LevelSet& ls, Eigen::Index j,
                     Complex z) {
  if (!ctx.is_line()) throw InvalidInput("biorthogonal: line geometry required");
  if (j < 0 || j >= ls.size()) throw ShapeMismatch("biorthogonal: index out of range");
  Complex num = 1.0, den = 1.0;
  for (Eigen::Index m = 0; m < ls.size(); ++m) {
    if (m == j) continue;
    num *= z - ls.lambdas(m);
    den *= ls.lambdas(j) - ls.lambdas(m);
  }
  return num / den;
}

}  // namespace hilbert
