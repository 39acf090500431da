// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#include "hilbert/clark.hpp"

#include <cmath>

namespace hilbert {

namespace {

// Off-diagonal / closed-form agreement threshold for the quadrature Gram.
constexpr double kClarkGramTol = 1e-9;

}  // namespace

Complex inner_value(const InnerFunctionHandle& h, Complex z) {
  const Complex p = phi(h.ctx, z);
  return (p - kI) / (p + kI);
}

Complex phi_from_inner(Complex inner) {
  if (std::abs(inner - 1.0) <= 1e-14 * (1.0 + std::abs(inner)))
    throw AtOne("phi_from_inner: inner value 1 corresponds to the poles of phi");
  return kI * (1.0 + inner) / (1.0 - inner);
}

Complex alpha_beta(double alpha) {
  return (alpha - kI) / (alpha + kI);
}

double beta_alpha(Complex beta) {
  if (std::abs(beta - 1.0) <= 1e-10)
    throw BetaEqualsOne("beta_alpha: beta = 1 corresponds to alpha = infinity");
  const Complex a = kI * (1.0 + beta) / (1.0 - beta);
  if (std::abs(a.imag()) > 1e-10 * (1.0 + std::abs(a.real())))
    throw InvalidInput("beta_alpha: beta must sit on the unit circle");
  return a.real();
}

Complex model_kernel(const InnerFunctionHandle& h, Complex zeta, Complex z) {
  const Complex denom = 1.0 - std::conj(zeta) * z;
  const double scale = 1.0 + std::abs(zeta) * std::abs(z);
  if (std::abs(denom) > 1e-12 * scale) {
    const Complex iz = inner_value(h, z);
    const Complex izeta = inner_value(h, zeta);
    return (1.0 - std::conj(izeta) * iz) / denom;
  }
  const bool same_boundary_point =
      std::abs(z - zeta) <= 1e-8 * scale &&
      std::abs(std::abs(zeta) - 1.0) <= h.ctx.tolerances().on_circle;
  if (!same_boundary_point)
    throw SingularPair("model_kernel: conj(zeta) z = 1 with a non-vanishing numerator");
  // Removable diagonal limit on the circle: 2 phi_theta / (1 + phi^2).
  const double theta = std::arg(zeta);
  const double p = phi_on_circle(h.ctx, theta);
  const double pt = phi_derivative_on_circle(h.ctx, theta);
  return Complex(2.0 * pt / (1.0 + p * p), 0.0);
}

namespace {

// Uniform grid of M angles, offset so that no grid point lands near a Clark
// point or a node (the integrand is smooth there, but 0/0 forms are not
// evaluable). The offset is picked deterministically.
Eigen::VectorXd quadrature_grid(int m, const Eigen::VectorXd& avoid, double clearance) {
  static constexpr double kOffsets[] = {0.5, 0.37, 0.71, 0.23, 0.89, 0.13, 0.61, 0.43};
  const double spacing = 2.0 * M_PI / m;
  for (double c : kOffsets) {
    bool ok = true;
    for (Eigen::Index k = 0; k < avoid.size() && ok; ++k) {
      const double frac = std::remainder(avoid(k) / spacing - c, 1.0);
      if (std::abs(frac) * spacing < clearance) ok = false;
    }
    if (ok) {
      Eigen::VectorXd grid(m);
      for (int i = 0; i < m; ++i) grid(i) = spacing * (i + c);
      return grid;
    }
  }
  throw QuadratureUnresolved("quadrature grid cannot clear the singular points");
}

Eigen::MatrixXcd boundary_gram(const InnerFunctionHandle& h, const LevelSet& ls,
                               Complex beta, int m) {
  const Eigen::Index n = ls.size();
  Eigen::VectorXd avoid(2 * n);
  avoid.head(n) = h.ctx.node_angles();
  for (Eigen::Index j = 0; j < n; ++j) avoid(n + j) = std::arg(ls.lambdas(j));
  const double clearance =
      std::max(1e-3 * 2.0 * M_PI / m, 1e3 * h.ctx.nodes().dedup_tol());
  const Eigen::VectorXd grid = quadrature_grid(m, avoid, clearance);

  // kappa_j(z) = (1 - conj(beta) I(z)) / (1 - conj(lambda_j) z); the Clark
  // points carry I(lambda_j) = beta by construction.
  Eigen::MatrixXcd k(n, m);
  for (int i = 0; i < m; ++i) {
    const Complex z = std::polar(1.0, grid(i));
    const Complex numerator = 1.0 - std::conj(beta) * inner_value(h, z);
    for (Eigen::Index j = 0; j < n; ++j)
      k(j, i) = numerator / (1.0 - std::conj(ls.lambdas(j)) * z);
  }
  return (k * k.adjoint()) / static_cast<double>(m);
}

}  // namespace

ClarkBasisResult clark_basis(const InnerFunctionHandle& h, Complex beta,
                             int quadrature_points) {
  if (std::abs(std::abs(beta) - 1.0) > 1e-10)
    throw InvalidInput("clark_basis: beta must sit on the unit circle");
  if (std::abs(beta - 1.0) <= 1e-10)
    throw BetaEqualsOne("clark_basis: beta = 1 reproduces the nodes themselves");

  ClarkBasisResult out;
  out.beta = beta;
  out.alpha = beta_alpha(beta);
  out.levels = solve_level_set(h.ctx, out.alpha);

  const Eigen::Index n = out.levels.size();
  const Tolerances& tol = h.ctx.tolerances();
  int m = quadrature_points > 0 ? quadrature_points
                                : tol.quadrature_factor * static_cast<int>(n);
  m = std::max(m, 16);
  const Eigen::MatrixXcd coarse = boundary_gram(h, out.levels, beta, m);
  const Eigen::MatrixXcd fine = boundary_gram(h, out.levels, beta, 2 * m);
  const double drift = (coarse - fine).cwiseAbs().maxCoeff();
  if (drift > tol.quadrature_drift)
    throw QuadratureUnresolved("gram entries moved by " + std::to_string(drift) +
                               " when doubling the quadrature order");
  out.gram = fine;
  out.quadrature_points = 2 * m;

  out.l2_diag.resize(n);
  for (Eigen::Index j = 0; j < n; ++j)
    out.l2_diag(j) = 2.0 / ((1.0 + out.alpha * out.alpha) * out.levels.weights(j));

  out.offdiag_max = 0.0;
  out.l2_agreement_max = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index l = 0; l < n; ++l) {
      const Complex expected = j == l ? Complex(out.l2_diag(j), 0.0) : Complex(0.0, 0.0);
      out.l2_agreement_max = std::max(out.l2_agreement_max, std::abs(out.gram(j, l) - expected));
      if (j != l) out.offdiag_max = std::max(out.offdiag_max, std::abs(out.gram(j, l)));
    }
  }
  out.diagonal_within_tol =
      out.offdiag_max <= kClarkGramTol && out.l2_agreement_max <= kClarkGramTol;
  return out;
}

}  // namespace hilbert
