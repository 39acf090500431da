// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HILBERT_CLARK_HPP
#define HILBERT_CLARK_HPP

#include "hilbert/levelset.hpp"

namespace hilbert {

/// The inner function I = (phi - i)/(phi + i) attached to a circle node
/// family; a finite Blaschke product of degree N. |I| < 1 inside the disk
/// and |I| = 1 on the circle off the nodes.
struct InnerFunctionHandle {
  PotentialContext ctx;

  explicit InnerFunctionHandle(PotentialContext c) : ctx(std::move(c)) {
    if (ctx.is_line())
      throw InvalidInput("InnerFunctionHandle: circle potential required");
  }
};

Complex inner_value(const InnerFunctionHandle& h, Complex z);

/// Inverse Cayley step: i (1 + I)/(1 - I). Throws AtOne at I = 1.
Complex phi_from_inner(Complex inner);

/// The spectral-parameter dictionary beta = (alpha - i)/(alpha + i) and its
/// inverse. beta = 1 corresponds to alpha = infinity and is rejected.
Complex alpha_beta(double alpha);
double beta_alpha(Complex beta);

/// Reproducing kernel of the model space: (1 - conj(I(zeta)) I(z)) /
/// (1 - conj(zeta) z). On-circle diagonal pairs take the removable limit
/// 2 phi_theta / (1 + phi^2); other unit-product pairs throw SingularPair.
Complex model_kernel(const InnerFunctionHandle& h, Complex zeta, Complex z);

struct ClarkBasisResult {
  double alpha = 0.0;
  Complex beta{};
  LevelSet levels;               // Clark points with their level-set weights
  Eigen::MatrixXcd gram;         // boundary Gram by trapezoid quadrature
  double offdiag_max = 0.0;
  Eigen::VectorXd l2_diag;       // closed-form diagonal 2 / ((1+alpha^2) w_j)
  double l2_agreement_max = 0.0; // max entrywise |gram - diag(l2_diag)|
  int quadrature_points = 0;
  bool diagonal_within_tol = false;
};

/// Clark family at unimodular beta != 1: solves the phi level set at
/// alpha = beta_alpha(beta), then forms the Gram of the model kernels at the
/// Clark points as an L2 integral over the circle (uniform trapezoid,
/// M = quadrature_factor * N, with a doubling self-check). The quadrature
/// Gram is diagonal and matches the closed-form l2 weights.
ClarkBasisResult clark_basis(const InnerFunctionHandle& h, Complex beta,
                             int quadrature_points = 0);

}  // namespace hilbert

#endif  // HILBERT_CLARK_HPP
