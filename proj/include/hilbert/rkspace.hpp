// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HILBERT_RKSPACE_HPP
#define HILBERT_RKSPACE_HPP

#include "hilbert/transform.hpp"

namespace hilbert {

// The space carried by a node family has, by construction, the structure the
// sampling machinery relies on: a zero of an element at an off-node point can
// be divided out within the space, every off-node point carries a reproducing
// kernel, and the kernels over a level set form an orthogonal family. No
// machinery exists for checking these properties on arbitrary user spaces.

/// An element f(z) = sum_n a_n v_n / (z - gamma_n) of the space carried by a
/// node family; just its coefficient vector, aligned with gamma.
struct SpaceElement {
  Eigen::VectorXcd coeffs;
};

/// The reproducing kernel at a point, materialized as a space element with
/// coefficients 1/conj(z - gamma_n).
struct KernelVector {
  Complex anchor{};
  SpaceElement element;
};

Complex evaluate(const WeightedNodeSet& s, const SpaceElement& f, Complex z);

Complex inner(const WeightedNodeSet& s, const SpaceElement& f, const SpaceElement& g);
double norm(const WeightedNodeSet& s, const SpaceElement& f);

/// k_z(zeta) = sum_n v_n / ((conj z - conj gamma_n)(zeta - gamma_n)).
Complex kernel(const WeightedNodeSet& s, Complex z, Complex zeta);
KernelVector kernel_vector(const WeightedNodeSet& s, Complex z);

/// Gram deviation of the normalized kernel family {sqrt(w_j) k_{lambda_j}}.
/// For a full (square) family this is the honest kernel Gram deviation,
/// which coincides with the transform's column Gram deviation; a short
/// family cannot span, so the column Gram (completeness) deviation is
/// reported instead.
double basis_certificate(const WeightedNodeSet& s, const LevelSet& ls);

/// Kernel-basis expansion sum_j samples_j w_j k_{lambda_j}(z), exact for
/// elements of the space once the basis certificate passes. Validates the
/// certificate once at construction (throws BasisNotCertified).
class Reconstructor {
 public:
  Reconstructor(const WeightedNodeSet& s, const LevelSet& ls, Eigen::VectorXcd samples,
                const Tolerances& tol = default_tolerances());
  Complex operator()(Complex z) const;
  double certificate() const { return certificate_; }

 private:
  WeightedNodeSet set_;
  Eigen::VectorXcd lambdas_;
  Eigen::VectorXcd scaled_samples_;  // samples_j * w_j
  double certificate_;
};

/// One-shot reconstruction at a single point.
Complex reconstruct(const WeightedNodeSet& s, const LevelSet& ls,
                    const Eigen::VectorXcd& samples, Complex z,
                    const Tolerances& tol = default_tolerances());

/// E_alpha(z) = (alpha - phi(z)) prod_n (z - gamma_n): the polynomial whose
/// zero set is the level set (degree drops by one at the exceptional alpha).
/// Evaluated in factored form; never through expanded coefficients.
Complex generating_function(const PotentialContext& ctx, double alpha, Complex z);

/// dE/dz by the product rule, using phi' and the product values.
Complex generating_function_derivative(const PotentialContext& ctx, double alpha, Complex z);

/// g_j(z) = E(z) / (E'(lambda_j)(z - lambda_j)); g_j(lambda_k) = delta_jk.
/// Since the level set is exactly the zero set of E, the quotient reduces to
/// the Lagrange factor over the level-set points, which is how it is
/// evaluated (the E-form loses accuracy when the products prod(z - gamma_n)
/// at different roots differ by many orders of magnitude).
Complex biorthogonal(const PotentialContext& ctx, const LevelSet& ls, Eigen::Index j,
                     Complex z);

}  // namespace hilbert

#endif  // HILBERT_RKSPACE_HPP
