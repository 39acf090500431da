// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HILBERT_POTENTIAL_HPP
#define HILBERT_POTENTIAL_HPP

#include "hilbert/sequences.hpp"

namespace hilbert {

enum class PotentialVariant { LinePotential, CirclePotential };

/// Evaluation context for the node potential phi. Caches the pieces that do
/// not depend on the evaluation point (the line regularizer sum, the node
/// angles on the circle).
class PotentialContext {
 public:
  PotentialContext(WeightedNodeSet nodes, PotentialVariant variant,
                   const Tolerances& tol = default_tolerances());

  /// Variant inferred from the node geometry (Line/Circle only).
  static PotentialContext for_set(WeightedNodeSet nodes,
                                  const Tolerances& tol = default_tolerances());

  const WeightedNodeSet& nodes() const { return nodes_; }
  PotentialVariant variant() const { return variant_; }
  const Tolerances& tolerances() const { return tol_; }

  bool is_line() const { return variant_ == PotentialVariant::LinePotential; }

  /// Line only: sum of v_n gamma_n / (1 + gamma_n^2), the constant the
  /// Cauchy terms are regularized by. The boundary limit of phi is its
  /// negative.
  double regularizer() const { return regularizer_; }

  /// Circle only: node angles in [0, 2pi), original order.
  const Eigen::VectorXd& node_angles() const { return angles_; }

 private:
  WeightedNodeSet nodes_;
  PotentialVariant variant_;
  Tolerances tol_;
  double regularizer_ = 0.0;
  Eigen::VectorXd angles_;
};

/// The potential itself. Line: sum v_n (1/(gamma_n - z) - gamma_n/(1+gamma_n^2)).
/// Circle: (i/2) sum v_n (gamma_n + z)/(gamma_n - z).
Complex phi(const PotentialContext& ctx, Complex z);

/// Line: complex derivative, sum v_n/(gamma_n - z)^2.
/// Circle: tangential derivative d(phi)/d(theta) at z = e^{i theta}, equal to
/// sum v_n / |gamma_n - z|^2; requires |z| = 1 (throws NotOnCircle).
Complex phi_derivative(const PotentialContext& ctx, Complex z);

/// Im phi(z) on the open domain (upper half-plane / unit disk). Positive by
/// the Herglotz property; throws OutOfDomain outside the open domain.
double herglotz_check(const PotentialContext& ctx, Complex z);

/// Exact real-arithmetic evaluation of phi on the line (z = x real) and on
/// the circle (z = e^{i theta}); used by the level-set solver and handy for
/// plotting. Both are strictly increasing between consecutive nodes.
double phi_on_line(const PotentialContext& ctx, double x);
double phi_on_circle(const PotentialContext& ctx, double theta);
double phi_derivative_on_circle(const PotentialContext& ctx, double theta);

}  // namespace hilbert

#endif  // HILBERT_POTENTIAL_HPP
