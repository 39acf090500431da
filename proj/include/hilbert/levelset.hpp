// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HILBERT_LEVELSET_HPP
#define HILBERT_LEVELSET_HPP

#include <optional>

#include "hilbert/potential.hpp"

namespace hilbert {

/// Solutions of phi(lambda) = alpha together with their dual weights.
///
/// Solver-produced sets carry an anchored representation of each root:
/// the root is stored relative to the nearest node (line: lambda = gamma[a] +
/// offset; circle: angle = node_angle[a] + offset). Downstream consumers use
/// it to form the differences lambda_j - gamma_n to full relative precision
/// even when a root sits deep inside a narrow gap.
struct LevelSet {
  double alpha = 0.0;
  Geometry geometry = Geometry::Line;
  Eigen::VectorXcd lambdas;    // line: ascending on the real axis; circle: ascending angle
  Eigen::VectorXd weights;
  bool exceptional = false;

  Eigen::VectorXi anchors;     // node index (original order); empty for assembled sets
  Eigen::VectorXd offsets;
  Eigen::VectorXd residuals;   // certified |phi(lambda_j) - alpha|

  Eigen::Index size() const { return lambdas.size(); }
  bool anchored() const { return anchors.size() == lambdas.size() && size() > 0; }

  Eigen::VectorXd lambdas_real() const;

  /// Assemble a set from explicit points (weights from kernel_weight).
  /// No anchoring; used for perturbation experiments and external data.
  static LevelSet from_points(const WeightedNodeSet& s, const Eigen::VectorXcd& lambdas,
                              double alpha, bool exceptional = false);
};

/// Boundary limit of phi along the real line (the one alpha whose level set
/// drops a point). nullopt on the circle, where no such value exists.
std::optional<double> exceptional_alpha(const PotentialContext& ctx);

/// Solve phi(lambda) = alpha.
///
/// Line: phi is strictly increasing between consecutive nodes, so each of the
/// N-1 bounded gaps holds exactly one root (bracketed bisection, then
/// safeguarded Newton). The unbounded region holds one more root unless
/// alpha matches the boundary limit within tolerance, in which case the set
/// is flagged exceptional with N-1 roots.
///
/// Circle: exactly one root per arc between angularly consecutive nodes,
/// N roots, never exceptional.
LevelSet solve_level_set(const PotentialContext& ctx, double alpha);

/// Partial-fraction data for 1/(alpha - phi): constant b, linear coefficient
/// c (nonzero only at the exceptional alpha, where it equals 1/sum v_n), and
/// the atoms (lambda_j, w_j) of the level set.
struct HerglotzDecomposition {
  double alpha = 0.0;
  double b = 0.0;
  double c = 0.0;
  Eigen::VectorXd lambdas;
  Eigen::VectorXd weights;
  bool exceptional = false;
};

/// Line geometry only. Verifies the reconstruction against 1/(alpha - phi)
/// at a deterministic probe set and throws DecompositionResidual when the
/// identity fails beyond tolerance (a root-finder failure, not user error).
HerglotzDecomposition herglotz_decompose(const PotentialContext& ctx, double alpha);

/// Right-hand side b + c z + sum_j w_j (1/(lambda_j - z) - lambda_j/(1+lambda_j^2)).
Complex evaluate_decomposition(const HerglotzDecomposition& d, Complex z);

}  // namespace hilbert

#endif  // HILBERT_LEVELSET_HPP
