// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HILBERT_SEQUENCES_HPP
#define HILBERT_SEQUENCES_HPP

#include <Eigen/Core>

#include "hilbert/types.hpp"

namespace hilbert {

/// The pair (gamma, v): finitely many distinct nodes with positive weights,
/// tagged with the ambient geometry. Immutable after construction; all
/// invariants are enforced by the constructor.
class WeightedNodeSet {
 public:
  WeightedNodeSet(Eigen::VectorXcd gamma, Eigen::VectorXd v, Geometry geometry,
                  const Tolerances& tol = default_tolerances());

  static WeightedNodeSet line(const Eigen::VectorXd& gamma, const Eigen::VectorXd& v,
                              const Tolerances& tol = default_tolerances());
  static WeightedNodeSet circle(const Eigen::VectorXcd& gamma, const Eigen::VectorXd& v,
                                const Tolerances& tol = default_tolerances());

  const Eigen::VectorXcd& gamma() const { return gamma_; }
  const Eigen::VectorXd& v() const { return v_; }
  Geometry geometry() const { return geometry_; }
  Eigen::Index size() const { return gamma_.size(); }

  /// max(1, largest node magnitude); tolerances scale against this.
  double scale() const { return scale_; }
  /// Resolved absolute exclusion radius around each node.
  double dedup_tol() const { return dedup_tol_; }

  /// Real node positions (Line geometry only).
  Eigen::VectorXd gamma_real() const;
  /// Node angles in [0, 2pi) (Circle geometry only).
  Eigen::VectorXd gamma_angles() const;

  /// Distance from z to the nearest node.
  double distance_to_nodes(Complex z) const;
  /// Throws PointOnGamma if z is inside the exclusion zone of a node.
  void require_off_nodes(Complex z) const;

 private:
  Eigen::VectorXcd gamma_;
  Eigen::VectorXd v_;
  Geometry geometry_;
  double scale_ = 1.0;
  double dedup_tol_ = 1e-12;
};

/// Sum of v_n / (1 + |gamma_n|^2). Finite input makes this trivially finite;
/// truncations of infinite families use it to report growth.
double admissibility_sum(const WeightedNodeSet& s);

/// Sum of v_n / |z - gamma_n|^2, the quantity whose finiteness defines the
/// star set. Strictly positive; blows up at the nodes.
double star_value(const WeightedNodeSet& s, Complex z);

/// Reciprocal of star_value: the natural weight attached to a sampling
/// point. Strictly positive off the nodes.
double kernel_weight(const WeightedNodeSet& s, Complex lambda);

}  // namespace hilbert

#endif  // HILBERT_SEQUENCES_HPP
