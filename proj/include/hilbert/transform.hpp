// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HILBERT_TRANSFORM_HPP
#define HILBERT_TRANSFORM_HPP

#include "hilbert/levelset.hpp"

namespace hilbert {

/// Dense matrix of the discrete Hilbert transform between the node family
/// (rows: lambda, columns: gamma). Scaled entries sqrt(w_j v_n)/(lambda_j -
/// gamma_n) represent the operator between standardized l2 spaces, so "the
/// transform is unitary" becomes "this matrix is unitary".
struct TransformMatrix {
  Eigen::MatrixXcd entries;
  Eigen::VectorXd row_weights;  // w
  Eigen::VectorXd col_weights;  // v
  bool scaled = true;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
};

enum class Verdict { Unitary, IsometryOnly, CoisometryOnly, NotIsometric, DimensionMismatch };

std::string to_string(Verdict v);

struct UnitarityReport {
  double col_gram_dev = 0.0;  // ||U*U - I||_F
  double row_gram_dev = 0.0;  // ||UU* - I||_F
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  Verdict verdict = Verdict::NotIsometric;
  double tol = 0.0;           // threshold the verdict was taken at
};

/// Differences lambda_j - gamma_n. Uses the level set's anchored
/// representation when present, so entries keep full relative precision in
/// narrow gaps; falls back to direct subtraction otherwise.
Eigen::MatrixXcd cauchy_differences(const WeightedNodeSet& s, const LevelSet& ls);

/// Scaled transform matrix. Throws Overlap if some lambda collides with a node.
TransformMatrix build(const WeightedNodeSet& s, const LevelSet& ls);
/// Raw entries v_n/(lambda_j - gamma_n) (the operator on natural coefficients).
TransformMatrix build_raw(const WeightedNodeSet& s, const LevelSet& ls);

/// Low-level assembly from explicit data; rows (lambda, w), columns (gamma, v).
TransformMatrix build_scaled_from(const Eigen::VectorXcd& gamma, const Eigen::VectorXd& v,
                                  const Eigen::VectorXcd& lambda, const Eigen::VectorXd& w,
                                  double overlap_tol);

/// Matrix-vector action. Scaled matrices act on standardized l2 coordinates,
/// raw matrices on natural coefficients. Throws ShapeMismatch.
Eigen::VectorXcd apply(const TransformMatrix& t, const Eigen::VectorXcd& a);

/// Frobenius deviations of both Grams and the resulting verdict.
/// Threshold: unit_rel * max(rows, cols).
UnitarityReport unitarity_report(const TransformMatrix& t,
                                 const Tolerances& tol = default_tolerances());

/// || (scaled H_v(Gamma,Lambda))* + scaled H_w(Lambda,Gamma) ||_F; the two
/// transforms are mutual negative adjoints over real data, so this vanishes
/// to rounding. Line geometry only.
double adjoint_identity_check(const WeightedNodeSet& s, const LevelSet& ls);

/// Per-row deviation of the squared row norm from 1 (the identity
/// sum_n w_j v_n/|gamma_n - lambda_j|^2 = 1 for solver-produced weights;
/// for prescribed weights it measures truncation defect).
Eigen::VectorXd row_norm_defects(const TransformMatrix& t);

}  // namespace hilbert

#endif  // HILBERT_TRANSFORM_HPP
