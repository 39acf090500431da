// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#include "hilbert/transform.hpp"

#include <cmath>

#include "hilbert/summation.hpp"

namespace hilbert {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Unitary: return "Unitary";
    case Verdict::IsometryOnly: return "IsometryOnly";
    case Verdict::CoisometryOnly: return "CoisometryOnly";
    case Verdict::NotIsometric: return "NotIsometric";
    case Verdict::DimensionMismatch: return "DimensionMismatch";
  }
  return "NotIsometric";
}

Eigen::MatrixXcd cauchy_differences(const WeightedNodeSet& s, const LevelSet& ls) {
  const Eigen::Index m = ls.size(), n = s.size();
  Eigen::MatrixXcd d(m, n);
  if (ls.anchored() && ls.geometry == Geometry::Line && s.geometry() == Geometry::Line) {
    const Eigen::VectorXd g = s.gamma_real();
    for (Eigen::Index j = 0; j < m; ++j) {
      const double ga = g(ls.anchors(j));
      for (Eigen::Index k = 0; k < n; ++k)
        d(j, k) = Complex((ga - g(k)) + ls.offsets(j), 0.0);
    }
    return d;
  }
  if (ls.anchored() && ls.geometry == Geometry::Circle && s.geometry() == Geometry::Circle) {
    const Eigen::VectorXd th = s.gamma_angles();
    for (Eigen::Index j = 0; j < m; ++j) {
      const double ta = th(ls.anchors(j));
      for (Eigen::Index k = 0; k < n; ++k) {
        // e^{iA} - e^{iB} = 2i sin((A-B)/2) e^{i(A+B)/2}, with A-B formed in
        // angle space so nearby points keep relative accuracy.
        const double diff = (ta - th(k)) + ls.offsets(j);
        const double mean = ta + ls.offsets(j) + th(k);
        d(j, k) = 2.0 * std::sin(0.5 * diff) * (kI * std::polar(1.0, 0.5 * mean));
      }
    }
    return d;
  }
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index k = 0; k < n; ++k) d(j, k) = ls.lambdas(j) - s.gamma()(k);
  return d;
}

namespace {

TransformMatrix assemble(const WeightedNodeSet& s, const LevelSet& ls, bool scaled) {
  const Eigen::MatrixXcd d = cauchy_differences(s, ls);
  if (d.size() > 0 && d.cwiseAbs().minCoeff() <= s.dedup_tol())
    throw Overlap("a level-set point collides with a node");
  TransformMatrix t;
  t.row_weights = ls.weights;
  t.col_weights = s.v();
  t.scaled = scaled;
  t.entries.resize(d.rows(), d.cols());
  for (Eigen::Index j = 0; j < d.rows(); ++j) {
    for (Eigen::Index k = 0; k < d.cols(); ++k) {
      const double num = scaled ? std::sqrt(ls.weights(j) * s.v()(k)) : s.v()(k);
      t.entries(j, k) = num / d(j, k);
    }
  }
  return t;
}

}  // namespace

TransformMatrix build(const WeightedNodeSet& s, const LevelSet& ls) {
  return assemble(s, ls, true);
}

TransformMatrix build_raw(const WeightedNodeSet& s, const LevelSet& ls) {
  return assemble(s, ls, false);
}

TransformMatrix build_scaled_from(const Eigen::VectorXcd& gamma, const Eigen::VectorXd& v,
                                  const Eigen::VectorXcd& lambda, const Eigen::VectorXd& w,
                                  double overlap_tol) {
  TransformMatrix t;
  t.row_weights = w;
  t.col_weights = v;
  t.scaled = true;
  t.entries.resize(lambda.size(), gamma.size());
  for (Eigen::Index j = 0; j < lambda.size(); ++j) {
    for (Eigen::Index k = 0; k < gamma.size(); ++k) {
      const Complex d = lambda(j) - gamma(k);
      if (std::abs(d) <= overlap_tol) throw Overlap("lambda collides with a node");
      t.entries(j, k) = std::sqrt(w(j) * v(k)) / d;
    }
  }
  return t;
}

Eigen::VectorXcd apply(const TransformMatrix& t, const Eigen::VectorXcd& a) {
  if (a.size() != t.cols())
    throw ShapeMismatch("apply: coefficient length " + std::to_string(a.size()) +
                        " does not match " + std::to_string(t.cols()) + " columns");
  return t.entries * a;
}

UnitarityReport unitarity_report(const TransformMatrix& t, const Tolerances& tol) {
  if (!t.scaled)
    throw InvalidInput("unitarity_report: scaled matrix required");
  UnitarityReport r;
  r.rows = t.rows();
  r.cols = t.cols();
  const Eigen::MatrixXcd& u = t.entries;
  r.col_gram_dev = (u.adjoint() * u - Eigen::MatrixXcd::Identity(r.cols, r.cols)).norm();
  r.row_gram_dev = (u * u.adjoint() - Eigen::MatrixXcd::Identity(r.rows, r.rows)).norm();
  r.tol = tol.unit_rel * static_cast<double>(std::max(r.rows, r.cols));
  const bool col_ok = r.col_gram_dev <= r.tol;
  const bool row_ok = r.row_gram_dev <= r.tol;
  if (r.rows == r.cols) {
    if (col_ok && row_ok) r.verdict = Verdict::Unitary;
    else if (col_ok) r.verdict = Verdict::IsometryOnly;
    else if (row_ok) r.verdict = Verdict::CoisometryOnly;
    else r.verdict = Verdict::NotIsometric;
  } else {
    // Never unitary; report which side, if any, survives.
    if (col_ok) r.verdict = Verdict::IsometryOnly;
    else if (row_ok) r.verdict = Verdict::CoisometryOnly;
    else r.verdict = Verdict::DimensionMismatch;
  }
  return r;
}

double adjoint_identity_check(const WeightedNodeSet& s, const LevelSet& ls) {
  if (s.geometry() != Geometry::Line)
    throw InvalidInput("adjoint_identity_check: line geometry required");
  const TransformMatrix forward = build(s, ls);
  // The reverse transform rows are the nodes, columns the level set.
  const Eigen::MatrixXcd d = cauchy_differences(s, ls);
  Eigen::MatrixXcd reverse(s.size(), ls.size());
  for (Eigen::Index k = 0; k < s.size(); ++k)
    for (Eigen::Index j = 0; j < ls.size(); ++j)
      reverse(k, j) = std::sqrt(s.v()(k) * ls.weights(j)) / (-d(j, k));
  return (forward.entries.adjoint() + reverse).norm();
}

Eigen::VectorXd row_norm_defects(const TransformMatrix& t) {
  Eigen::VectorXd defects(t.rows());
  for (Eigen::Index j = 0; j < t.rows(); ++j)
    defects(j) = std::abs(t.entries.row(j).squaredNorm() - 1.0);
  return defects;
}

}  // namespace hilbert
