// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#include "hilbert/sequences.hpp"

#include <cmath>
#include <utility>

#include "hilbert/summation.hpp"

namespace hilbert {

std::string to_string(Geometry g) {
  switch (g) {
    case Geometry::Line: return "line";
    case Geometry::Circle: return "circle";
    case Geometry::General: return "general";
  }
  return "general";
}

Geometry geometry_from_string(const std::string& s) {
  if (s == "line") return Geometry::Line;
  if (s == "circle") return Geometry::Circle;
  if (s == "general") return Geometry::General;
  throw InvalidInput("geometry: expected \"line\", \"circle\" or \"general\", got \"" + s + "\"");
}

WeightedNodeSet::WeightedNodeSet(Eigen::VectorXcd gamma, Eigen::VectorXd v,
                                 Geometry geometry, const Tolerances& tol)
    : gamma_(std::move(gamma)), v_(std::move(v)), geometry_(geometry) {
  const Eigen::Index n = gamma_.size();
  if (n < 1) throw InvalidInput("gamma: at least one node required");
  if (v_.size() != n) throw InvalidInput("v: length must match gamma");
  for (Eigen::Index k = 0; k < n; ++k) {
    if (!std::isfinite(gamma_(k).real()) || !std::isfinite(gamma_(k).imag()))
      throw InvalidInput("gamma: nonfinite node");
    if (!(v_(k) > 0.0) || !std::isfinite(v_(k)))
      throw InvalidInput("v: weights must be positive and finite");
  }

  scale_ = std::max(1.0, gamma_.cwiseAbs().maxCoeff());
  dedup_tol_ = tol.dedup_rel * scale_;

  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      if (std::abs(gamma_(j) - gamma_(k)) <= dedup_tol_)
        throw InvalidInput("gamma: nodes " + std::to_string(j) + " and " + std::to_string(k) +
                           " are closer than the distinctness tolerance");
    }
  }

  if (geometry_ == Geometry::Line) {
    for (Eigen::Index k = 0; k < n; ++k)
      if (gamma_(k).imag() != 0.0)
        throw InvalidInput("gamma: line geometry requires real nodes");
  } else if (geometry_ == Geometry::Circle) {
    for (Eigen::Index k = 0; k < n; ++k)
      if (std::abs(std::abs(gamma_(k)) - 1.0) > 1e-12)
        throw InvalidInput("gamma: circle geometry requires unit-modulus nodes");
  }
}

WeightedNodeSet WeightedNodeSet::line(const Eigen::VectorXd& gamma, const Eigen::VectorXd& v,
                                      const Tolerances& tol) {
  Eigen::VectorXcd g(gamma.size());
  for (Eigen::Index k = 0; k < gamma.size(); ++k) g(k) = Complex(gamma(k), 0.0);
  return WeightedNodeSet(std::move(g), v, Geometry::Line, tol);
}

WeightedNodeSet WeightedNodeSet::circle(const Eigen::VectorXcd& gamma, const Eigen::VectorXd& v,
                                        const Tolerances& tol) {
  return WeightedNodeSet(gamma, v, Geometry::Circle, tol);
}

Eigen::VectorXd WeightedNodeSet::gamma_real() const {
  if (geometry_ != Geometry::Line)
    throw InvalidInput("gamma_real: set is not line geometry");
  return gamma_.real();
}

Eigen::VectorXd WeightedNodeSet::gamma_angles() const {
  if (geometry_ != Geometry::Circle)
    throw InvalidInput("gamma_angles: set is not circle geometry");
  Eigen::VectorXd theta(gamma_.size());
  for (Eigen::Index k = 0; k < gamma_.size(); ++k) {
    double a = std::arg(gamma_(k));
    if (a < 0.0) a += 2.0 * M_PI;
    theta(k) = a;
  }
  return theta;
}

double WeightedNodeSet::distance_to_nodes(Complex z) const {
  return (gamma_.array() - z).abs().minCoeff();
}

void WeightedNodeSet::require_off_nodes(Complex z) const {
  if (distance_to_nodes(z) <= dedup_tol_)
    throw PointOnGamma("evaluation point coincides with a node");
}

double admissibility_sum(const WeightedNodeSet& s) {
  const Eigen::ArrayXd terms = s.v().array() / (1.0 + s.gamma().array().abs2());
  return pairwise_sum(terms.matrix());
}

double star_value(const WeightedNodeSet& s, Complex z) {
  s.require_off_nodes(z);
  const Eigen::ArrayXd terms = s.v().array() / (s.gamma().array() - z).abs2();
  return pairwise_sum(terms.matrix());
}

double kernel_weight(const WeightedNodeSet& s, Complex lambda) {
  return 1.0 / star_value(s, lambda);
}

}  // namespace hilbert
