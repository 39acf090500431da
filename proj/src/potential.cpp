// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#include "hilbert/potential.hpp"

#include <cmath>
#include <utility>

#include "hilbert/summation.hpp"

namespace hilbert {

PotentialContext::PotentialContext(WeightedNodeSet nodes, PotentialVariant variant,
                                   const Tolerances& tol)
    : nodes_(std::move(nodes)), variant_(variant), tol_(tol) {
  if (variant_ == PotentialVariant::LinePotential) {
    if (nodes_.geometry() != Geometry::Line)
      throw InvalidInput("PotentialContext: LinePotential requires line geometry");
    const Eigen::ArrayXd g = nodes_.gamma_real().array();
    const Eigen::ArrayXd terms = nodes_.v().array() * g / (1.0 + g.square());
    regularizer_ = pairwise_sum(terms.matrix());
  } else {
    if (nodes_.geometry() != Geometry::Circle)
      throw InvalidInput("PotentialContext: CirclePotential requires circle geometry");
    angles_ = nodes_.gamma_angles();
  }
}

PotentialContext PotentialContext::for_set(WeightedNodeSet nodes, const Tolerances& tol) {
  switch (nodes.geometry()) {
    case Geometry::Line:
      return PotentialContext(std::move(nodes), PotentialVariant::LinePotential, tol);
    case Geometry::Circle:
      return PotentialContext(std::move(nodes), PotentialVariant::CirclePotential, tol);
    case Geometry::General:
      break;
  }
  throw InvalidInput("PotentialContext: general geometry has no potential variant");
}

Complex phi(const PotentialContext& ctx, Complex z) {
  const WeightedNodeSet& s = ctx.nodes();
  s.require_off_nodes(z);
  const Eigen::Index n = s.size();
  Eigen::VectorXcd terms(n);
  if (ctx.is_line()) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const Complex g = s.gamma()(k);
      terms(k) = s.v()(k) * (1.0 / (g - z) - g / (1.0 + g.real() * g.real()));
    }
  } else {
    for (Eigen::Index k = 0; k < n; ++k) {
      const Complex g = s.gamma()(k);
      terms(k) = Complex(0.0, 0.5) * s.v()(k) * (g + z) / (g - z);
    }
  }
  return pairwise_sum(terms);
}

Complex phi_derivative(const PotentialContext& ctx, Complex z) {
  const WeightedNodeSet& s = ctx.nodes();
  s.require_off_nodes(z);
  if (ctx.is_line()) {
    const Eigen::Index n = s.size();
    Eigen::VectorXcd terms(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const Complex d = s.gamma()(k) - z;
      terms(k) = s.v()(k) / (d * d);
    }
    return pairwise_sum(terms);
  }
  if (std::abs(std::abs(z) - 1.0) > ctx.tolerances().on_circle)
    throw NotOnCircle("circle-variant derivative is tangential; point must sit on the unit circle");
  const Eigen::ArrayXd terms = s.v().array() / (s.gamma().array() - z).abs2();
  return Complex(pairwise_sum(terms.matrix()), 0.0);
}

double herglotz_check(const PotentialContext& ctx, Complex z) {
  if (ctx.is_line()) {
    if (!(z.imag() > 0.0)) throw OutOfDomain("herglotz_check: need Im z > 0 on the line");
  } else {
    if (!(std::abs(z) < 1.0)) throw OutOfDomain("herglotz_check: need |z| < 1 on the circle");
  }
  return phi(ctx, z).imag();
}

double phi_on_line(const PotentialContext& ctx, double x) {
  if (!ctx.is_line()) throw InvalidInput("phi_on_line: circle context");
  const WeightedNodeSet& s = ctx.nodes();
  s.require_off_nodes(Complex(x, 0.0));
  const Eigen::ArrayXd g = s.gamma().real().array();
  const Eigen::ArrayXd terms = s.v().array() / (g - x);
  return pairwise_sum(terms.matrix()) - ctx.regularizer();
}

double phi_on_circle(const PotentialContext& ctx, double theta) {
  if (ctx.is_line()) throw InvalidInput("phi_on_circle: line context");
  const WeightedNodeSet& s = ctx.nodes();
  const Eigen::Index n = s.size();
  // (i/2)(gamma+z)/(gamma-z) = -(1/2) cot((theta - theta_n)/2) on |z|=1.
  Eigen::VectorXd terms(n);
  for (Eigen::Index k = 0; k < n; ++k)
    terms(k) = -0.5 * s.v()(k) / std::tan(0.5 * (theta - ctx.node_angles()(k)));
  return pairwise_sum(terms);
}

double phi_derivative_on_circle(const PotentialContext& ctx, double theta) {
  if (ctx.is_line()) throw InvalidInput("phi_derivative_on_circle: line context");
  const WeightedNodeSet& s = ctx.nodes();
  const Eigen::Index n = s.size();
  Eigen::VectorXd terms(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double h = std::sin(0.5 * (theta - ctx.node_angles()(k)));
    terms(k) = 0.25 * s.v()(k) / (h * h);
  }
  return pairwise_sum(terms);
}

}  // namespace hilbert
