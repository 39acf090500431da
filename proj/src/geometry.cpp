// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#include "hilbert/geometry.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace hilbert {

std::string to_string(LocusClassification::Kind k) {
  switch (k) {
    case LocusClassification::Kind::Line: return "line";
    case LocusClassification::Kind::Circle: return "circle";
    case LocusClassification::Kind::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

Complex cross_ratio_square(Complex lj, Complex ll, Complex gn, Complex gm) {
  const Complex pts[4] = {lj, ll, gn, gm};
  double scale = 0.0;
  for (const Complex& p : pts) scale = std::max(scale, std::abs(p));
  scale = std::max(scale, 1.0);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (std::abs(pts[a] - pts[b]) <= 1e-15 * scale)
        throw DegenerateQuadruple("cross ratio needs four pairwise distinct points");
  const Complex r = ((lj - gm) * (ll - gn)) / ((lj - gn) * (ll - gm));
  return r * r;
}

namespace {

double diameter(const Eigen::VectorXcd& pts) {
  double d = 0.0;
  for (Eigen::Index a = 0; a < pts.size(); ++a)
    for (Eigen::Index b = a + 1; b < pts.size(); ++b)
      d = std::max(d, std::abs(pts(a) - pts(b)));
  return d;
}

// Twice the signed triangle area.
double cross2(Complex u, Complex w) { return u.real() * w.imag() - u.imag() * w.real(); }

}  // namespace

LocusClassification localize(const Eigen::VectorXcd& points, double tol) {
  if (points.size() < 3) throw TooFewPoints("localize: need at least 3 points");
  const double diam = diameter(points);
  if (diam == 0.0) throw TooFewPoints("localize: points are all coincident");

  const Complex p0 = points(0);
  // Second seed: first point at a workable distance from p0.
  Eigen::Index i1 = -1;
  for (Eigen::Index k = 1; k < points.size(); ++k)
    if (std::abs(points(k) - p0) > 1e-14 * diam) { i1 = k; break; }
  if (i1 < 0) throw TooFewPoints("localize: points are not pairwise distinct");
  const Complex p1 = points(i1);

  // Third seed: first point affinely independent of (p0, p1). A triangle
  // flatter than 1e-10 of the local diameter squared counts as collinear.
  Eigen::Index i2 = -1;
  for (Eigen::Index k = 1; k < points.size(); ++k) {
    if (k == i1) continue;
    const double local = std::max({std::abs(points(k) - p0), std::abs(p1 - p0), 1e-300});
    if (std::abs(cross2(p1 - p0, points(k) - p0)) / (local * local) >= 1e-10) { i2 = k; break; }
  }

  LocusClassification out;
  if (i2 < 0) {
    // All points collinear with (p0, p1): candidate line.
    const Complex dir = (p1 - p0) / std::abs(p1 - p0);
    out.kind = LocusClassification::Kind::Line;
    out.point = p0;
    out.direction = dir;
    double worst = 0.0;
    for (Eigen::Index k = 0; k < points.size(); ++k)
      worst = std::max(worst, std::abs(cross2(dir, points(k) - p0)));
    out.max_deviation = worst;
    if (worst > tol) {
      out.kind = LocusClassification::Kind::Indeterminate;
      out.reason = "a point leaves the line spanned by the seed pair";
    }
    return out;
  }

  // Circumcircle of the seed triple via the perpendicular-bisector system.
  const Complex p2 = points(i2);
  Eigen::Matrix2d a;
  Eigen::Vector2d rhs;
  a << 2.0 * (p1 - p0).real(), 2.0 * (p1 - p0).imag(),
       2.0 * (p2 - p0).real(), 2.0 * (p2 - p0).imag();
  rhs << std::norm(p1) - std::norm(p0), std::norm(p2) - std::norm(p0);
  const Eigen::Vector2d c = a.colPivHouseholderQr().solve(rhs);
  const Complex center(c(0), c(1));
  const double radius = std::abs(p0 - center);

  out.kind = LocusClassification::Kind::Circle;
  out.center = center;
  out.radius = radius;
  double worst = 0.0;
  for (Eigen::Index k = 0; k < points.size(); ++k)
    worst = std::max(worst, std::abs(std::abs(points(k) - center) - radius));
  out.max_deviation = worst;
  if (worst > tol) {
    out.kind = LocusClassification::Kind::Indeterminate;
    out.reason = "a point leaves the circle through the seed triple";
  }
  return out;
}

LocusClassification certify_localization(const WeightedNodeSet& s, const LevelSet& ls,
                                         const Tolerances& tol) {
  Eigen::VectorXcd pts(s.size() + ls.size());
  pts.head(s.size()) = s.gamma();
  pts.tail(ls.size()) = ls.lambdas;
  return localize(pts, tol.locus_rel * diameter(pts));
}

}  // namespace hilbert
