// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HILBERT_GEOMETRY_HPP
#define HILBERT_GEOMETRY_HPP

#include "hilbert/levelset.hpp"

namespace hilbert {

/// Where a point family lives: a line (point + unit direction), a circle
/// (center + radius), or neither.
struct LocusClassification {
  enum class Kind { Line, Circle, Indeterminate };
  Kind kind = Kind::Indeterminate;
  Complex point{};       // Line
  Complex direction{};   // Line, unit modulus
  Complex center{};      // Circle
  double radius = 0.0;   // Circle, > 0
  std::string reason;    // Indeterminate
  double max_deviation = 0.0;
};

std::string to_string(LocusClassification::Kind k);

/// The squared cross ratio ((lj-gm)(ll-gn) / ((lj-gn)(ll-gm)))^2.
/// Real exactly when the four points are concyclic or collinear.
/// Throws DegenerateQuadruple on coincident points.
Complex cross_ratio_square(Complex lj, Complex ll, Complex gn, Complex gm);

/// Fits the circle or line determined by the first affinely independent
/// triple and verifies every remaining point against it within tol
/// (perpendicular distance for a line, |dist - radius| for a circle).
LocusClassification localize(const Eigen::VectorXcd& points, double tol);

/// Runs localize over the union of nodes and level-set points with
/// tol = locus_rel x data diameter. Never Indeterminate when the transform
/// over the same data certifies as unitary.
LocusClassification certify_localization(const WeightedNodeSet& s, const LevelSet& ls,
                                         const Tolerances& tol = default_tolerances());

}  // namespace hilbert

#endif  // HILBERT_GEOMETRY_HPP
