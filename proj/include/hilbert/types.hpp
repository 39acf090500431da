// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HILBERT_TYPES_HPP
#define HILBERT_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace hilbert {

using Real = double;
using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

enum class Geometry { Line, Circle, General };

std::string to_string(Geometry g);
Geometry geometry_from_string(const std::string& s);

/// Tunable tolerances. Every knob is surfaced on the CLI and echoed in
/// reports; the defaults here are the normative ones.
struct Tolerances {
  double dedup_rel = 1e-12;        // node distinctness, x max(1, data scale)
  double level_tol = 1e-12;        // |phi(lambda)-alpha| <= level_tol*(1+|alpha|)
  double exc_rel = 1e-9;           // exceptional alpha: |alpha-alpha*| <= exc_rel*(1+|alpha*|)
  double unit_rel = 1e-9;          // unitarity: dev <= unit_rel*max(rows,cols)
  double locus_rel = 1e-9;         // localization: tol = locus_rel*diameter
  double on_circle = 1e-10;        // ||z|-1| for boundary-only operations
  double decomposition_tol = 1e-9; // partial-fraction residual, x (1+|lhs|)
  double quadrature_drift = 1e-8;  // Gram change allowed when doubling M
  int quadrature_factor = 64;      // default M = factor * N
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input/domain violations.
struct InvalidInput : Error { using Error::Error; };
struct PointOnGamma : Error { using Error::Error; };
struct NotOnCircle : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct Overlap : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct DegenerateQuadruple : Error { using Error::Error; };
struct TooFewPoints : Error { using Error::Error; };
struct AtOne : Error { using Error::Error; };
struct BetaEqualsOne : Error { using Error::Error; };
struct SingularPair : Error { using Error::Error; };
struct UnknownDemo : Error { using Error::Error; };

// Certification failures.
struct DecompositionResidual : Error { using Error::Error; };
struct BasisNotCertified : Error { using Error::Error; };
struct QuadratureUnresolved : Error { using Error::Error; };

}  // namespace hilbert

#endif  // HILBERT_TYPES_HPP
