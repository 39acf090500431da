// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hilbert/geometry.hpp"
#include "hilbert/transform.hpp"
#include "support.hpp"

using namespace hilbert;

TEST_CASE("cross ratio square on concrete quadruples") {
  // collinear reals: ((2-3)(4-1)/((2-1)(4-3)))^2 = 9
  const Complex r = cross_ratio_square({2, 0}, {4, 0}, {1, 0}, {3, 0});
  CHECK(r.real() == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(r.imag() == 0.0);

  // concyclic points on the unit circle give a real value
  const Complex c = cross_ratio_square({1, 0}, {0, 1}, {-1, 0}, {0, -1});
  CHECK(std::abs(c.imag()) <= 1e-15 * std::abs(c));

  // a generic quadruple is neither collinear nor concyclic
  const Complex g = cross_ratio_square({0, 0}, {1, 0}, {0, 1}, {2, 2});
  CHECK(std::abs(g.imag()) > 0.01);

  CHECK_THROWS_AS(cross_ratio_square({1, 0}, {1, 0}, {0, 1}, {2, 2}), DegenerateQuadruple);
}

TEST_CASE("cross ratio square is Moebius invariant") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng)), d(u(rng), u(rng));
    if (std::abs(a * d - b * c) < 0.1) continue;
    Complex p[4];
    for (Complex& x : p) x = Complex(u(rng), u(rng));
    bool skip = false;
    for (int i = 0; i < 4 && !skip; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (std::abs(p[i] - p[j]) < 1e-3) skip = true;
    for (int i = 0; i < 4; ++i)
      if (std::abs(c * p[i] + d) < 0.05) skip = true;
    if (skip) continue;
    const Complex before = cross_ratio_square(p[0], p[1], p[2], p[3]);
    Complex q[4];
    for (int i = 0; i < 4; ++i) q[i] = (a * p[i] + b) / (c * p[i] + d);
    const Complex after = cross_ratio_square(q[0], q[1], q[2], q[3]);
    CHECK(std::abs(before - after) <= 1e-10 * (1.0 + std::abs(before)));
  }
}

TEST_CASE("cross ratio square is real on sampled circles and lines") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI), pos(-5.0, 5.0);
  const Complex center(pos(rng), pos(rng));
  const double radius = 1.0 + std::abs(pos(rng));
  for (int k = 0; k < 40; ++k) {
    Complex p[4];
    for (Complex& x : p) x = center + std::polar(radius, ang(rng));
    bool skip = false;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (std::abs(p[i] - p[j]) < 1e-2) skip = true;
    if (skip) continue;
    const Complex r = cross_ratio_square(p[0], p[1], p[2], p[3]);
    CHECK(std::abs(r.imag()) <= 1e-12 * std::abs(r));
  }
  const Complex dir = std::polar(1.0, ang(rng));
  for (int k = 0; k < 40; ++k) {
    Complex p[4];
    for (Complex& x : p) x = center + pos(rng) * dir;
    bool skip = false;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (std::abs(p[i] - p[j]) < 1e-2) skip = true;
    if (skip) continue;
    const Complex r = cross_ratio_square(p[0], p[1], p[2], p[3]);
    CHECK(std::abs(r.imag()) <= 1e-12 * std::abs(r));
  }
}

TEST_CASE("localize classifies lines, circles and neither") {
  Eigen::VectorXcd pts(5);
  for (int k = 0; k < 5; ++k) pts(k) = Complex(k, 0.0);
  const LocusClassification line = localize(pts, 1e-9);
  CHECK(line.kind == LocusClassification::Kind::Line);
  CHECK(std::abs(line.direction) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(line.max_deviation == 0.0);

  Eigen::VectorXcd circ(5);
  circ << Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1),
      Complex(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
  const LocusClassification circle = localize(circ, 1e-9);
  CHECK(circle.kind == LocusClassification::Kind::Circle);
  CHECK(std::abs(circle.center) <= 1e-12);
  CHECK(circle.radius == doctest::Approx(1.0).epsilon(1e-12));

  Eigen::VectorXcd bad(4);
  bad << Complex(0, 0), Complex(1, 0), Complex(0, 1), Complex(1.1, 1.1);
  const LocusClassification ind = localize(bad, 1e-9);
  CHECK(ind.kind == LocusClassification::Kind::Indeterminate);

  CHECK_THROWS_AS(localize(Eigen::VectorXcd(2), 1e-9), TooFewPoints);
}

TEST_CASE("localize is permutation invariant") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
  Eigen::VectorXcd pts(9);
  const Complex center(0.7, -0.3);
  for (int k = 0; k < 9; ++k) pts(k) = center + std::polar(2.5, ang(rng));
  const LocusClassification base = localize(pts, 1e-9);
  REQUIRE(base.kind == LocusClassification::Kind::Circle);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXcd shuffled = pts;
    std::shuffle(shuffled.data(), shuffled.data() + shuffled.size(), rng);
    const LocusClassification got = localize(shuffled, 1e-9);
    CHECK(got.kind == base.kind);
    CHECK(std::abs(got.center - base.center) <= 1e-9);
    CHECK(got.radius == doctest::Approx(base.radius).epsilon(1e-9));
  }
}

TEST_CASE("certified instances localize onto their carrier") {
  std::mt19937_64 rng(73);
  const auto line_set = testsupport::random_line_set(rng, 14);
  const PotentialContext lctx = PotentialContext::for_set(line_set);
  const LevelSet lls = solve_level_set(lctx, testsupport::random_regular_alpha(rng, lctx));
  REQUIRE(unitarity_report(build(line_set, lls)).verdict == Verdict::Unitary);
  const LocusClassification lc = certify_localization(line_set, lls);
  CHECK(lc.kind == LocusClassification::Kind::Line);
  CHECK(std::abs(lc.direction.imag()) <= 1e-12);

  const auto circ_set = testsupport::random_circle_set(rng, 11);
  const PotentialContext cctx = PotentialContext::for_set(circ_set);
  std::uniform_real_distribution<double> alpha_pick(-5.0, 5.0);
  const LevelSet cls = solve_level_set(cctx, alpha_pick(rng));
  REQUIRE(unitarity_report(build(circ_set, cls)).verdict == Verdict::Unitary);
  const LocusClassification cc = certify_localization(circ_set, cls);
  CHECK(cc.kind == LocusClassification::Kind::Circle);
  CHECK(std::abs(cc.center) <= 1e-9);
  CHECK(cc.radius == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("perturbing one sampling point breaks both certificates") {
  std::mt19937_64 rng(79);
  const auto set = testsupport::random_line_set(rng, 8);
  const PotentialContext ctx = PotentialContext::for_set(set);
  const LevelSet ls = solve_level_set(ctx, testsupport::random_regular_alpha(rng, ctx));

  // nudge an interior root (the unbounded one may sit far out, where an
  // absolute 1e-3 shift is a negligible relative perturbation)
  Eigen::Index pick = 0;
  for (Eigen::Index j = 0; j < ls.size(); ++j)
    if (ls.lambdas(j).real() > set.gamma().real().minCoeff() &&
        ls.lambdas(j).real() < set.gamma().real().maxCoeff()) {
      pick = j;
      break;
    }
  Eigen::VectorXcd nudged = ls.lambdas;
  nudged(pick) += Complex(0.0, 1e-3);
  const LevelSet bad = LevelSet::from_points(set, nudged, ls.alpha);

  const UnitarityReport r = unitarity_report(build(set, bad));
  CHECK(r.verdict != Verdict::Unitary);

  const LocusClassification locus = certify_localization(set, bad);
  CHECK(locus.kind == LocusClassification::Kind::Indeterminate);

  // some quadruple through the nudged point has a visibly nonreal
  // squared cross ratio
  double worst = 0.0;
  for (Eigen::Index a = 0; a < bad.size(); ++a) {
    if (a == pick) continue;
    for (Eigen::Index n = 0; n + 1 < set.size(); n += 2)
      worst = std::max(worst,
                       std::abs(cross_ratio_square(bad.lambdas(pick), bad.lambdas(a),
                                                   set.gamma()(n), set.gamma()(n + 1))
                                    .imag()));
  }
  CHECK(worst > 1e-6);
}
