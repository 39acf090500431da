// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hilbert/levelset.hpp"
#include "support.hpp"

using namespace hilbert;

namespace {

PotentialContext symmetric_pair() {
  Eigen::VectorXd g(2), v(2);
  g << -1.0, 1.0;
  v << 1.0, 1.0;
  return PotentialContext::for_set(WeightedNodeSet::line(g, v));
}

PotentialContext single_node() {
  Eigen::VectorXd g(1), v(1);
  g << 0.0;
  v << 1.0;
  return PotentialContext::for_set(WeightedNodeSet::line(g, v));
}

PotentialContext cube_roots() {
  Eigen::VectorXcd g(3);
  Eigen::VectorXd v(3);
  for (int k = 0; k < 3; ++k) {
    g(k) = std::polar(1.0, 2.0 * M_PI * k / 3.0);
    v(k) = 2.0 / 3.0;
  }
  return PotentialContext::for_set(WeightedNodeSet::circle(g, v));
}

}  // namespace

TEST_CASE("exceptional alpha") {
  CHECK(*exceptional_alpha(symmetric_pair()) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(*exceptional_alpha(single_node()) == doctest::Approx(0.0).epsilon(1e-15));

  Eigen::VectorXd g(1), v(1);
  g << 1.0;
  v << 2.0;
  const PotentialContext ctx = PotentialContext::for_set(WeightedNodeSet::line(g, v));
  CHECK(*exceptional_alpha(ctx) == doctest::Approx(-1.0).epsilon(1e-15));

  // agree with the boundary limit of phi evaluated far out
  for (double x : {1e3, 1e4, 1e5, 1e6})
    CHECK(phi(ctx, Complex(x, 0.0)).real() ==
          doctest::Approx(-1.0).epsilon(10.0 / x));

  CHECK(!exceptional_alpha(cube_roots()).has_value());
}

TEST_CASE("level set of a single node") {
  const LevelSet ls = solve_level_set(single_node(), 1.0);
  REQUIRE(ls.size() == 1);
  CHECK(!ls.exceptional);
  CHECK(ls.lambdas(0).real() == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ls.weights(0) == doctest::Approx(1.0).epsilon(1e-13));

  // alpha equal to the boundary limit: the only root disappears.
  const LevelSet empty = solve_level_set(single_node(), 0.0);
  CHECK(empty.exceptional);
  CHECK(empty.size() == 0);
}

TEST_CASE("level set of the symmetric pair at alpha = 1") {
  // Oracle: phi(x) = -2x/(x^2-1) = 1 means x^2 + 2x - 1 = 0, so the roots
  // are -1 +- sqrt 2 with weights 1/phi' evaluated in extended precision.
  const long double r0 = -1.0L - std::sqrt(2.0L), r1 = -1.0L + std::sqrt(2.0L);
  const long double w0 = 1.0L / testsupport::star_sum_ref({-1.0L, 1.0L}, {1.0L, 1.0L}, r0);
  const long double w1 = 1.0L / testsupport::star_sum_ref({-1.0L, 1.0L}, {1.0L, 1.0L}, r1);
  CHECK(static_cast<double>(r0) == doctest::Approx(-2.4142135623730951).epsilon(1e-15));
  CHECK(static_cast<double>(r1) == doctest::Approx(0.41421356237309515).epsilon(1e-15));
  CHECK(static_cast<double>(w0) == doctest::Approx(1.7071067811865475).epsilon(1e-15));
  CHECK(static_cast<double>(w1) == doctest::Approx(0.29289321881345248).epsilon(1e-15));

  const LevelSet ls = solve_level_set(symmetric_pair(), 1.0);
  REQUIRE(ls.size() == 2);
  CHECK(!ls.exceptional);
  CHECK(ls.lambdas(0).real() == doctest::Approx(static_cast<double>(r0)).epsilon(1e-13));
  CHECK(ls.lambdas(1).real() == doctest::Approx(static_cast<double>(r1)).epsilon(1e-13));
  CHECK(ls.weights(0) == doctest::Approx(static_cast<double>(w0)).epsilon(1e-12));
  CHECK(ls.weights(1) == doctest::Approx(static_cast<double>(w1)).epsilon(1e-12));
  CHECK(ls.residuals.maxCoeff() <= 1e-12 * 2.0);
}

TEST_CASE("level set of the symmetric pair at alpha = 0 is exceptional") {
  const LevelSet ls = solve_level_set(symmetric_pair(), 0.0);
  REQUIRE(ls.size() == 1);
  CHECK(ls.exceptional);
  CHECK(std::abs(ls.lambdas(0).real()) < 1e-12);
  CHECK(ls.weights(0) == doctest::Approx(0.5).epsilon(1e-13));

  // Scan of phi outside the hull: no sign change against alpha = 0 anywhere,
  // confirming there is no root beyond the nodes.
  const PotentialContext ctx = symmetric_pair();
  for (double x = 1.5; x < 1e6; x *= 2.0) {
    CHECK(phi_on_line(ctx, x) < 0.0);
    CHECK(phi_on_line(ctx, -x) > 0.0);
  }
}

TEST_CASE("circle level set: cube roots of unity at alpha = 0") {
  // phi = i(1+z^3)/(1-z^3) vanishes exactly at z^3 = -1.
  const LevelSet ls = solve_level_set(cube_roots(), 0.0);
  REQUIRE(ls.size() == 3);
  CHECK(!ls.exceptional);
  for (Eigen::Index j = 0; j < 3; ++j) {
    const Complex cube = std::pow(ls.lambdas(j), 3);
    CHECK(std::abs(cube - Complex(-1.0, 0.0)) < 1e-13);
    CHECK(std::abs(std::abs(ls.lambdas(j)) - 1.0) < 1e-15);
  }
  const double expected_angle0 = M_PI / 3.0;
  CHECK(std::arg(ls.lambdas(0)) == doctest::Approx(expected_angle0).epsilon(1e-13));
}

TEST_CASE("level sets interlace the nodes") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto set = testsupport::random_line_set(rng, 12);
    const PotentialContext ctx = PotentialContext::for_set(set);
    const double alpha = testsupport::random_regular_alpha(rng, ctx);
    const LevelSet ls = solve_level_set(ctx, alpha);
    REQUIRE(ls.size() == 12);

    std::vector<double> merged;
    for (Eigen::Index k = 0; k < 12; ++k) merged.push_back(set.gamma_real()(k));
    std::sort(merged.begin(), merged.end());
    const Eigen::VectorXd lam = ls.lambdas_real();
    // strict alternation of the sorted merge
    std::vector<std::pair<double, int>> tagged;
    for (double x : merged) tagged.emplace_back(x, 0);
    for (Eigen::Index k = 0; k < lam.size(); ++k) tagged.emplace_back(lam(k), 1);
    std::sort(tagged.begin(), tagged.end());
    for (size_t k = 1; k < tagged.size(); ++k) CHECK(tagged[k].second != tagged[k - 1].second);
  }

  // circle: alternation around the full circle
  for (int trial = 0; trial < 10; ++trial) {
    const auto set = testsupport::random_circle_set(rng, 9);
    const PotentialContext ctx = PotentialContext::for_set(set);
    std::uniform_real_distribution<double> alpha_pick(-5.0, 5.0);
    const LevelSet ls = solve_level_set(ctx, alpha_pick(rng));
    REQUIRE(ls.size() == 9);
    std::vector<std::pair<double, int>> tagged;
    const Eigen::VectorXd th = set.gamma_angles();
    for (Eigen::Index k = 0; k < th.size(); ++k) tagged.emplace_back(th(k), 0);
    for (Eigen::Index k = 0; k < ls.size(); ++k) {
      double a = std::arg(ls.lambdas(k));
      if (a < 0) a += 2.0 * M_PI;
      tagged.emplace_back(a, 1);
    }
    std::sort(tagged.begin(), tagged.end());
    for (size_t k = 1; k < tagged.size(); ++k) CHECK(tagged[k].second != tagged[k - 1].second);
    CHECK(tagged.front().second != tagged.back().second);  // wrap-around
  }
}

TEST_CASE("level-set residuals, weights and orthogonality identities") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 6; ++trial) {
    const bool on_circle = trial % 2 == 1;
    const auto set = on_circle ? testsupport::random_circle_set(rng, 15)
                               : testsupport::random_line_set(rng, 15);
    const PotentialContext ctx = PotentialContext::for_set(set);
    const double alpha = testsupport::random_regular_alpha(rng, ctx);
    const LevelSet ls = solve_level_set(ctx, alpha);

    CHECK(ls.residuals.maxCoeff() <= 1e-12 * (1.0 + std::abs(alpha)));

    for (Eigen::Index j = 0; j < ls.size(); ++j) {
      // w_j = kernel_weight(lambda_j), and w_j * phi'(lambda_j) = 1
      CHECK(ls.weights(j) ==
            doctest::Approx(kernel_weight(set, ls.lambdas(j))).epsilon(1e-10));
      const double deriv = phi_derivative(ctx, ls.lambdas(j)).real();
      CHECK(ls.weights(j) * deriv == doctest::Approx(1.0).epsilon(1e-9));
    }

    // Orthogonality of the kernel columns. On the line the witness is the
    // telescoping sum v_n (lambda-mu)/((mu-gamma_n)(lambda-gamma_n)) =
    // phi(lambda) - phi(mu) = 0; on the circle the inner product carries a
    // conjugate and is checked in normalized form.
    for (Eigen::Index a = 0; a + 1 < ls.size(); a += 3) {
      const Complex lam = ls.lambdas(a), mu = ls.lambdas(a + 1);
      if (!on_circle) {
        Complex sum = 0.0;
        for (Eigen::Index n = 0; n < set.size(); ++n) {
          const Complex g = set.gamma()(n);
          sum += set.v()(n) * (lam - mu) / ((mu - g) * (lam - g));
        }
        CHECK(std::abs(sum) <= 1e-9 * (1.0 + std::abs(lam - mu)));
      } else {
        Complex sum = 0.0;
        for (Eigen::Index n = 0; n < set.size(); ++n) {
          const Complex g = set.gamma()(n);
          sum += set.v()(n) / ((lam - g) * std::conj(mu - g));
        }
        CHECK(std::abs(sum) * std::sqrt(ls.weights(a) * ls.weights(a + 1)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("bounded-gap roots move monotonically with alpha") {
  std::mt19937_64 rng(41);
  const auto set = testsupport::random_line_set(rng, 10);
  const PotentialContext ctx = PotentialContext::for_set(set);
  for (int k = 0; k < 8; ++k) {
    double a1 = testsupport::random_regular_alpha(rng, ctx);
    double a2 = testsupport::random_regular_alpha(rng, ctx);
    if (a1 > a2) std::swap(a1, a2);
    const LevelSet l1 = solve_level_set(ctx, a1), l2 = solve_level_set(ctx, a2);
    // compare per bounded gap: anchored roots sorted; skip the unbounded one
    Eigen::VectorXd g = set.gamma_real();
    std::sort(g.data(), g.data() + g.size());
    for (Eigen::Index i = 0; i + 1 < g.size(); ++i) {
      auto in_gap = [&](const LevelSet& ls) {
        for (Eigen::Index j = 0; j < ls.size(); ++j)
          if (ls.lambdas(j).real() > g(i) && ls.lambdas(j).real() < g(i + 1))
            return ls.lambdas(j).real();
        return std::numeric_limits<double>::quiet_NaN();
      };
      const double r1 = in_gap(l1), r2 = in_gap(l2);
      REQUIRE(std::isfinite(r1));
      REQUIRE(std::isfinite(r2));
      if (a1 < a2) CHECK(r1 < r2);
    }
  }
}

TEST_CASE("herglotz decomposition of the single node") {
  // 1/(1 - phi) with phi = -1/z is z/(z+1) = 1 - 1/(z+1); the symbolic
  // partial fraction has one atom of mass 1 at -1 (the -lambda/(1+lambda^2)
  // regularizer shifts the constant to b = 1/2).
  const HerglotzDecomposition d = herglotz_decompose(single_node(), 1.0);
  CHECK(d.c == 0.0);
  REQUIRE(d.lambdas.size() == 1);
  CHECK(d.lambdas(0) == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(d.weights(0) == doctest::Approx(1.0).epsilon(1e-13));
  // b: 1 - w*lambda/(1+lambda^2) at infinity must match 1/(1-phi) -> 1.
  CHECK(d.b == doctest::Approx(0.5).epsilon(1e-12));

  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> re(-20.0, 20.0), im(0.1, 10.0);
  for (int k = 0; k < 50; ++k) {
    const Complex z(re(rng), im(rng));
    const Complex lhs = z / (z + 1.0);
    const Complex rhs = evaluate_decomposition(d, z);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("herglotz decomposition at the exceptional alpha") {
  const PotentialContext ctx = symmetric_pair();
  const HerglotzDecomposition d = herglotz_decompose(ctx, 0.0);
  CHECK(d.exceptional);
  CHECK(d.c == doctest::Approx(0.5).epsilon(1e-15));
  REQUIRE(d.lambdas.size() == 1);

  // Oracle for c: the linear coefficient is the limit of
  // 1/(iy (alpha - phi(iy))) as y grows.
  for (double y : {1e4, 1e6}) {
    const Complex iy(0.0, y);
    const Complex est = 1.0 / (iy * (0.0 - phi(ctx, iy)));
    CHECK(std::abs(est - Complex(d.c, 0.0)) < 10.0 / y);
  }

  // exact identity: 1/(0 - phi) = (z^2-1)/(2z) = z/2 - 1/(2z)
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> re(-20.0, 20.0), im(0.1, 10.0);
  for (int k = 0; k < 50; ++k) {
    const Complex z(re(rng), im(rng));
    const Complex lhs = (z * z - 1.0) / (2.0 * z);
    CHECK(std::abs(lhs - evaluate_decomposition(d, z)) <= 1e-12 * (1.0 + std::abs(lhs)));
  }

  // N = 1 exceptional case is the pure linear term: 1/(0-phi) = z.
  const HerglotzDecomposition d1 = herglotz_decompose(single_node(), 0.0);
  CHECK(d1.exceptional);
  CHECK(d1.c == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d1.lambdas.size() == 0);
  CHECK(std::abs(d1.b) < 1e-12);
}

TEST_CASE("decomposition atoms are the level set") {
  const PotentialContext ctx = symmetric_pair();
  const HerglotzDecomposition d = herglotz_decompose(ctx, 1.0);
  CHECK(d.c == 0.0);
  REQUIRE(d.lambdas.size() == 2);
  CHECK(d.lambdas(0) == doctest::Approx(-2.4142135623730951).epsilon(1e-13));
  CHECK(d.lambdas(1) == doctest::Approx(0.41421356237309515).epsilon(1e-13));
  CHECK(d.weights(0) == doctest::Approx(1.7071067811865475).epsilon(1e-12));
  CHECK(d.weights(1) == doctest::Approx(0.29289321881345248).epsilon(1e-12));
}

TEST_CASE("decomposition identity on random instances") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 5; ++trial) {
    const auto set = testsupport::random_line_set(rng, 20);
    const PotentialContext ctx = PotentialContext::for_set(set);
    const double alpha = testsupport::random_regular_alpha(rng, ctx);
    const HerglotzDecomposition d = herglotz_decompose(ctx, alpha);
    CHECK(d.c == 0.0);
    std::uniform_real_distribution<double> re(-20.0, 20.0), im(0.1, 10.0);
    for (int k = 0; k < 200; ++k) {
      const Complex z(re(rng), im(rng));
      const Complex lhs = 1.0 / (alpha - phi(ctx, z));
      const Complex rhs = evaluate_decomposition(d, z);
      CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
    }
  }
  // circle contexts are rejected
  CHECK_THROWS_AS(herglotz_decompose(cube_roots(), 0.5), InvalidInput);
}
