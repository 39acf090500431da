// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#include "hilbert/levelset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "hilbert/summation.hpp"

namespace hilbert {

namespace {

// One root in anchored coordinates: lambda = reference(anchor) + offset.
struct AnchoredRoot {
  int anchor = -1;
  double offset = 0.0;
  double residual = 0.0;
};

// Bisection until the bracket shrinks to 1e-3 of the gap, then safeguarded
// Newton, on a function that increases from -inf to +inf across the open
// bracket (lo, hi). Pure Newton is unsafe here because the poles sit at the
// bracket ends. F and dF work in offset coordinates relative to the chosen
// anchor; F is evaluated with compensation so a residual below
// level_tol*(1+|alpha|) is certifiable despite cancellation.
template <typename F, typename DF>
std::pair<double, double> polish_root(F&& f, DF&& df, double lo, double hi,
                                      double stop) {
  double ta = lo, tb = hi;
  const double width = tb - ta;
  double t = 0.5 * (ta + tb);
  double ft = f(t);
  while (tb - ta > 1e-3 * width && std::abs(ft) > stop) {
    if (ft < 0.0) ta = t; else tb = t;
    const double mid = 0.5 * (ta + tb);
    if (mid == t) break;
    t = mid;
    ft = f(t);
  }
  double best_t = t, best_f = std::abs(ft);
  // A small residual does not yet pin the root where the derivative is
  // small (the position error is residual/phi'), so after the residual
  // criterion fires take a couple more Newton steps.
  int extra = 2;
  for (int it = 0; it < 200; ++it) {
    if (ft < 0.0) ta = t; else tb = t;
    if (std::abs(ft) <= stop && extra-- <= 0) break;
    double tn = t - ft / df(t);
    if (!(tn > ta && tn < tb)) tn = 0.5 * (ta + tb);
    if (tn == t) break;  // bracket at ulp resolution
    t = tn;
    ft = f(t);
    if (std::abs(ft) < best_f) { best_f = std::abs(ft); best_t = t; }
  }
  if (std::abs(ft) <= best_f) { best_f = std::abs(ft); best_t = t; }
  return {best_t, best_f};
}

struct LineSolver {
  const PotentialContext& ctx;
  Eigen::VectorXd g;            // node positions, original order
  Eigen::VectorXd v;
  std::vector<int> order;       // ascending node order
  double alpha;
  double shift;                 // regularizer + alpha, subtracted inside F

  LineSolver(const PotentialContext& c, double a)
      : ctx(c), g(c.nodes().gamma_real()), v(c.nodes().v()), alpha(a),
        shift(c.regularizer() + a) {
    order.resize(static_cast<size_t>(g.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return g(i) < g(j); });
  }

  // phi(gamma[anchor] + tau) - alpha, compensated.
  double f_at(int anchor, double tau) const {
    const Eigen::Index n = g.size();
    Eigen::VectorXd terms(n + 1);
    for (Eigen::Index k = 0; k < n; ++k) terms(k) = v(k) / ((g(k) - g(anchor)) - tau);
    terms(n) = -shift;
    return compensated_sum(terms);
  }

  double df_at(int anchor, double tau) const {
    const Eigen::Index n = g.size();
    Eigen::VectorXd terms(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const double d = (g(k) - g(anchor)) - tau;
      terms(k) = v(k) / (d * d);
    }
    return pairwise_sum(terms);
  }

  AnchoredRoot solve_between(int lo_idx, int hi_idx, double stop) const {
    const double lo = g(lo_idx), hi = g(hi_idx);
    const double mid = 0.5 * (lo + hi);
    // Anchor to the near endpoint so the offset never cancels against the
    // far pole: |tau| <= half the gap.
    const bool right_half = f_at(lo_idx, mid - lo) < 0.0;
    const int anchor = right_half ? hi_idx : lo_idx;
    const double ta = right_half ? mid - hi : 0.0;
    const double tb = right_half ? 0.0 : mid - lo;
    auto [t, res] = polish_root([&](double x) { return f_at(anchor, x); },
                                [&](double x) { return df_at(anchor, x); }, ta, tb, stop);
    return {anchor, t, res};
  }

  AnchoredRoot solve_unbounded(double alpha_star, double stop) const {
    const int lo_idx = order.front(), hi_idx = order.back();
    const double gmin = g(lo_idx), gmax = g(hi_idx);
    const double scale = std::max(1.0, gmax - gmin);
    if (alpha > alpha_star) {
      // phi increases from alpha_star to +inf on (-inf, gmin).
      double span = scale;
      for (int k = 0; k < 1100 && f_at(lo_idx, -span) >= 0.0; ++k) span *= 2.0;
      auto [t, res] = polish_root([&](double x) { return f_at(lo_idx, x); },
                                  [&](double x) { return df_at(lo_idx, x); },
                                  -span, 0.0, stop);
      return {lo_idx, t, res};
    }
    double span = scale;
    for (int k = 0; k < 1100 && f_at(hi_idx, span) <= 0.0; ++k) span *= 2.0;
    auto [t, res] = polish_root([&](double x) { return f_at(hi_idx, x); },
                                [&](double x) { return df_at(hi_idx, x); },
                                0.0, span, stop);
    return {hi_idx, t, res};
  }
};

struct CircleSolver {
  const PotentialContext& ctx;
  Eigen::VectorXd theta;        // node angles in [0, 2pi), original order
  Eigen::VectorXd v;
  std::vector<int> order;       // ascending angle order
  double alpha;

  CircleSolver(const PotentialContext& c, double a)
      : ctx(c), theta(c.node_angles()), v(c.nodes().v()), alpha(a) {
    order.resize(static_cast<size_t>(theta.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return theta(i) < theta(j); });
  }

  // phi(e^{i(theta[anchor]+tau)}) - alpha, compensated; cot terms are
  // 2pi-periodic so wrapped offsets need no reduction.
  double f_at(int anchor, double tau) const {
    const Eigen::Index n = theta.size();
    Eigen::VectorXd terms(n + 1);
    for (Eigen::Index k = 0; k < n; ++k)
      terms(k) = -0.5 * v(k) / std::tan(0.5 * (tau - (theta(k) - theta(anchor))));
    terms(n) = -alpha;
    return compensated_sum(terms);
  }

  double df_at(int anchor, double tau) const {
    const Eigen::Index n = theta.size();
    Eigen::VectorXd terms(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const double s = std::sin(0.5 * (tau - (theta(k) - theta(anchor))));
      terms(k) = 0.25 * v(k) / (s * s);
    }
    return pairwise_sum(terms);
  }

  // Arc from sorted node i to its successor (wrapping at the top).
  AnchoredRoot solve_arc(size_t i, double stop) const {
    const int lo_idx = order[i];
    const bool wrap = (i + 1 == order.size());
    const int hi_idx = wrap ? order[0] : order[i + 1];
    const double lo = theta(lo_idx);
    const double hi = theta(hi_idx) + (wrap ? 2.0 * M_PI : 0.0);
    const double mid = 0.5 * (lo + hi);
    const bool right_half = f_at(lo_idx, mid - lo) < 0.0;
    const int anchor = right_half ? hi_idx : lo_idx;
    const double aref = right_half ? hi : lo;  // anchor angle incl. wrap
    const double ta = right_half ? mid - aref : 0.0;
    const double tb = right_half ? 0.0 : mid - aref;
    auto [t, res] = polish_root([&](double x) { return f_at(anchor, x); },
                                [&](double x) { return df_at(anchor, x); }, ta, tb, stop);
    // Store the offset against the raw anchor angle.
    return {anchor, t + (aref - theta(anchor)), res};
  }
};

}  // namespace

Eigen::VectorXd LevelSet::lambdas_real() const {
  return lambdas.real();
}

LevelSet LevelSet::from_points(const WeightedNodeSet& s, const Eigen::VectorXcd& lambdas,
                               double alpha, bool exceptional) {
  LevelSet ls;
  ls.alpha = alpha;
  ls.geometry = s.geometry() == Geometry::Circle ? Geometry::Circle : Geometry::Line;
  ls.lambdas = lambdas;
  ls.exceptional = exceptional;
  ls.weights.resize(lambdas.size());
  for (Eigen::Index j = 0; j < lambdas.size(); ++j)
    ls.weights(j) = kernel_weight(s, lambdas(j));
  return ls;
}

std::optional<double> exceptional_alpha(const PotentialContext& ctx) {
  if (!ctx.is_line()) return std::nullopt;
  return -ctx.regularizer();
}

LevelSet solve_level_set(const PotentialContext& ctx, double alpha) {
  const Tolerances& tol = ctx.tolerances();
  const WeightedNodeSet& s = ctx.nodes();
  const Eigen::Index n = s.size();
  // Stop below the certified tolerance to leave verification headroom.
  const double stop = 0.5 * tol.level_tol * (1.0 + std::abs(alpha));

  LevelSet ls;
  ls.alpha = alpha;

  std::vector<AnchoredRoot> roots;
  if (ctx.is_line()) {
    ls.geometry = Geometry::Line;
    LineSolver solver(ctx, alpha);
    const double alpha_star = -ctx.regularizer();
    ls.exceptional = std::abs(alpha - alpha_star) <= tol.exc_rel * (1.0 + std::abs(alpha_star));
    roots.reserve(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i + 1 < n; ++i)
      roots.push_back(solver.solve_between(solver.order[static_cast<size_t>(i)],
                                           solver.order[static_cast<size_t>(i) + 1], stop));
    if (!ls.exceptional) roots.push_back(solver.solve_unbounded(alpha_star, stop));

    const Eigen::VectorXd g = s.gamma_real();
    std::sort(roots.begin(), roots.end(), [&](const AnchoredRoot& a, const AnchoredRoot& b) {
      return g(a.anchor) + a.offset < g(b.anchor) + b.offset;
    });
    const Eigen::Index m = static_cast<Eigen::Index>(roots.size());
    ls.lambdas.resize(m);
    ls.weights.resize(m);
    ls.anchors.resize(m);
    ls.offsets.resize(m);
    ls.residuals.resize(m);
    for (Eigen::Index j = 0; j < m; ++j) {
      const AnchoredRoot& r = roots[static_cast<size_t>(j)];
      ls.lambdas(j) = Complex(g(r.anchor) + r.offset, 0.0);
      ls.anchors(j) = r.anchor;
      ls.offsets(j) = r.offset;
      ls.residuals(j) = r.residual;
      Eigen::VectorXd terms(n);
      for (Eigen::Index k = 0; k < n; ++k) {
        const double d = (g(r.anchor) - g(k)) + r.offset;
        terms(k) = s.v()(k) / (d * d);
      }
      ls.weights(j) = 1.0 / pairwise_sum(terms);
    }
    return ls;
  }

  ls.geometry = Geometry::Circle;
  CircleSolver solver(ctx, alpha);
  roots.reserve(static_cast<size_t>(n));
  for (size_t i = 0; i < solver.order.size(); ++i) roots.push_back(solver.solve_arc(i, stop));

  const Eigen::VectorXd& th = solver.theta;
  auto root_angle = [&](const AnchoredRoot& r) {
    double a = std::fmod(th(r.anchor) + r.offset, 2.0 * M_PI);
    return a < 0.0 ? a + 2.0 * M_PI : a;
  };
  std::sort(roots.begin(), roots.end(), [&](const AnchoredRoot& a, const AnchoredRoot& b) {
    return root_angle(a) < root_angle(b);
  });
  const Eigen::Index m = static_cast<Eigen::Index>(roots.size());
  ls.lambdas.resize(m);
  ls.weights.resize(m);
  ls.anchors.resize(m);
  ls.offsets.resize(m);
  ls.residuals.resize(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const AnchoredRoot& r = roots[static_cast<size_t>(j)];
    ls.lambdas(j) = std::polar(1.0, root_angle(r));
    ls.anchors(j) = r.anchor;
    ls.offsets(j) = r.offset;
    ls.residuals(j) = r.residual;
    Eigen::VectorXd terms(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const double h = std::sin(0.5 * ((th(r.anchor) - th(k)) + r.offset));
      terms(k) = 0.25 * s.v()(k) / (h * h);
    }
    ls.weights(j) = 1.0 / pairwise_sum(terms);
  }
  return ls;
}

Complex evaluate_decomposition(const HerglotzDecomposition& d, Complex z) {
  Eigen::VectorXcd terms(d.lambdas.size() + 2);
  for (Eigen::Index j = 0; j < d.lambdas.size(); ++j) {
    const double l = d.lambdas(j);
    terms(j) = d.weights(j) * (1.0 / (l - z) - l / (1.0 + l * l));
  }
  terms(d.lambdas.size()) = Complex(d.b, 0.0);
  terms(d.lambdas.size() + 1) = d.c * z;
  return pairwise_sum(terms);
}

HerglotzDecomposition herglotz_decompose(const PotentialContext& ctx, double alpha) {
  if (!ctx.is_line())
    throw InvalidInput("herglotz_decompose: line geometry required");
  const Tolerances& tol = ctx.tolerances();
  const LevelSet ls = solve_level_set(ctx, alpha);

  HerglotzDecomposition d;
  d.alpha = alpha;
  d.lambdas = ls.lambdas_real();
  d.weights = ls.weights;
  d.exceptional = ls.exceptional;
  d.c = ls.exceptional ? 1.0 / pairwise_sum(ctx.nodes().v()) : 0.0;

  // Fix b by matching both sides at z = i; it must come out real.
  const Complex z0 = kI;
  const Complex lhs0 = 1.0 / (alpha - phi(ctx, z0));
  d.b = 0.0;
  const Complex rhs0 = evaluate_decomposition(d, z0);
  const Complex b_c = lhs0 - rhs0;
  d.b = b_c.real();
  if (std::abs(b_c.imag()) > 1e-10 * (1.0 + std::abs(d.b)))
    throw DecompositionResidual("constant term has a nonreal part: " +
                                std::to_string(b_c.imag()));

  // Deterministic spot-check of the identity away from the data.
  std::mt19937_64 rng(0x68636c61726bULL);
  const double span = 2.0 * std::max({5.0, ctx.nodes().scale(),
                                      d.lambdas.size() ? d.lambdas.cwiseAbs().maxCoeff() : 0.0});
  std::uniform_real_distribution<double> re(-span, span), im(0.1, 10.0);
  for (int k = 0; k < 32; ++k) {
    const Complex z(re(rng), im(rng));
    const Complex lhs = 1.0 / (alpha - phi(ctx, z));
    const Complex rhs = evaluate_decomposition(d, z);
    if (std::abs(lhs - rhs) > tol.decomposition_tol * (1.0 + std::abs(lhs)))
      throw DecompositionResidual("partial-fraction identity residual " +
                                  std::to_string(std::abs(lhs - rhs)) + " at z=(" +
                                  std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")");
  }
  return d;
}

}  // namespace hilbert
