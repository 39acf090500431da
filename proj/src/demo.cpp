// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#include "hilbert/demo.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "hilbert/transform.hpp"

namespace hilbert {

namespace {

DemoInstance two_point_demo() {
  Eigen::VectorXd g(2), v(2);
  g << -1.0, 1.0;
  v << 1.0, 1.0;
  DemoInstance d{"two-point",
                 "symmetric pair; boundary limit of phi is 0, so alpha = 0 drops a point",
                 WeightedNodeSet::line(g, v),
                 {1.0, -1.0, 0.5},
                 {},
                 std::nullopt};
  return d;
}

DemoInstance single_node_demo() {
  Eigen::VectorXd g(1), v(1);
  g << 0.0;
  v << 1.0;
  return {"single-node", "phi(z) = -1/z; the level set at alpha is {-1/alpha}",
          WeightedNodeSet::line(g, v), {1.0, 2.0}, {}, std::nullopt};
}

DemoInstance roots_of_unity_demo(int n) {
  if (n < 1) throw InvalidInput("roots-of-unity: order must be >= 1");
  Eigen::VectorXcd g(n);
  Eigen::VectorXd v(n);
  for (int k = 0; k < n; ++k) {
    g(k) = std::polar(1.0, 2.0 * M_PI * k / n);
    v(k) = 2.0 / n;
  }
  DemoInstance d{"roots-of-unity",
                 "the attached inner function is z^" + std::to_string(n),
                 WeightedNodeSet::circle(g, v),
                 {0.0, 1.0},
                 {Complex(-1.0, 0.0), Complex(0.0, 1.0)},
                 std::nullopt};
  return d;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

DemoInstance prime_example_demo(int terms) {
  if (terms < 1) throw InvalidInput("prime-example: need at least one prime");
  // Sparse primes p_l (first prime past 4^l) keep sum p_l^{-1/2} summable.
  std::vector<long> primes;
  long floor_value = 1;
  for (int l = 0; l < terms; ++l) {
    long p = floor_value + 1;
    while (!is_prime(p)) ++p;
    primes.push_back(p);
    floor_value = (floor_value < (1L << 40)) ? floor_value * 4 : floor_value + 1;
  }
  // Nodes k/p in [-3, 3] with p not dividing k, weight p^{-3/2}.
  std::vector<double> nodes, weights;
  for (long p : primes) {
    const double w = std::pow(static_cast<double>(p), -1.5);
    for (long k = -3 * p; k <= 3 * p; ++k) {
      if (k % p == 0) continue;
      nodes.push_back(static_cast<double>(k) / static_cast<double>(p));
      weights.push_back(w);
    }
  }
  Eigen::VectorXd g = Eigen::Map<Eigen::VectorXd>(nodes.data(), static_cast<Eigen::Index>(nodes.size()));
  Eigen::VectorXd v = Eigen::Map<Eigen::VectorXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
  std::string plist;
  for (long p : primes) plist += (plist.empty() ? "" : ", ") + std::to_string(p);
  return {"prime-example",
          "finite window [-3,3] of the union of p^{-1}Z \\ Z over the primes {" + plist +
              "}; every real point sits within 1/p of ever-denser heavy nodes, so the "
              "star set leaves the real line in the limit. Display only.",
          WeightedNodeSet::line(g, v),
          {},
          {},
          std::nullopt};
}

}  // namespace

DemoInstance lattice_demo(int n) {
  if (n < 1) throw InvalidInput("lattice: half-width must be >= 1");
  Eigen::VectorXd g(2 * n + 1), v(2 * n + 1);
  for (int k = -n; k <= n; ++k) {
    g(k + n) = static_cast<double>(k);
    v(k + n) = 1.0;
  }
  DemoInstance d{"lattice",
                 "integers vs half-integers; the infinite-lattice weights 1/pi^2 are "
                 "prescribed, so the row defect shows pure truncation error (the "
                 "missing tail at lambda = k+1/2 is at most 2/(n-|k|))",
                 WeightedNodeSet::line(g, v),
                 {},
                 {},
                 std::nullopt};
  LevelSet half;
  half.alpha = std::numeric_limits<double>::quiet_NaN();
  half.geometry = Geometry::Line;
  half.lambdas.resize(2 * n);
  half.weights.resize(2 * n);
  for (int k = -n; k < n; ++k) {
    half.lambdas(k + n) = Complex(k + 0.5, 0.0);
    half.weights(k + n) = 1.0 / (M_PI * M_PI);
  }
  d.prescribed = half;
  return d;
}

double lattice_inner_row_defect(int n) {
  const DemoInstance d = lattice_demo(n);
  const TransformMatrix t = build(d.set, *d.prescribed);
  const Eigen::VectorXd defects = row_norm_defects(t);
  double worst = 0.0;
  for (Eigen::Index j = 0; j < defects.size(); ++j)
    if (std::abs(d.prescribed->lambdas(j).real()) <= 0.5 * n)
      worst = std::max(worst, defects(j));
  return worst;
}

DemoInstance make_demo(const std::string& name, int n) {
  if (name == "two-point") return two_point_demo();
  if (name == "single-node") return single_node_demo();
  if (name == "lattice") return lattice_demo(n > 0 ? n : 32);
  if (name == "roots-of-unity") return roots_of_unity_demo(n > 0 ? n : 3);
  if (name == "prime-example") return prime_example_demo(n > 0 ? n : 3);
  throw UnknownDemo("unknown demo \"" + name +
                    "\"; known: two-point, single-node, lattice, roots-of-unity, prime-example");
}

unsigned long long probe_seed() {
  if (const char* env = std::getenv("HILBERT_CLARK_SEED")) {
    char* end = nullptr;
    const unsigned long long s = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return s;
  }
  return 0x68696c62657274ULL;
}

}  // namespace hilbert
