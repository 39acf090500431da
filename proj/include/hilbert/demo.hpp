// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HILBERT_DEMO_HPP
#define HILBERT_DEMO_HPP

#include <optional>
#include <string>
#include <vector>

#include "hilbert/levelset.hpp"

namespace hilbert {

/// A prepared node family with suggested parameters, plus a prescribed
/// sampling family when the demo ships one (the lattice).
struct DemoInstance {
  std::string name;
  std::string note;
  WeightedNodeSet set;
  std::vector<double> suggested_alphas;
  std::vector<Complex> suggested_betas;
  std::optional<LevelSet> prescribed;  // lattice: half-integers with w = 1/pi^2
};

/// Known names: "two-point", "single-node", "lattice" (n = half-width),
/// "roots-of-unity" (n = order), "prime-example" (n = number of primes).
/// Throws UnknownDemo.
DemoInstance make_demo(const std::string& name, int n = 0);

/// Integer lattice {-n..n} with unit weights, sampled on the half-integers
/// with the infinite-lattice weight 1/pi^2.
DemoInstance lattice_demo(int n);

/// Worst defect |row norm^2 - 1| over the rows with |lambda| <= n/2 of the
/// truncated lattice transform; decays like O(1/n).
double lattice_inner_row_defect(int n);

/// Seed for randomized demo probes: HILBERT_CLARK_SEED when set, else a
/// fixed default.
unsigned long long probe_seed();

}  // namespace hilbert

#endif  // HILBERT_DEMO_HPP
