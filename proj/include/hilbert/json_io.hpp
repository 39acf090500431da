// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HILBERT_JSON_IO_HPP
#define HILBERT_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "hilbert/clark.hpp"
#include "hilbert/geometry.hpp"
#include "hilbert/transform.hpp"

namespace hilbert {

// Reports use insertion order and carry a "schema": "v1" marker. Complex
// numbers are [re, im] arrays everywhere.
using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Eigen::VectorXcd points_from_json(const Json& j);
Json points_to_json(const Eigen::VectorXcd& pts);
Json reals_to_json(const Eigen::VectorXd& xs);

/// {"geometry": "line"|"circle"|"general", "gamma": [...], "v": [...]};
/// line gamma entries may be bare reals.
WeightedNodeSet node_set_from_json(const Json& j, const Tolerances& tol = default_tolerances());
Json node_set_to_json(const WeightedNodeSet& s);

Json level_set_report(const LevelSet& ls, const Tolerances& tol);
Json unitarity_report_json(const UnitarityReport& r);
Json locus_report(const LocusClassification& c, double tol);
Json clark_report(const ClarkBasisResult& c, const Tolerances& tol);
Json decomposition_report(const HerglotzDecomposition& d);

Json tolerances_to_json(const Tolerances& tol);

}  // namespace hilbert

#endif  // HILBERT_JSON_IO_HPP
