// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#include "hilbert/json_io.hpp"

namespace hilbert {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw InvalidInput("expected a number or [re, im] pair, got " + j.dump());
}

Eigen::VectorXcd points_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of points, got " + j.dump());
  Eigen::VectorXcd pts(static_cast<Eigen::Index>(j.size()));
  Eigen::Index k = 0;
  for (const auto& item : j) pts(k++) = complex_from_json(item);
  return pts;
}

Json points_to_json(const Eigen::VectorXcd& pts) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < pts.size(); ++k) out.push_back(to_json(pts(k)));
  return out;
}

Json reals_to_json(const Eigen::VectorXd& xs) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < xs.size(); ++k) out.push_back(xs(k));
  return out;
}

WeightedNodeSet node_set_from_json(const Json& j, const Tolerances& tol) {
  if (!j.is_object()) throw InvalidInput("node set: expected a JSON object");
  if (!j.contains("geometry")) throw InvalidInput("node set: missing \"geometry\"");
  if (!j.contains("gamma")) throw InvalidInput("node set: missing \"gamma\"");
  if (!j.contains("v")) throw InvalidInput("node set: missing \"v\"");
  const Geometry geometry = geometry_from_string(j["geometry"].get<std::string>());
  const Eigen::VectorXcd gamma = points_from_json(j["gamma"]);
  if (!j["v"].is_array()) throw InvalidInput("node set: \"v\" must be an array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j["v"].size()));
  Eigen::Index k = 0;
  for (const auto& item : j["v"]) {
    if (!item.is_number()) throw InvalidInput("node set: \"v\" entries must be numbers");
    v(k++) = item.get<double>();
  }
  return WeightedNodeSet(gamma, v, geometry, tol);
}

Json node_set_to_json(const WeightedNodeSet& s) {
  Json j;
  j["geometry"] = to_string(s.geometry());
  j["gamma"] = points_to_json(s.gamma());
  j["v"] = reals_to_json(s.v());
  return j;
}

Json tolerances_to_json(const Tolerances& tol) {
  Json j;
  j["dedup_rel"] = tol.dedup_rel;
  j["level_tol"] = tol.level_tol;
  j["exc_rel"] = tol.exc_rel;
  j["unit_rel"] = tol.unit_rel;
  j["locus_rel"] = tol.locus_rel;
  j["on_circle"] = tol.on_circle;
  j["decomposition_tol"] = tol.decomposition_tol;
  j["quadrature_drift"] = tol.quadrature_drift;
  j["quadrature_factor"] = tol.quadrature_factor;
  return j;
}

Json level_set_report(const LevelSet& ls, const Tolerances& tol) {
  Json j;
  j["schema"] = "v1";
  j["kind"] = "level_set";
  j["geometry"] = ls.geometry == Geometry::Circle ? "circle" : "line";
  j["alpha"] = ls.alpha;
  j["exceptional"] = ls.exceptional;
  j["lambda"] = points_to_json(ls.lambdas);
  j["w"] = reals_to_json(ls.weights);
  if (ls.residuals.size() > 0)
    j["residual_max"] = ls.residuals.maxCoeff();
  j["tolerances"] = tolerances_to_json(tol);
  return j;
}

Json unitarity_report_json(const UnitarityReport& r) {
  Json j;
  j["schema"] = "v1";
  j["kind"] = "unitarity_report";
  j["rows"] = r.rows;
  j["cols"] = r.cols;
  j["col_gram_dev"] = r.col_gram_dev;
  j["row_gram_dev"] = r.row_gram_dev;
  j["verdict"] = to_string(r.verdict);
  j["unit_tol"] = r.tol;
  return j;
}

Json locus_report(const LocusClassification& c, double tol) {
  Json j;
  j["schema"] = "v1";
  j["kind"] = "locus";
  j["locus"] = to_string(c.kind);
  switch (c.kind) {
    case LocusClassification::Kind::Line:
      j["point"] = to_json(c.point);
      j["direction"] = to_json(c.direction);
      break;
    case LocusClassification::Kind::Circle:
      j["center"] = to_json(c.center);
      j["radius"] = c.radius;
      break;
    case LocusClassification::Kind::Indeterminate:
      j["reason"] = c.reason;
      break;
  }
  j["max_deviation"] = c.max_deviation;
  j["tol"] = tol;
  return j;
}

Json clark_report(const ClarkBasisResult& c, const Tolerances& tol) {
  Json j;
  j["schema"] = "v1";
  j["kind"] = "clark_basis";
  j["beta"] = to_json(c.beta);
  j["alpha"] = c.alpha;
  j["points"] = points_to_json(c.levels.lambdas);
  j["w"] = reals_to_json(c.levels.weights);
  j["gram_offdiag_max"] = c.offdiag_max;
  j["l2_gram_diag"] = reals_to_json(c.l2_diag);
  j["l2_agreement_max"] = c.l2_agreement_max;
  j["quadrature_points"] = c.quadrature_points;
  j["diagonal_within_tol"] = c.diagonal_within_tol;
  j["tolerances"] = tolerances_to_json(tol);
  return j;
}

Json decomposition_report(const HerglotzDecomposition& d) {
  Json j;
  j["schema"] = "v1";
  j["kind"] = "herglotz_decomposition";
  j["alpha"] = d.alpha;
  j["b"] = d.b;
  j["c"] = d.c;
  j["exceptional"] = d.exceptional;
  Json atoms = Json::array();
  for (Eigen::Index k = 0; k < d.lambdas.size(); ++k)
    atoms.push_back(Json::array({d.lambdas(k), d.weights(k)}));
  j["atoms"] = atoms;
  return j;
}

}  // namespace hilbert
