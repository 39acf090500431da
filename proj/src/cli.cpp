// Copyright (c) 2026 hilbert-clark contributors
// SPDX-License-Identifier: Apache-2.0

#include "hilbert/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "hilbert/clark.hpp"
#include "hilbert/demo.hpp"
#include "hilbert/geometry.hpp"
#include "hilbert/json_io.hpp"
#include "hilbert/rkspace.hpp"

namespace hilbert {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt(Complex z) { return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i"; }

Json load_json(const std::string& source) {
  std::string text = source;
  const size_t first = source.find_first_not_of(" \t\n");
  if (first == std::string::npos)
    throw InvalidInput("empty input");
  if (source[first] != '{' && source[first] != '[') {
    std::ifstream in(source);
    if (!in) throw InvalidInput("cannot open input file \"" + source + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("JSON parse error: ") + e.what());
  }
}

Complex parse_complex(const std::string& s) {
  std::istringstream in(s);
  double re = 0.0, im = 0.0;
  char sep = 0;
  if (!(in >> re)) throw InvalidInput("cannot parse \"" + s + "\" as re[,im]");
  if (in >> sep) {
    if (sep != ',' || !(in >> im))
      throw InvalidInput("cannot parse \"" + s + "\" as re[,im]");
  }
  return Complex(re, im);
}

struct Range {
  double lo = 0.0, hi = 0.0;
  int steps = 0;
};

Range parse_range(const std::string& s) {
  Range r;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> r.lo >> c1 >> r.hi >> c2 >> r.steps) || c1 != ':' || c2 != ':' || r.steps < 1)
    throw InvalidInput("cannot parse \"" + s + "\" as lo:hi:steps");
  return r;
}

struct CliState {
  Tolerances tol;
  std::string input;
  std::string format = "json";
  bool expect_unitary = false;
};

void add_tolerance_flags(CLI::App* cmd, Tolerances& tol) {
  cmd->add_option("--dedup-rel", tol.dedup_rel, "node distinctness tolerance (relative)");
  cmd->add_option("--level-tol", tol.level_tol, "level-set residual tolerance");
  cmd->add_option("--exc-rel", tol.exc_rel, "exceptional-alpha detection tolerance");
  cmd->add_option("--unit-rel", tol.unit_rel, "unitarity verdict tolerance (per dimension)");
  cmd->add_option("--locus-rel", tol.locus_rel, "localization tolerance (per diameter)");
  cmd->add_option("--on-circle-tol", tol.on_circle, "allowed ||z|-1| for boundary-only points");
  cmd->add_option("--decomp-tol", tol.decomposition_tol, "partial-fraction residual tolerance");
  cmd->add_option("--quad-factor", tol.quadrature_factor, "quadrature points per Clark point");
  cmd->add_option("--quad-drift", tol.quadrature_drift, "allowed Gram drift when doubling M");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int run_check(const CliState& st, std::ostream& out) {
  const WeightedNodeSet s = node_set_from_json(load_json(st.input), st.tol);
  Json j;
  j["schema"] = "v1";
  j["command"] = "check";
  j["geometry"] = to_string(s.geometry());
  j["size"] = s.size();
  j["admissibility_sum"] = admissibility_sum(s);
  j["scale"] = s.scale();
  j["dedup_tol"] = s.dedup_tol();
  j["tolerances"] = tolerances_to_json(st.tol);
  emit(out, j);
  return 0;
}

int run_phi(const CliState& st, const std::vector<std::string>& at,
            const std::string& grid, std::ostream& out) {
  const WeightedNodeSet s = node_set_from_json(load_json(st.input), st.tol);
  const PotentialContext ctx = PotentialContext::for_set(s, st.tol);
  std::vector<Complex> zs;
  for (const std::string& a : at) zs.push_back(parse_complex(a));
  if (!grid.empty()) {
    const Range r = parse_range(grid);
    for (int k = 0; k < r.steps; ++k) {
      const double x = r.lo + (r.hi - r.lo) * k / std::max(1, r.steps - 1);
      zs.push_back(ctx.is_line() ? Complex(x, 0.0) : std::polar(1.0, x));
    }
  }
  if (zs.empty()) throw InvalidInput("phi: give --at points or a --grid");
  if (st.format == "csv") {
    out << "z_re,z_im,phi_re,phi_im\n";
    for (Complex z : zs) {
      const Complex p = phi(ctx, z);
      out << fmt(z.real()) << ',' << fmt(z.imag()) << ',' << fmt(p.real()) << ','
          << fmt(p.imag()) << "\n";
    }
    return 0;
  }
  Json rows = Json::array();
  for (Complex z : zs) {
    const Complex p = phi(ctx, z);
    rows.push_back(Json{{"z", to_json(z)}, {"phi", to_json(p)}});
  }
  Json j;
  j["schema"] = "v1";
  j["command"] = "phi";
  j["values"] = rows;
  j["tolerances"] = tolerances_to_json(st.tol);
  emit(out, j);
  return 0;
}

int run_levelset(const CliState& st, double alpha, bool has_alpha,
                 const std::string& scan, std::ostream& out) {
  const WeightedNodeSet s = node_set_from_json(load_json(st.input), st.tol);
  const PotentialContext ctx = PotentialContext::for_set(s, st.tol);
  if (!scan.empty()) {
    const Range r = parse_range(scan);
    out << "alpha";
    const Eigen::Index n = s.size();
    for (Eigen::Index k = 1; k <= n; ++k) out << ",lambda_" << k;
    out << "\n";
    for (int k = 0; k < r.steps; ++k) {
      const double a = r.lo + (r.hi - r.lo) * k / std::max(1, r.steps - 1);
      const LevelSet ls = solve_level_set(ctx, a);
      out << fmt(a);
      for (Eigen::Index j = 0; j < ls.size(); ++j)
        out << ',' << fmt(ctx.is_line() ? ls.lambdas(j).real() : std::arg(ls.lambdas(j)));
      for (Eigen::Index j = ls.size(); j < n; ++j) out << ",nan";
      out << "\n";
    }
    return 0;
  }
  if (!has_alpha) throw InvalidInput("levelset: --alpha or --scan required");
  const LevelSet ls = solve_level_set(ctx, alpha);
  Json j = level_set_report(ls, st.tol);
  j["command"] = "levelset";
  emit(out, j);
  return 0;
}

int run_transform(const CliState& st, double alpha, const std::string& matrix_path,
                  std::ostream& out) {
  const WeightedNodeSet s = node_set_from_json(load_json(st.input), st.tol);
  const PotentialContext ctx = PotentialContext::for_set(s, st.tol);
  const LevelSet ls = solve_level_set(ctx, alpha);
  const TransformMatrix t = build(s, ls);
  const UnitarityReport r = unitarity_report(t, st.tol);
  if (!matrix_path.empty()) {
    std::ofstream m(matrix_path);
    if (!m) throw InvalidInput("cannot open \"" + matrix_path + "\" for writing");
    for (Eigen::Index j = 0; j < t.rows(); ++j) {
      for (Eigen::Index k = 0; k < t.cols(); ++k) {
        if (k) m << ',';
        m << fmt(t.entries(j, k).real()) << ',' << fmt(t.entries(j, k).imag());
      }
      m << "\n";
    }
  }
  Json j = unitarity_report_json(r);
  j["command"] = "transform";
  j["alpha"] = alpha;
  j["exceptional"] = ls.exceptional;
  j["tolerances"] = tolerances_to_json(st.tol);
  emit(out, j);
  return (st.expect_unitary && r.verdict != Verdict::Unitary) ? 2 : 0;
}

int run_localize(const CliState& st, double tol_abs, bool has_tol, std::ostream& out) {
  const Json j = load_json(st.input);
  const Eigen::VectorXcd pts = points_from_json(j);
  double tol = tol_abs;
  if (!has_tol) {
    double diam = 0.0;
    for (Eigen::Index a = 0; a < pts.size(); ++a)
      for (Eigen::Index b = a + 1; b < pts.size(); ++b)
        diam = std::max(diam, std::abs(pts(a) - pts(b)));
    tol = st.tol.locus_rel * diam;
  }
  const LocusClassification c = localize(pts, tol);
  Json rep = locus_report(c, tol);
  rep["command"] = "localize";
  emit(out, rep);
  return 0;
}

int run_reconstruct(const CliState& st, const std::string& data_arg,
                    const std::string& points_arg, std::ostream& out) {
  const WeightedNodeSet s = node_set_from_json(load_json(st.input), st.tol);
  const PotentialContext ctx = PotentialContext::for_set(s, st.tol);
  const Json data = load_json(data_arg);
  if (!data.contains("alpha") || !data.contains("samples"))
    throw InvalidInput("reconstruct: data needs \"alpha\" and \"samples\"");
  const double alpha = data["alpha"].get<double>();
  const Eigen::VectorXcd samples = points_from_json(data["samples"]);
  const Eigen::VectorXcd pts = points_from_json(load_json(points_arg));
  const LevelSet ls = solve_level_set(ctx, alpha);
  const Reconstructor rec(s, ls, samples, st.tol);
  Json values = Json::array();
  for (Eigen::Index k = 0; k < pts.size(); ++k) values.push_back(to_json(rec(pts(k))));
  Json j;
  j["schema"] = "v1";
  j["command"] = "rkspace-reconstruct";
  j["alpha"] = alpha;
  j["certificate"] = rec.certificate();
  j["values"] = values;
  j["tolerances"] = tolerances_to_json(st.tol);
  emit(out, j);
  return 0;
}

int run_clark(const CliState& st, const std::string& beta_str, int quad_points,
              std::ostream& out) {
  const WeightedNodeSet s = node_set_from_json(load_json(st.input), st.tol);
  const PotentialContext ctx(s, PotentialVariant::CirclePotential, st.tol);
  const InnerFunctionHandle h{ctx};
  const ClarkBasisResult c = clark_basis(h, parse_complex(beta_str), quad_points);
  Json j = clark_report(c, st.tol);
  j["command"] = "clark";
  emit(out, j);
  return 0;
}

void print_set_summary(const DemoInstance& d, std::ostream& out) {
  out << "demo " << d.name << ": " << d.note << "\n";
  out << "geometry = " << to_string(d.set.geometry()) << ", nodes = " << d.set.size() << "\n";
  if (d.set.size() <= 16) {
    out << "gamma =";
    for (Eigen::Index k = 0; k < d.set.size(); ++k) {
      const Complex g = d.set.gamma()(k);
      out << ' ' << (g.imag() == 0.0 ? fmt(g.real()) : fmt(g));
    }
    out << "\nv =";
    for (Eigen::Index k = 0; k < d.set.size(); ++k) out << ' ' << fmt(d.set.v()(k));
    out << "\n";
  }
  out << "admissibility_sum = " << fmt(admissibility_sum(d.set)) << "\n";
}

int run_demo(const CliState& st, const std::string& name, int n, double alpha,
             bool has_alpha, const std::string& beta_str, bool json_out,
             std::ostream& out) {
  const DemoInstance d = make_demo(name, n);
  Json j;
  j["schema"] = "v1";
  j["command"] = "demo";
  j["name"] = d.name;
  j["note"] = d.note;
  j["set"] = node_set_to_json(d.set);
  int code = 0;

  if (!json_out) print_set_summary(d, out);

  if (d.name == "prime-example") {
    // Display only: the infinite construction has an empty real star set,
    // which no finite truncation can witness.
    if (json_out) emit(out, j);
    return 0;
  }

  if (d.name == "lattice") {
    const TransformMatrix t = build(d.set, *d.prescribed);
    const UnitarityReport r = unitarity_report(t, st.tol);
    const double defect = lattice_inner_row_defect(n > 0 ? n : 32);
    if (json_out) {
      j["report"] = unitarity_report_json(r);
      j["inner_row_defect"] = defect;
      emit(out, j);
    } else {
      out << "prescribed half-integer sampling, w = 1/pi^2\n";
      out << "verdict = " << to_string(r.verdict) << " (col_gram_dev = " << fmt(r.col_gram_dev)
          << ", row_gram_dev = " << fmt(r.row_gram_dev) << ")\n";
      out << "inner_row_defect = " << fmt(defect) << "\n";
    }
    return (st.expect_unitary && r.verdict != Verdict::Unitary) ? 2 : 0;
  }

  if (!beta_str.empty()) {
    const PotentialContext ctx(d.set, PotentialVariant::CirclePotential, st.tol);
    const InnerFunctionHandle h{ctx};
    const ClarkBasisResult c = clark_basis(h, parse_complex(beta_str));
    if (json_out) {
      j["clark"] = clark_report(c, st.tol);
      emit(out, j);
    } else {
      out << "beta = " << fmt(c.beta) << ", alpha = " << fmt(c.alpha) << "\n";
      out << "clark points =";
      for (Eigen::Index k = 0; k < c.levels.size(); ++k) out << ' ' << fmt(c.levels.lambdas(k));
      out << "\ngram_offdiag_max = " << fmt(c.offdiag_max)
          << ", l2_agreement_max = " << fmt(c.l2_agreement_max) << "\n";
    }
    return 0;
  }

  if (has_alpha) {
    const PotentialContext ctx = PotentialContext::for_set(d.set, st.tol);
    const LevelSet ls = solve_level_set(ctx, alpha);
    const TransformMatrix t = build(d.set, ls);
    const UnitarityReport r = unitarity_report(t, st.tol);
    double identity_residual = 0.0;
    if (ctx.is_line() && !ls.exceptional) {
      // Seeded spot-check of the partial-fraction identity.
      const HerglotzDecomposition dec = herglotz_decompose(ctx, alpha);
      std::mt19937_64 rng(probe_seed());
      std::uniform_real_distribution<double> re(-10.0, 10.0), im(0.1, 10.0);
      for (int k = 0; k < 50; ++k) {
        const Complex z(re(rng), im(rng));
        const Complex lhs = 1.0 / (alpha - phi(ctx, z));
        identity_residual = std::max(identity_residual,
                                     std::abs(lhs - evaluate_decomposition(dec, z)));
      }
    }
    if (json_out) {
      j["levelset"] = level_set_report(ls, st.tol);
      j["report"] = unitarity_report_json(r);
      if (ctx.is_line() && !ls.exceptional) j["identity_residual_max"] = identity_residual;
      emit(out, j);
    } else {
      out << "alpha = " << fmt(alpha) << (ls.exceptional ? "  (exceptional)" : "") << "\n";
      out << "lambda =";
      for (Eigen::Index k = 0; k < ls.size(); ++k)
        out << ' ' << (ctx.is_line() ? fmt(ls.lambdas(k).real()) : fmt(ls.lambdas(k)));
      out << "\nw =";
      for (Eigen::Index k = 0; k < ls.size(); ++k) out << ' ' << fmt(ls.weights(k));
      out << "\nverdict = " << to_string(r.verdict) << " (col_gram_dev = "
          << fmt(r.col_gram_dev) << ", row_gram_dev = " << fmt(r.row_gram_dev) << ")\n";
      if (ctx.is_line() && !ls.exceptional)
        out << "identity_residual_max = " << fmt(identity_residual) << "\n";
    }
    code = (st.expect_unitary && r.verdict != Verdict::Unitary) ? 2 : 0;
    return code;
  }

  if (!json_out) {
    if (!d.suggested_alphas.empty()) {
      out << "suggested alpha:";
      for (double a : d.suggested_alphas) out << ' ' << fmt(a);
      out << "\n";
    }
    if (!d.suggested_betas.empty()) {
      out << "suggested beta:";
      for (Complex b : d.suggested_betas) out << ' ' << fmt(b);
      out << "\n";
    }
  } else {
    emit(out, j);
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"weighted discrete Hilbert transforms: level sets, unitarity "
               "certificates, kernel bases and Clark families"};
  app.require_subcommand(1);

  CliState st;

  auto* check = app.add_subcommand("check", "validate a node set and report admissibility");
  check->add_option("-i,--input", st.input, "node-set JSON (path or inline)")->required();
  add_tolerance_flags(check, st.tol);

  auto* phi_cmd = app.add_subcommand("phi", "evaluate the potential");
  phi_cmd->add_option("-i,--input", st.input)->required();
  std::vector<std::string> at;
  std::string grid;
  phi_cmd->add_option("--at", at, "evaluation point re[,im]; repeatable");
  phi_cmd->add_option("--grid", grid, "lo:hi:steps (real axis on the line, angles on the circle)");
  phi_cmd->add_option("--format", st.format, "csv|json")->default_val("csv");
  add_tolerance_flags(phi_cmd, st.tol);

  auto* level = app.add_subcommand("levelset", "solve phi(lambda) = alpha");
  level->add_option("-i,--input", st.input)->required();
  double alpha = 0.0;
  bool has_alpha = false;
  std::string scan;
  level->add_option("--alpha", alpha)->each([&](const std::string&) { has_alpha = true; });
  level->add_option("--scan", scan, "lo:hi:steps CSV sweep");
  add_tolerance_flags(level, st.tol);

  auto* trans = app.add_subcommand("transform", "build the transform and certify unitarity");
  trans->add_option("-i,--input", st.input)->required();
  double t_alpha = 0.0;
  std::string matrix_path;
  trans->add_option("--alpha", t_alpha)->required();
  trans->add_flag("--report", "emit the unitarity report (always on)");
  trans->add_option("--matrix", matrix_path, "write scaled entries as CSV (re,im pairs)");
  trans->add_flag("--expect-unitary", st.expect_unitary, "exit 2 unless the verdict is Unitary");
  add_tolerance_flags(trans, st.tol);

  auto* loc = app.add_subcommand("localize", "classify a point family as line/circle");
  loc->add_option("-i,--input", st.input, "JSON array of points")->required();
  double loc_tol = 0.0;
  bool has_loc_tol = false;
  loc->add_option("--tol", loc_tol, "absolute deviation tolerance")
      ->each([&](const std::string&) { has_loc_tol = true; });
  add_tolerance_flags(loc, st.tol);

  auto* rk = app.add_subcommand("rkspace", "reproducing-kernel space operations");
  auto* rec = rk->add_subcommand("reconstruct", "kernel-basis expansion from samples");
  rec->add_option("-i,--input", st.input)->required();
  std::string data_arg, points_arg;
  rec->add_option("--data", data_arg, "{\"alpha\": a, \"samples\": [...]} (path or inline)")
      ->required();
  rec->add_option("--points", points_arg, "JSON array of evaluation points")->required();
  add_tolerance_flags(rec, st.tol);

  auto* clark_cmd = app.add_subcommand("clark", "Clark family at a unimodular beta");
  clark_cmd->add_option("-i,--input", st.input)->required();
  std::string beta_str;
  int quad_points = 0;
  clark_cmd->add_option("--beta", beta_str, "re,im on the unit circle")->required();
  clark_cmd->add_option("--quad-points", quad_points, "override quadrature order");
  add_tolerance_flags(clark_cmd, st.tol);

  auto* demo_cmd = app.add_subcommand("demo", "prepared instances");
  std::string demo_name;
  int demo_n = 0;
  double demo_alpha = 0.0;
  bool demo_has_alpha = false;
  std::string demo_beta;
  bool demo_json = false;
  demo_cmd->add_option("name", demo_name,
                       "two-point | single-node | lattice | roots-of-unity | prime-example")
      ->required();
  demo_cmd->add_option("--n,--terms", demo_n, "size parameter");
  demo_cmd->add_option("--alpha", demo_alpha)->each([&](const std::string&) { demo_has_alpha = true; });
  demo_cmd->add_option("--beta", demo_beta, "re,im (circle demos)");
  demo_cmd->add_flag("--expect-unitary", st.expect_unitary);
  demo_cmd->add_flag("--json", demo_json, "emit JSON instead of text");
  add_tolerance_flags(demo_cmd, st.tol);

  std::vector<std::string> argv(args);
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (*check) return run_check(st, out);
    if (*phi_cmd) return run_phi(st, at, grid, out);
    if (*level) return run_levelset(st, alpha, has_alpha, scan, out);
    if (*trans) return run_transform(st, t_alpha, matrix_path, out);
    if (*loc) return run_localize(st, loc_tol, has_loc_tol, out);
    if (*rec) return run_reconstruct(st, data_arg, points_arg, out);
    if (*clark_cmd) return run_clark(st, beta_str, quad_points, out);
    if (*demo_cmd)
      return run_demo(st, demo_name, demo_n, demo_alpha, demo_has_alpha, demo_beta,
                      demo_json, out);
    err << "no command given\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hilbert
