#include "cosserat/report.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "cosserat/numerics.hpp"
#include "cosserat/son_geometry.hpp"

namespace cosserat {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& rows, const char* what) {
  if (!rows.is_array() || rows.empty())
    throw ParseError(std::string(what) + ": expected a non-empty nested array");
  const int n = static_cast<int>(rows.size());
  Mat m(n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(std::string(what) + ": row " + std::to_string(i) +
                       " must hold exactly " + std::to_string(n) + " numbers");
    for (int j = 0; j < n; ++j) {
      const json& v = row[static_cast<size_t>(j)];
      if (!v.is_number())
        throw ParseError(std::string(what) + ": entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") is not a number");
      m(i, j) = v.get<double>();
    }
  }
  return m;
}

json input_to_json(const ProblemInput& in) {
  json j;
  j["F"] = in.f ? matrix_to_json(*in.f) : json(nullptr);
  j["lambdas"] = in.lambdas ? json(*in.lambdas) : json(nullptr);
  j["mu"] = in.mu;
  j["mu_c"] = in.mu_c;
  j["det_f"] = in.det_f ? json(*in.det_f) : json(nullptr);
  return j;
}

ProblemInput input_from_json(const json& j) {
  ProblemInput in;
  if (j.contains("F") && !j["F"].is_null()) in.f = matrix_from_json(j["F"], "F");
  if (j.contains("lambdas") && !j["lambdas"].is_null()) {
    if (!j["lambdas"].is_array()) throw ParseError("lambdas: expected an array of numbers");
    std::vector<double> l;
    for (const auto& v : j["lambdas"]) {
      if (!v.is_number()) throw ParseError("lambdas: entries must be numbers");
      l.push_back(v.get<double>());
    }
    in.lambdas = std::move(l);
  }
  if (j.contains("mu")) {
    if (!j["mu"].is_number()) throw ParseError("mu: expected a number");
    in.mu = j["mu"].get<double>();
  }
  if (j.contains("mu_c")) {
    if (!j["mu_c"].is_number()) throw ParseError("mu_c: expected a number");
    in.mu_c = j["mu_c"].get<double>();
  }
  if (j.contains("det_f") && !j["det_f"].is_null()) {
    if (!j["det_f"].is_number()) throw ParseError("det_f: expected a number");
    in.det_f = j["det_f"].get<double>();
  }
  return in;
}

void validate_input(const ProblemInput& in) {
  if (in.f.has_value() == in.lambdas.has_value())
    throw std::invalid_argument("input must provide exactly one of F or lambdas");
  if (in.f) {
    const int n = in.f->dim();
    if (n < 2 || n > 8)
      throw std::invalid_argument("F must be n x n with 2 <= n <= 8, got n = " +
                                  std::to_string(n));
  } else {
    const size_t n = in.lambdas->size();
    if (n < 2 || n > 8)
      throw std::invalid_argument("lambdas must have between 2 and 8 entries");
  }
  MaterialParams check(in.mu, in.mu_c);
  (void)check;
}

json family_to_json(const Family& f) {
  json j;
  j["kind"] = to_string(f.kind);
  if (f.kind == FamilyKind::circle) {
    j["base"] = std::vector<double>(f.base.begin(), f.base.end());
    j["radius"] = f.radius;
    j["cos_axis"] = f.cos_axis;
    j["sin_axis"] = f.sin_axis;
  } else if (f.kind == FamilyKind::two_sphere) {
    j["q0"] = f.q0;
    j["rho"] = f.rho;
  }
  return j;
}

Family family_from_json(const json& j) {
  Family f;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "circle") {
    f.kind = FamilyKind::circle;
    const auto base = j.at("base").get<std::vector<double>>();
    std::copy(base.begin(), base.end(), f.base.begin());
    f.radius = j.at("radius").get<double>();
    f.cos_axis = j.at("cos_axis").get<int>();
    f.sin_axis = j.at("sin_axis").get<int>();
  } else if (kind == "two_sphere") {
    f.kind = FamilyKind::two_sphere;
    f.q0 = j.at("q0").get<double>();
    f.rho = j.at("rho").get<double>();
  } else if (kind != "isolated") {
    throw ParseError("family: unknown kind '" + kind + "'");
  }
  return f;
}

Label label_from_string(const std::string& s) {
  if (s == "min") return Label::min;
  if (s == "max") return Label::max;
  if (s == "saddle") return Label::saddle;
  if (s == "degenerate") return Label::degenerate;
  throw ParseError("unknown label '" + s + "'");
}

GlobalFlag global_from_string(const std::string& s) {
  if (s == "none") return GlobalFlag::none;
  if (s == "global_min") return GlobalFlag::global_min;
  if (s == "global_max") return GlobalFlag::global_max;
  throw ParseError("unknown global flag '" + s + "'");
}

LambdaPattern pattern_from_string(const std::string& s) {
  if (s == "n2") return LambdaPattern::n2;
  if (s == "distinct") return LambdaPattern::distinct;
  if (s == "lambda1_eq_lambda2") return LambdaPattern::first_pair_equal;
  if (s == "lambda2_eq_lambda3") return LambdaPattern::last_pair_equal;
  if (s == "all_equal") return LambdaPattern::all_equal;
  throw ParseError("unknown lambda pattern '" + s + "'");
}

Regime regime_from_string(const std::string& s) {
  if (s == "mu_gt_muc") return Regime::mu_gt_muc;
  if (s == "grioli") return Regime::grioli;
  if (s == "mu_lt_muc") return Regime::mu_lt_muc;
  throw ParseError("unknown regime '" + s + "'");
}

json point_to_json(const CriticalPoint& p) {
  json j;
  j["name"] = p.name;
  j["rotation"] = matrix_to_json(p.rotation.matrix());
  if (p.quaternion) {
    const Vec4& q = p.quaternion->coords();
    j["quaternion"] = std::vector<double>(q.begin(), q.end());
  } else {
    j["quaternion"] = nullptr;
  }
  j["family"] = family_to_json(p.family);
  j["energy"] = p.energy;
  j["spectrum"] = p.spectrum;
  j["label"] = to_string(p.label);
  j["global"] = to_string(p.global_flag);
  return j;
}

CriticalPoint point_from_json(const json& j) {
  Rotation rot = Rotation::unchecked(matrix_from_json(j.at("rotation"), "rotation"));
  std::optional<UnitQuaternion> quat;
  if (!j.at("quaternion").is_null()) {
    const auto q = j.at("quaternion").get<std::vector<double>>();
    if (q.size() != 4) throw ParseError("quaternion: expected 4 components");
    quat = UnitQuaternion(Vec4{q[0], q[1], q[2], q[3]});
  }
  CriticalPoint p{j.at("name").get<std::string>(),
                  std::move(rot),
                  std::move(quat),
                  family_from_json(j.at("family")),
                  j.at("energy").get<double>(),
                  j.at("spectrum").get<std::vector<double>>(),
                  label_from_string(j.at("label").get<std::string>()),
                  global_from_string(j.at("global").get<std::string>())};
  return p;
}

json catalog_to_json(const Catalog& c) {
  json j;
  j["n"] = c.n;
  j["lambdas"] = c.lambdas;
  j["pattern"] = to_string(c.pattern);
  json pts = json::array();
  for (const auto& p : c.points) pts.push_back(point_to_json(p));
  j["critical_points"] = std::move(pts);
  j["boundary_notes"] = c.boundary_notes;
  j["warnings"] = c.warnings;
  return j;
}

Catalog catalog_from_json(const json& j) {
  Catalog c;
  c.n = j.at("n").get<int>();
  c.lambdas = j.at("lambdas").get<std::vector<double>>();
  c.pattern = pattern_from_string(j.at("pattern").get<std::string>());
  for (const auto& pj : j.at("critical_points")) c.points.push_back(point_from_json(pj));
  c.boundary_notes = j.at("boundary_notes").get<std::vector<std::string>>();
  c.warnings = j.at("warnings").get<std::vector<std::string>>();
  return c;
}

json feasibility_to_json(const FeasibilityReport& f) {
  json j;
  j["product_lambda"] = f.product_lambda;
  j["required_value"] = f.required_value;
  j["physically_consistent"] = f.physically_consistent;
  j["note"] = f.note;
  return j;
}

FeasibilityReport feasibility_from_json(const json& j) {
  FeasibilityReport f;
  f.product_lambda = j.at("product_lambda").get<double>();
  f.required_value = j.at("required_value").get<double>();
  f.physically_consistent = j.at("physically_consistent").get<bool>();
  f.note = j.at("note").get<std::string>();
  return f;
}

json reduce_to_json_obj(const ReduceReport& r) {
  json j;
  j["command"] = "reduce";
  j["input"] = input_to_json(r.input);
  j["regime"] = to_string(r.regime);
  j["lambdas"] = r.lambdas;
  j["rotation_part"] = r.lambdas.empty() ? json(nullptr) : matrix_to_json(r.rotation_part);
  j["basis_change"] = r.lambdas.empty() ? json(nullptr) : matrix_to_json(r.basis_change);
  j["coincident_with_next"] = std::vector<bool>(r.coincident_with_next);
  j["product_lambda"] = r.product_lambda;
  j["product_target"] = r.product_target;
  j["notes"] = r.notes;
  return j;
}

ReduceReport reduce_from_json_obj(const json& j) {
  ReduceReport r;
  r.input = input_from_json(j.at("input"));
  r.regime = regime_from_string(j.at("regime").get<std::string>());
  r.lambdas = j.at("lambdas").get<std::vector<double>>();
  if (!j.at("rotation_part").is_null())
    r.rotation_part = matrix_from_json(j.at("rotation_part"), "rotation_part");
  if (!j.at("basis_change").is_null())
    r.basis_change = matrix_from_json(j.at("basis_change"), "basis_change");
  r.coincident_with_next = j.at("coincident_with_next").get<std::vector<bool>>();
  r.product_lambda = j.at("product_lambda").get<double>();
  r.product_target = j.at("product_target").get<double>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace

ProblemInput parse_problem_input(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("input document: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("input document: expected a JSON object");
  ProblemInput in = input_from_json(j);
  validate_input(in);
  return in;
}

Mat parse_matrix_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    int col = 0;
    while (std::getline(cells, cell, ',')) {
      ++col;
      try {
        size_t pos = 0;
        row.push_back(std::stod(cell, &pos));
        while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
        if (pos != cell.size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw ParseError("csv matrix: line " + std::to_string(lineno) + ", field " +
                         std::to_string(col) + ": cannot parse '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("csv matrix: empty document");
  const size_t n = rows.size();
  Mat m(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw ParseError("csv matrix: row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " fields, expected " +
                       std::to_string(n));
    for (size_t j2 = 0; j2 < n; ++j2) m(static_cast<int>(i), static_cast<int>(j2)) = rows[i][j2];
  }
  return m;
}

Mat parse_matrix_text(const std::string& text) {
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("matrix document: ") + e.what());
    }
    return matrix_from_json(j, "matrix");
  }
  return parse_matrix_csv(text);
}

ReduceReport build_reduce_report(const ProblemInput& input) {
  validate_input(input);
  const MaterialParams p = input.params();
  ReduceReport r;
  r.input = input;

  if (input.f) {
    const DeformationGradient f(*input.f);
    const ReducedProblem red = reduce(f, p);
    r.regime = red.regime;
    r.lambdas = red.lambdas;
    r.rotation_part = red.rotation_part;
    r.basis_change = red.basis_change;
    r.coincident_with_next = red.coincident_with_next;
    const double ratio = (p.mu - p.mu_c) / p.mu;
    r.product_target = std::pow(ratio, f.dim()) * f.det();
    r.product_lambda = 1.0;
    for (double l : r.lambdas) r.product_lambda *= l;
    if (red.regime == Regime::grioli) {
      r.product_lambda = 0.0;
      r.product_target = 0.0;
      r.notes.push_back(
          "grioli regime (mu = mu_c): the scaled gradient vanishes, no singular values; "
          "criticality reduces to F R^T = R F^T");
    }
  } else {
    // reduce of a lambdas-only input is the identity reduction
    r.lambdas = *input.lambdas;
    for (size_t i = 0; i < r.lambdas.size(); ++i) {
      if (!(r.lambdas[i] > 0.0)) throw std::invalid_argument("lambdas must be positive");
      if (i + 1 < r.lambdas.size() && r.lambdas[i] < r.lambdas[i + 1])
        throw std::invalid_argument("lambdas must be sorted decreasing");
    }
    const int n = static_cast<int>(r.lambdas.size());
    r.regime = (p.mu == p.mu_c) ? Regime::grioli
                                : (p.mu > p.mu_c ? Regime::mu_gt_muc : Regime::mu_lt_muc);
    r.rotation_part = Mat::identity(n);
    r.basis_change = Mat::identity(n);
    r.coincident_with_next.assign(static_cast<size_t>(n - 1), false);
    const double ctol = numerics().coincidence_tol * std::max(1.0, r.lambdas.front());
    for (int i = 0; i + 1 < n; ++i)
      r.coincident_with_next[static_cast<size_t>(i)] =
          (r.lambdas[static_cast<size_t>(i)] - r.lambdas[static_cast<size_t>(i + 1)] <= ctol);
    const double ratio = (p.mu - p.mu_c) / p.mu;
    r.product_target = std::pow(ratio, n) * input.det_f.value_or(1.0);
    r.product_lambda = 1.0;
    for (double l : r.lambdas) r.product_lambda *= l;
  }

  if (r.regime == Regime::mu_lt_muc)
    r.notes.push_back(
        "mu < mu_c: classification labels of the reduced problem flip (min <-> max) when "
        "transported to the original energy");
  return r;
}

CatalogReport build_catalog_report(const ProblemInput& input) {
  validate_input(input);
  const MaterialParams p = input.params();
  if (p.mu == p.mu_c)
    throw std::invalid_argument(
        "catalog: no closed-form catalog in the grioli regime (mu = mu_c); use `verify` "
        "to test individual rotations via F R^T = R F^T");

  CatalogReport rep;
  rep.input = input;
  rep.version = kVersion;
  rep.tol_crit = numerics().criticality_tol;
  rep.tol_gate = numerics().gate_tol;
  rep.tol_match = numerics().match_tol;

  std::vector<double> lambdas;
  double det_f = input.det_f.value_or(1.0);
  if (input.f) {
    const int n = input.f->dim();
    if (n != 2 && n != 3)
      throw std::invalid_argument(
          "catalog: closed-form catalogs exist for n in {2, 3}; use `verify` for the "
          "generic criticality/classification test (any 2 <= n <= 8)");
    rep.reduction = build_reduce_report(input);
    lambdas = rep.reduction->lambdas;
    det_f = DeformationGradient(*input.f).det();
    rep.regime = rep.reduction->regime;
  } else {
    lambdas = *input.lambdas;
    if (lambdas.size() != 2 && lambdas.size() != 3)
      throw std::invalid_argument(
          "catalog: closed-form catalogs exist for n in {2, 3}; use `verify` for the "
          "generic criticality/classification test (any 2 <= n <= 8)");
    rep.regime = (p.mu > p.mu_c) ? Regime::mu_gt_muc : Regime::mu_lt_muc;
  }

  rep.catalog = (lambdas.size() == 2)
                    ? catalog_n2(lambdas[0], lambdas[1])
                    : catalog_n3(lambdas[0], lambdas[1], lambdas[2]);

  if (rep.regime == Regime::mu_lt_muc) {
    rep.labels_transferred = true;
    for (auto& pt : rep.catalog.points) {
      pt.label = classification_transfer(pt.label, p);
      if (pt.global_flag == GlobalFlag::global_min)
        pt.global_flag = GlobalFlag::global_max;
      else if (pt.global_flag == GlobalFlag::global_max)
        pt.global_flag = GlobalFlag::global_min;
    }
    rep.catalog.warnings.push_back(
        "mu < mu_c: labels and global flags were transferred (min <-> max) from the "
        "reduced diagonal problem; the listed rotations are critical points of the "
        "reduced cost");
  }

  rep.feasibility = feasibility(rep.catalog.lambdas, p, det_f);
  return rep;
}

VerifyReport build_verify_report(const ProblemInput& input, const Mat& rotation,
                                 double tol_crit) {
  validate_input(input);
  const MaterialParams p = input.params();

  VerifyReport rep;
  rep.input = input;
  rep.rotation = rotation;
  rep.criticality_tol = tol_crit;

  Mat f_eff;
  MaterialParams p_eff(1.0, 0.0);
  if (input.f) {
    f_eff = *input.f;
    p_eff = p;
    rep.regime = (p.mu == p.mu_c) ? Regime::grioli
                                  : (p.mu > p.mu_c ? Regime::mu_gt_muc : Regime::mu_lt_muc);
  } else {
    // lambdas input: verify against the reduced diagonal problem
    f_eff = Mat::diag(*input.lambdas);
    rep.regime = (p.mu == p.mu_c) ? Regime::grioli
                                  : (p.mu > p.mu_c ? Regime::mu_gt_muc : Regime::mu_lt_muc);
  }
  const DeformationGradient f(f_eff);
  if (rotation.dim() != f.dim())
    throw std::invalid_argument("verify: rotation is " + std::to_string(rotation.dim()) +
                                "x" + std::to_string(rotation.dim()) + " but the problem is " +
                                std::to_string(f.dim()) + "-dimensional");
  const Rotation r(rotation);  // rejects non-rotations with diagnostics

  const CriticalityCheck check = (rep.regime == Regime::grioli)
                                     ? grioli_is_critical(r, f, tol_crit)
                                     : is_critical(r, f, p_eff, tol_crit);
  rep.critical = check.critical;
  rep.criticality_residual = check.residual;

  if (check.critical) {
    const RestrictedHessian h = restricted_hessian(r, f, p_eff);
    rep.spectrum = h.spectrum;
    rep.label = to_string(classify(h.spectrum));
  }
  return rep;
}

SolveReport build_solve_report(const ProblemInput& input, const SolverConfig& cfg) {
  validate_input(input);
  const MaterialParams p = input.params();

  SolveReport rep;
  rep.input = input;
  rep.seed = cfg.seed;
  rep.starts = cfg.num_starts;

  if (input.f) {
    const DeformationGradient f(*input.f);
    rep.result = multistart(f, p, cfg);
  } else {
    // lambdas input: solve the reduced diagonal problem
    const DeformationGradient f(Mat::diag(*input.lambdas));
    rep.result = multistart(f, MaterialParams(1.0, 0.0), cfg);
  }
  rep.lambdas = rep.result.reduction.lambdas;
  return rep;
}

std::string to_json(const ReduceReport& r) { return reduce_to_json_obj(r).dump(2); }

std::string to_json(const CatalogReport& r) {
  json j;
  j["command"] = "catalog";
  j["input"] = input_to_json(r.input);
  j["regime"] = to_string(r.regime);
  j["labels_transferred"] = r.labels_transferred;
  j["reduction"] = r.reduction ? reduce_to_json_obj(*r.reduction) : json(nullptr);
  j["catalog"] = catalog_to_json(r.catalog);
  j["feasibility"] = feasibility_to_json(r.feasibility);
  j["tolerances"] = {{"crit", r.tol_crit}, {"gate", r.tol_gate}, {"match", r.tol_match}};
  j["version"] = r.version;
  return j.dump(2);
}

CatalogReport catalog_report_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("catalog report: ") + e.what());
  }
  CatalogReport r;
  r.input = input_from_json(j.at("input"));
  r.regime = regime_from_string(j.at("regime").get<std::string>());
  r.labels_transferred = j.at("labels_transferred").get<bool>();
  if (!j.at("reduction").is_null()) r.reduction = reduce_from_json_obj(j.at("reduction"));
  r.catalog = catalog_from_json(j.at("catalog"));
  r.feasibility = feasibility_from_json(j.at("feasibility"));
  r.tol_crit = j.at("tolerances").at("crit").get<double>();
  r.tol_gate = j.at("tolerances").at("gate").get<double>();
  r.tol_match = j.at("tolerances").at("match").get<double>();
  r.version = j.at("version").get<std::string>();
  return r;
}

std::string to_json(const VerifyReport& r) {
  json j;
  j["command"] = "verify";
  j["input"] = input_to_json(r.input);
  j["rotation"] = matrix_to_json(r.rotation);
  j["regime"] = to_string(r.regime);
  j["critical"] = r.critical;
  j["criticality_residual"] = r.criticality_residual;
  j["criticality_tol"] = r.criticality_tol;
  j["spectrum"] = r.spectrum ? json(*r.spectrum) : json(nullptr);
  j["label"] = r.label ? json(*r.label) : json(nullptr);
  return j.dump(2);
}

std::string to_json(const SolveReport& r) {
  json j;
  j["command"] = "solve";
  j["input"] = input_to_json(r.input);
  j["seed"] = r.seed;
  j["starts"] = r.starts;
  j["lambdas"] = r.lambdas;
  json outcomes = json::array();
  for (size_t i = 0; i < r.result.outcomes.size(); ++i) {
    const SolveOutcome& o = r.result.outcomes[i];
    json oj;
    oj["start"] = i;
    oj["rotation"] = matrix_to_json(o.rotation.matrix());
    oj["energy"] = o.energy;
    oj["gradient_norm"] = o.gradient_norm;
    oj["iterations"] = o.iterations;
    oj["stalled"] = o.stalled;
    oj["matched"] = o.matched;
    oj["match_distance"] = o.match_distance;
    outcomes.push_back(std::move(oj));
  }
  j["outcomes"] = std::move(outcomes);
  j["hits"] = r.result.hits;
  j["unmatched"] = r.result.unmatched;
  return j.dump(2);
}

namespace {

void csv_row(std::ostringstream& os, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '\n';
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

std::string join17(const std::vector<double>& v, char sep = ';') {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += fmt17(v[i]);
  }
  return s;
}

std::string matrix_row_major(const Mat& m) {
  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(m.dim()) * m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) flat.push_back(m(i, j));
  return join17(flat);
}

}  // namespace

std::string to_csv(const ReduceReport& r) {
  std::ostringstream os;
  csv_row(os, {"regime", "lambdas", "product_lambda", "product_target"});
  csv_row(os, {to_string(r.regime), quote(join17(r.lambdas)), fmt17(r.product_lambda),
               fmt17(r.product_target)});
  return os.str();
}

std::string to_csv(const CatalogReport& r) {
  std::ostringstream os;
  csv_row(os, {"name", "label", "global", "family", "energy", "spectrum", "rotation",
               "quaternion"});
  for (const auto& p : r.catalog.points) {
    std::string quat;
    if (p.quaternion) {
      const Vec4& q = p.quaternion->coords();
      quat = join17(std::vector<double>(q.begin(), q.end()));
    }
    csv_row(os, {quote(p.name), to_string(p.label), to_string(p.global_flag),
                 to_string(p.family.kind), fmt17(p.energy), quote(join17(p.spectrum)),
                 quote(matrix_row_major(p.rotation.matrix())), quote(quat)});
  }
  return os.str();
}

std::string to_csv(const VerifyReport& r) {
  std::ostringstream os;
  csv_row(os, {"critical", "residual", "tol", "label", "spectrum"});
  csv_row(os, {r.critical ? "true" : "false", fmt17(r.criticality_residual),
               fmt17(r.criticality_tol), r.label.value_or(""),
               quote(r.spectrum ? join17(*r.spectrum) : "")});
  return os.str();
}

std::string to_csv(const SolveReport& r) {
  std::ostringstream os;
  csv_row(os, {"start", "matched", "match_distance", "energy", "gradient_norm",
               "iterations", "stalled"});
  for (size_t i = 0; i < r.result.outcomes.size(); ++i) {
    const SolveOutcome& o = r.result.outcomes[i];
    csv_row(os, {std::to_string(i), quote(o.matched), fmt17(o.match_distance),
                 fmt17(o.energy), fmt17(o.gradient_norm), std::to_string(o.iterations),
                 o.stalled ? "true" : "false"});
  }
  return os.str();
}

std::string to_text(const ReduceReport& r) {
  std::ostringstream os;
  os << "regime: " << to_string(r.regime) << "\n";
  if (!r.lambdas.empty()) {
    os << "lambdas:";
    for (double l : r.lambdas) os << " " << fmt17(l);
    os << "\n";
    os << "product identity: prod(lambda) = " << fmt17(r.product_lambda)
       << ", ((mu-mu_c)/mu)^n det F = " << fmt17(r.product_target)
       << ", residual = " << fmt17(std::fabs(r.product_lambda - r.product_target)) << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string to_text(const CatalogReport& r) {
  std::ostringstream os;
  os << "regime: " << to_string(r.regime)
     << (r.labels_transferred ? " (labels transferred min <-> max)" : "") << "\n";
  os << "lambdas:";
  for (double l : r.catalog.lambdas) os << " " << fmt17(l);
  os << "   pattern: " << to_string(r.catalog.pattern) << "\n";
  os << "feasibility: " << (r.feasibility.physically_consistent ? "consistent" : "INCONSISTENT")
     << "  (" << r.feasibility.note << ")\n";
  for (const auto& n : r.catalog.boundary_notes) os << "boundary: " << n << "\n";
  for (const auto& w : r.catalog.warnings) os << "warning: " << w << "\n";
  os << "critical points (" << r.catalog.points.size() << "):\n";
  for (const auto& p : r.catalog.points) {
    os << "  " << p.name << "  family=" << to_string(p.family.kind)
       << "  energy=" << fmt17(p.energy) << "  label=" << to_string(p.label);
    if (p.global_flag != GlobalFlag::none) os << "  [" << to_string(p.global_flag) << "]";
    os << "\n    spectrum:";
    for (double s : p.spectrum) os << " " << fmt17(s);
    os << "\n";
  }
  return os.str();
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "regime: " << to_string(r.regime) << "\n";
  os << "criticality residual: " << fmt17(r.criticality_residual) << " (tol "
     << fmt17(r.criticality_tol) << ") -> " << (r.critical ? "CRITICAL" : "not critical")
     << "\n";
  if (r.spectrum) {
    os << "restricted-Hessian spectrum:";
    for (double s : *r.spectrum) os << " " << fmt17(s);
    os << "\nclassification: " << *r.label << "\n";
  }
  return os.str();
}

std::string to_text(const SolveReport& r) {
  std::ostringstream os;
  os << "multistart: " << r.starts << " starts, seed " << r.seed << "\n";
  os << "lambdas:";
  for (double l : r.lambdas) os << " " << fmt17(l);
  os << "\n";
  os << "coverage:\n";
  for (const auto& [name, count] : r.result.hits)
    os << "  " << name << ": " << count << "\n";
  os << "unmatched: " << r.result.unmatched << "\n";
  double worst_grad = 0.0, worst_dist = 0.0;
  for (const auto& o : r.result.outcomes) {
    worst_grad = std::max(worst_grad, o.gradient_norm);
    if (o.match_distance >= 0.0) worst_dist = std::max(worst_dist, o.match_distance);
  }
  os << "max gradient norm at limits: " << fmt17(worst_grad) << "\n";
  os << "max match distance: " << fmt17(worst_dist) << "\n";
  return os.str();
}

}  // namespace cosserat
