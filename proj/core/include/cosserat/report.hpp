#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosserat/catalog.hpp"
#include "cosserat/energy.hpp"
#include "cosserat/solver.hpp"

namespace cosserat {

/// Malformed input documents (JSON/CSV); distinguished from semantic
/// validation failures so the CLI can map them to different exit codes.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Problem document: exactly one of F (row-major nested arrays) or lambdas,
/// plus the moduli. det_f optionally accompanies a lambdas-only input for the
/// feasibility check (defaults to the isochoric value 1).
struct ProblemInput {
  std::optional<Mat> f;
  std::optional<std::vector<double>> lambdas;
  double mu = 1.0;
  double mu_c = 0.0;
  std::optional<double> det_f;

  MaterialParams params() const { return MaterialParams(mu, mu_c); }
};

ProblemInput parse_problem_input(const std::string& json_text);

/// Plain comma-separated rows, no header.
Mat parse_matrix_csv(const std::string& text);

/// Autodetects a JSON nested array (first non-space '[') or CSV rows.
Mat parse_matrix_text(const std::string& text);

struct ReduceReport {
  ProblemInput input;
  Regime regime = Regime::mu_gt_muc;
  std::vector<double> lambdas;
  Mat rotation_part;
  Mat basis_change;
  std::vector<bool> coincident_with_next;
  double product_lambda = 0.0;
  double product_target = 0.0;   // ((mu-mu_c)/mu)^n det F
  std::vector<std::string> notes;
};

struct CatalogReport {
  ProblemInput input;
  Regime regime = Regime::mu_gt_muc;
  bool labels_transferred = false;   // mu < mu_c: min/max swapped into original labels
  std::optional<ReduceReport> reduction;  // present for F input
  Catalog catalog;
  FeasibilityReport feasibility;
  std::string version;
  double tol_crit = 0.0, tol_gate = 0.0, tol_match = 0.0;
};

struct VerifyReport {
  ProblemInput input;
  Mat rotation;
  Regime regime = Regime::mu_gt_muc;
  double criticality_residual = 0.0;
  double criticality_tol = 0.0;
  bool critical = false;
  std::optional<std::vector<double>> spectrum;  // present when critical
  std::optional<std::string> label;
};

struct SolveReport {
  ProblemInput input;
  std::uint64_t seed = 0;
  int starts = 0;
  std::vector<double> lambdas;
  MultistartResult result;
};

ReduceReport build_reduce_report(const ProblemInput& input);
CatalogReport build_catalog_report(const ProblemInput& input);
VerifyReport build_verify_report(const ProblemInput& input, const Mat& rotation,
                                 double tol_crit);
SolveReport build_solve_report(const ProblemInput& input, const SolverConfig& cfg);

std::string to_json(const ReduceReport&);
std::string to_json(const CatalogReport&);
std::string to_json(const VerifyReport&);
std::string to_json(const SolveReport&);

/// Inverse of to_json(CatalogReport); the pair round-trips losslessly.
CatalogReport catalog_report_from_json(const std::string& json_text);

std::string to_csv(const ReduceReport&);
std::string to_csv(const CatalogReport&);
std::string to_csv(const VerifyReport&);
std::string to_csv(const SolveReport&);

/// Human-readable console rendering.
std::string to_text(const ReduceReport&);
std::string to_text(const CatalogReport&);
std::string to_text(const VerifyReport&);
std::string to_text(const SolveReport&);

}  // namespace cosserat
