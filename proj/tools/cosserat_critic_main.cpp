// cosserat-critic: reduce, catalog, verify, and cross-validate critical points
// of the rotational free energy W(R; F) = mu ||sym(R^T F - I)||^2
//                                       + mu_c ||skew(R^T F - I)||^2.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cosserat/numerics.hpp"
#include "cosserat/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitUnmatched = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cosserat::ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

struct CommonOptions {
  std::string input_path;
  std::string matrix_csv_path;
  std::string out_path;
  std::string format = "json";
  std::optional<double> mu;
  std::optional<double> mu_c;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--input", opts.input_path,
                  "problem document (JSON: F or lambdas, mu, mu_c, optional det_f)");
  cmd->add_option("--matrix-csv", opts.matrix_csv_path,
                  "read F from a CSV file (plain comma-separated rows, no header)");
  cmd->add_option("--out", opts.out_path, "write the machine report to this file");
  cmd->add_option("--format", opts.format, "machine report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--mu", opts.mu, "override mu");
  cmd->add_option("--mu-c", opts.mu_c, "override mu_c");
}

cosserat::ProblemInput load_input(const CommonOptions& opts) {
  cosserat::ProblemInput in;
  if (!opts.input_path.empty())
    in = cosserat::parse_problem_input(read_file(opts.input_path));
  if (!opts.matrix_csv_path.empty()) {
    in.f = cosserat::parse_matrix_csv(read_file(opts.matrix_csv_path));
    in.lambdas.reset();
  }
  if (opts.mu) in.mu = *opts.mu;
  if (opts.mu_c) in.mu_c = *opts.mu_c;
  if (!in.f && !in.lambdas)
    throw std::invalid_argument("no problem given: provide --input and/or --matrix-csv");
  return in;
}

template <typename Report>
void emit(const Report& report, const CommonOptions& opts) {
  std::cout << cosserat::to_text(report);
  if (!opts.out_path.empty())
    write_file(opts.out_path,
               opts.format == "csv" ? cosserat::to_csv(report) : cosserat::to_json(report));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critical points of the Cosserat rotational free energy"};
  app.require_subcommand(1);

  CommonOptions reduce_opts, catalog_opts, verify_opts, solve_opts;
  std::string rotation_path;
  double tol_crit = cosserat::numerics().criticality_tol;
  double tol_grad = 1e-10;
  double tol_zero = -1.0;
  double tol_gate = -1.0;
  double tol_match = -1.0;
  std::uint64_t seed = 0;
  int starts = 200;

  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "singular values and regime of the scaled gradient");
  add_common(reduce_cmd, reduce_opts);

  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "closed-form critical-point catalog (n = 2 or 3)");
  add_common(catalog_cmd, catalog_opts);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "criticality and classification of a user-supplied rotation (2 <= n <= 8)");
  add_common(verify_cmd, verify_opts);
  verify_cmd->add_option("--rotation", rotation_path,
                         "rotation matrix file (JSON nested array or CSV)")
      ->required();

  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "seeded multistart descent cross-validated against the catalog");
  add_common(solve_cmd, solve_opts);
  solve_cmd->add_option("--seed", seed, "random seed");
  solve_cmd->add_option("--starts", starts, "number of random starts");
  solve_cmd->add_option("--tol-grad", tol_grad, "gradient-norm stopping tolerance");

  for (CLI::App* cmd : {reduce_cmd, catalog_cmd, verify_cmd, solve_cmd}) {
    cmd->add_option("--tol-crit", tol_crit, "criticality residual tolerance");
    cmd->add_option("--tol-zero", tol_zero, "relative zero-eigenvalue tolerance");
    cmd->add_option("--tol-gate", tol_gate, "catalog existence-gate tolerance");
    cmd->add_option("--tol-match", tol_match, "solver/catalog match distance");
  }

  CLI11_PARSE(app, argc, argv);

  cosserat::numerics().criticality_tol = tol_crit;
  if (tol_zero > 0.0) cosserat::numerics().zero_eig_rel_tol = tol_zero;
  if (tol_gate > 0.0) cosserat::numerics().gate_tol = tol_gate;
  if (tol_match > 0.0) cosserat::numerics().match_tol = tol_match;

  try {
    if (reduce_cmd->parsed()) {
      emit(cosserat::build_reduce_report(load_input(reduce_opts)), reduce_opts);
      return kExitOk;
    }
    if (catalog_cmd->parsed()) {
      emit(cosserat::build_catalog_report(load_input(catalog_opts)), catalog_opts);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const cosserat::Mat rotation =
          cosserat::parse_matrix_text(read_file(rotation_path));
      emit(cosserat::build_verify_report(load_input(verify_opts), rotation, tol_crit),
           verify_opts);
      return kExitOk;
    }
    if (solve_cmd->parsed()) {
      cosserat::SolverConfig cfg;
      cfg.seed = seed;
      cfg.num_starts = starts;
      cfg.grad_tol = tol_grad;
      if (tol_match > 0.0) cfg.match_tol = tol_match;
      const cosserat::SolveReport report =
          cosserat::build_solve_report(load_input(solve_opts), cfg);
      emit(report, solve_opts);
      if (report.result.unmatched > 0) {
        std::cerr << "error: " << report.result.unmatched
                  << " converged limit(s) did not match any cataloged critical point\n";
        return kExitUnmatched;
      }
      return kExitOk;
    }
  } catch (const cosserat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
