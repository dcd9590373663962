#include "cosserat/energy.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cosserat/decompositions.hpp"
#include "cosserat/numerics.hpp"

namespace cosserat {

MaterialParams::MaterialParams(double mu_, double mu_c_) : mu(mu_), mu_c(mu_c_) {
  if (!(mu > 0.0))
    throw std::invalid_argument("MaterialParams: mu must be positive, got " +
                                std::to_string(mu_));
  if (!(mu_c >= 0.0))
    throw std::invalid_argument("MaterialParams: mu_c must be non-negative, got " +
                                std::to_string(mu_c_));
}

DeformationGradient::DeformationGradient(Mat f) : f_(std::move(f)) {
  if (!f_.all_finite())
    throw std::invalid_argument("DeformationGradient: entries must be finite");
  det_ = determinant(f_);
  if (!(det_ > 0.0)) {
    std::ostringstream msg;
    msg << "DeformationGradient: det F = " << det_ << " must be positive";
    throw std::invalid_argument(msg.str());
  }
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::mu_gt_muc: return "mu_gt_muc";
    case Regime::grioli: return "grioli";
    case Regime::mu_lt_muc: return "mu_lt_muc";
  }
  return "?";
}

Mat ReducedProblem::to_diagonal_frame(const Mat& r) const {
  return basis_change * transpose(rotation_part) * r * transpose(basis_change);
}

Mat ReducedProblem::from_diagonal_frame(const Mat& r_bar) const {
  return rotation_part * transpose(basis_change) * r_bar * basis_change;
}

double energy(const Rotation& r, const DeformationGradient& f, const MaterialParams& p) {
  require_same_dim(r.matrix(), f.matrix(), "energy");
  const Mat e = transpose(r.matrix()) * f.matrix() - Mat::identity(f.dim());
  const Mat s = sym_part(e);
  const Mat k = skew_part(e);
  return p.mu * frobenius_inner(s, s) + p.mu_c * frobenius_inner(k, k);
}

double extended_energy(const Mat& m, const Mat& f, const MaterialParams& p) {
  require_same_dim(m, f, "extended_energy");
  const Mat ftm = transpose(f) * m;
  const double quad = frobenius_inner(transpose(ftm), ftm);  // tr(F^T M F^T M)
  const double lin = trace(ftm);
  const double ff = frobenius_inner(f, f);
  return 0.5 * (p.mu - p.mu_c) * quad - 2.0 * p.mu * lin + 0.5 * (p.mu + p.mu_c) * ff +
         p.mu * f.dim();
}

double extended_energy(const Mat& m, const DeformationGradient& f, const MaterialParams& p) {
  return extended_energy(m, f.matrix(), p);
}

Mat energy_gradient(const Mat& r, const DeformationGradient& f, const MaterialParams& p) {
  require_same_dim(r, f.matrix(), "energy_gradient");
  return (p.mu - p.mu_c) * (f.matrix() * transpose(r) * f.matrix()) -
         2.0 * p.mu * f.matrix();
}

double ambient_hessian_form(const Mat& r, const DeformationGradient& f,
                            const MaterialParams& p, const Mat& u, const Mat& v) {
  require_same_dim(u, f.matrix(), "ambient_hessian_form");
  require_same_dim(u, v, "ambient_hessian_form");
  (void)r;  // the prolongation is quadratic, its second derivative is constant
  const Mat ftu = transpose(f.matrix()) * u;
  const Mat ftv = transpose(f.matrix()) * v;
  return (p.mu - p.mu_c) * frobenius_inner(transpose(ftu), ftv);
}

ReducedProblem reduce(const DeformationGradient& f, const MaterialParams& p) {
  const int n = f.dim();
  ReducedProblem out;
  if (p.mu == p.mu_c) {
    out.regime = Regime::grioli;
    out.rotation_part = Mat::identity(n);
    out.basis_change = Mat::identity(n);
    return out;
  }
  out.regime = (p.mu > p.mu_c) ? Regime::mu_gt_muc : Regime::mu_lt_muc;

  const double ratio = (p.mu - p.mu_c) / p.mu;
  const Mat f_hat = ratio * f.matrix();

  // Orthogonal-times-SPD factorization of F_hat. For mu > mu_c this is the
  // polar decomposition in SO(n); for mu < mu_c with n odd the orthogonal
  // factor has det -1 (F_hat has negative determinant there).
  const Mat stretch = symmetric_sqrt(transpose(f_hat) * f_hat);
  const Mat ortho = f_hat * inverse(stretch);

  SymmetricEigen eig = symmetric_eigen(stretch);
  // Force the eigenvector matrix into SO(n); flipping a column leaves the
  // reconstruction unchanged.
  if (determinant(eig.eigenvectors) < 0.0) {
    const int last = n - 1;
    for (int i = 0; i < n; ++i) eig.eigenvectors(i, last) = -eig.eigenvectors(i, last);
  }

  out.lambdas = eig.eigenvalues;
  out.rotation_part = ortho;
  out.basis_change = transpose(eig.eigenvectors);  // stretch = Q^T D Q

  out.coincident_with_next.assign(static_cast<size_t>(n > 0 ? n - 1 : 0), false);
  const double tol = numerics().coincidence_tol * std::max(1.0, out.lambdas.front());
  for (int i = 0; i + 1 < n; ++i)
    out.coincident_with_next[static_cast<size_t>(i)] =
        (out.lambdas[static_cast<size_t>(i)] - out.lambdas[static_cast<size_t>(i + 1)] <= tol);
  return out;
}

double reduction_constant(const DeformationGradient& f, const MaterialParams& p) {
  if (p.mu == p.mu_c)
    throw std::invalid_argument("reduction_constant: undefined in the grioli regime");
  const double ratio = (p.mu - p.mu_c) / p.mu;
  const Mat f_hat = ratio * f.matrix();
  const Rotation id(Mat::identity(f.dim()));
  const MaterialParams reduced(1.0, 0.0);
  const double scale = p.mu * p.mu / (p.mu - p.mu_c);
  return energy(id, f, p) - scale * extended_energy(id.matrix(), f_hat, reduced);
}

Label classification_transfer(Label label, const MaterialParams& p) {
  if (p.mu == p.mu_c)
    throw std::invalid_argument(
        "classification_transfer: no transfer defined in the grioli regime");
  if (p.mu > p.mu_c) return label;
  switch (label) {
    case Label::min: return Label::max;
    case Label::max: return Label::min;
    default: return label;
  }
}

}  // namespace cosserat
