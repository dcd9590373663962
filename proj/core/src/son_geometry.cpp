#include "cosserat/son_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cosserat/decompositions.hpp"
#include "cosserat/numerics.hpp"

namespace cosserat {

Rotation::Rotation(Mat m) : m_(std::move(m)) {
  if (!m_.all_finite())
    throw std::invalid_argument("Rotation: entries must be finite");
  const double tol = numerics().rotation_tol;
  const double orth = orthogonality_residual(m_);
  if (orth > tol) {
    std::ostringstream msg;
    msg << "Rotation: ||R^T R - I||_F = " << orth << " exceeds tolerance " << tol;
    throw std::invalid_argument(msg.str());
  }
  const double det = determinant(m_);
  if (std::fabs(det - 1.0) > tol) {
    std::ostringstream msg;
    if (det < 0.0)
      msg << "Rotation: det R = " << det
          << "; the det = -1 component of O(n) is not supported";
    else
      msg << "Rotation: det R = " << det << " is not 1 within tolerance " << tol;
    throw std::invalid_argument(msg.str());
  }
}

Rotation Rotation::unchecked(Mat m) { return Rotation(std::move(m), Unchecked{}); }

double geodesic_distance(const Rotation& a, const Rotation& b) {
  require_same_dim(a.matrix(), b.matrix(), "geodesic_distance");
  const Mat rel = transpose(a.matrix()) * b.matrix();
  const SymmetricEigen eig = symmetric_eigen(sym_part(rel));
  double acc = 0.0;
  for (double c : eig.eigenvalues) {
    const double cc = std::clamp(c, -1.0, 1.0);
    const double theta = std::acos(cc);
    acc += theta * theta;
  }
  // each planar rotation block contributes its angle twice to sym(rel)
  return std::sqrt(0.5 * acc);
}

Mat sigma_matrix(const Rotation& r, const Mat& euclidean_grad) {
  require_same_dim(r.matrix(), euclidean_grad, "sigma_matrix");
  const Mat gr = transpose(euclidean_grad) * r.matrix();
  return sym_part(gr);  // 1/2 (G^T R + R^T G)
}

Mat embedded_gradient(const Rotation& r, const Mat& euclidean_grad) {
  return euclidean_grad - r.matrix() * sigma_matrix(r, euclidean_grad);
}

CriticalityCheck is_critical(const Rotation& r, const DeformationGradient& f,
                             const MaterialParams& p, double tol) {
  require_same_dim(r.matrix(), f.matrix(), "is_critical");
  const Mat m = f.matrix() * transpose(r.matrix());  // F R^T
  const Mat c = 2.0 * (p.mu - p.mu_c) * skew_part(m * m) - 4.0 * p.mu * skew_part(m);
  const double residual = frobenius_norm(c);
  return {residual <= tol, residual};
}

CriticalityCheck is_critical(const Rotation& r, const DeformationGradient& f,
                             const MaterialParams& p) {
  return is_critical(r, f, p, numerics().criticality_tol);
}

CriticalityCheck grioli_is_critical(const Rotation& r, const DeformationGradient& f,
                                    double tol) {
  require_same_dim(r.matrix(), f.matrix(), "grioli_is_critical");
  const Mat m = f.matrix() * transpose(r.matrix());
  const double residual = 2.0 * frobenius_norm(skew_part(m));  // ||F R^T - R F^T||
  return {residual <= tol, residual};
}

SquareRootCriticality critical_from_square_root(const Mat& x, const DeformationGradient& f,
                                                const MaterialParams& p, double tol) {
  require_same_dim(x, f.matrix(), "critical_from_square_root");
  SquareRootCriticality out;

  const Mat fft = f.matrix() * transpose(f.matrix());
  const Mat xxt = x * transpose(x);
  out.root_residual = frobenius_norm(xxt - fft);
  out.root_matches = out.root_residual <= tol * (1.0 + frobenius_norm(fft));

  const int n = f.dim();
  const Mat lhs = (x - transpose(x)) *
                  ((p.mu - p.mu_c) * (x + transpose(x)) - 2.0 * p.mu * Mat::identity(n));
  const Mat rhs = (p.mu - p.mu_c) * (x * transpose(x) - transpose(x) * x);
  out.condition_residual = frobenius_norm(lhs - rhs);
  out.condition_holds =
      out.condition_residual <= tol * (1.0 + frobenius_norm(lhs) + frobenius_norm(rhs));

  if (out.root_matches && out.condition_holds) {
    Rotation r(transpose(x) * transpose(inverse(f.matrix())));
    const CriticalityCheck check = is_critical(r, f, p);
    out.criticality_residual = check.residual;
    if (!check.critical)
      throw std::logic_error(
          "critical_from_square_root: square-root conditions hold but the recovered "
          "rotation fails the criticality test, residual = " +
          std::to_string(check.residual));
    out.rotation = std::move(r);
  }
  return out;
}

TangentBasis tangent_basis(const Rotation& r) {
  const int n = r.dim();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Mat> dirs;
  dirs.reserve(static_cast<size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Mat a(n);
      a(i, j) = inv_sqrt2;
      a(j, i) = -inv_sqrt2;
      dirs.push_back(r.matrix() * a);
    }
  }
  return TangentBasis{r, std::move(dirs)};
}

RestrictedHessian restricted_hessian(const Rotation& r, const DeformationGradient& f,
                                     const MaterialParams& p) {
  require_same_dim(r.matrix(), f.matrix(), "restricted_hessian");
  TangentBasis basis = tangent_basis(r);
  const Mat grad = energy_gradient(r.matrix(), f, p);
  const Mat sigma = sigma_matrix(r, grad);

  const int d = static_cast<int>(basis.directions.size());
  std::vector<double> h(static_cast<size_t>(d) * d, 0.0);
  for (int j = 0; j < d; ++j) {
    const Mat& uj = basis.directions[static_cast<size_t>(j)];
    const Mat uj_sigma = uj * sigma;
    for (int k = j; k < d; ++k) {
      const Mat& uk = basis.directions[static_cast<size_t>(k)];
      const double val =
          ambient_hessian_form(r.matrix(), f, p, uj, uk) - frobenius_inner(uk, uj_sigma);
      h[static_cast<size_t>(j) * d + k] = val;
      h[static_cast<size_t>(k) * d + j] = val;
    }
  }

  Mat hm(d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) hm(j, k) = h[static_cast<size_t>(j) * d + k];
  SymmetricEigen eig = symmetric_eigen(hm);
  std::vector<double> spectrum(eig.eigenvalues.rbegin(), eig.eigenvalues.rend());

  return RestrictedHessian{d, std::move(h), std::move(spectrum), std::move(basis)};
}

}  // namespace cosserat
