#include "cosserat/quaternion.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cosserat/decompositions.hpp"
#include "cosserat/energy.hpp"
#include "cosserat/numerics.hpp"

namespace cosserat {

namespace {

// Coefficient tensor of the covering map: P_ij(q) = sum_ab M[i][j](a,b) q_a q_b
// with M[i][j] symmetric. Encodes the standard quaternion-to-rotation matrix.
struct QuadForm {
  double m[4][4] = {};
};

const std::array<std::array<QuadForm, 3>, 3>& coefficient_tensor() {
  static const auto tensor = [] {
    std::array<std::array<QuadForm, 3>, 3> t{};
    auto diag = [&](int i, int j, double c0, double c1, double c2, double c3) {
      t[i][j].m[0][0] = c0;
      t[i][j].m[1][1] = c1;
      t[i][j].m[2][2] = c2;
      t[i][j].m[3][3] = c3;
    };
    auto cross = [&](int i, int j, int a, int b, double s) {
      t[i][j].m[a][b] = s;
      t[i][j].m[b][a] = s;
    };
    diag(0, 0, 1, 1, -1, -1);
    diag(1, 1, 1, -1, 1, -1);
    diag(2, 2, 1, -1, -1, 1);
    cross(0, 1, 1, 2, 1.0); cross(0, 1, 0, 3, -1.0);
    cross(0, 2, 1, 3, 1.0); cross(0, 2, 0, 2, 1.0);
    cross(1, 0, 1, 2, 1.0); cross(1, 0, 0, 3, 1.0);
    cross(1, 2, 2, 3, 1.0); cross(1, 2, 0, 1, -1.0);
    cross(2, 0, 1, 3, 1.0); cross(2, 0, 0, 2, -1.0);
    cross(2, 1, 2, 3, 1.0); cross(2, 1, 0, 1, 1.0);
    return t;
  }();
  return tensor;
}

// dP/dq_a evaluated at q (entries linear in q).
Mat quat_matrix_derivative(const Vec4& q, int a) {
  const auto& t = coefficient_tensor();
  Mat d(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int b = 0; b < 4; ++b) acc += t[i][j].m[a][b] * q[static_cast<size_t>(b)];
      d(i, j) = 2.0 * acc;
    }
  return d;
}

// d^2 P / dq_a dq_b (constant).
Mat quat_matrix_second_derivative(int a, int b) {
  const auto& t = coefficient_tensor();
  Mat d(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d(i, j) = 2.0 * t[i][j].m[a][b];
  return d;
}

const MaterialParams& reduced_params() {
  static const MaterialParams p(1.0, 0.0);
  return p;
}

}  // namespace

double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

double norm(const Vec4& a) { return std::sqrt(dot(a, a)); }

UnitQuaternion::UnitQuaternion(const Vec4& q) : q_(q) {
  const double dev = std::fabs(norm(q_) - 1.0);
  if (dev > numerics().quaternion_norm_tol) {
    std::ostringstream msg;
    msg << "UnitQuaternion: | ||q|| - 1 | = " << dev << " exceeds tolerance "
        << numerics().quaternion_norm_tol;
    throw std::invalid_argument(msg.str());
  }
}

UnitQuaternion::UnitQuaternion(double q0, double q1, double q2, double q3)
    : UnitQuaternion(Vec4{q0, q1, q2, q3}) {}

UnitQuaternion UnitQuaternion::normalized(const Vec4& q) {
  const double n = norm(q);
  if (!(n > 0.0) || !std::isfinite(n))
    throw std::invalid_argument("UnitQuaternion::normalized: zero or non-finite input");
  return UnitQuaternion(Vec4{q[0] / n, q[1] / n, q[2] / n, q[3] / n});
}

Mat quat_matrix(const Vec4& q) {
  const double q0 = q[0], q1 = q[1], q2 = q[2], q3 = q[3];
  Mat r(3);
  r(0, 0) = q0 * q0 + q1 * q1 - q2 * q2 - q3 * q3;
  r(0, 1) = 2.0 * (q1 * q2 - q0 * q3);
  r(0, 2) = 2.0 * (q1 * q3 + q0 * q2);
  r(1, 0) = 2.0 * (q1 * q2 + q0 * q3);
  r(1, 1) = q0 * q0 - q1 * q1 + q2 * q2 - q3 * q3;
  r(1, 2) = 2.0 * (q2 * q3 - q0 * q1);
  r(2, 0) = 2.0 * (q1 * q3 - q0 * q2);
  r(2, 1) = 2.0 * (q2 * q3 + q0 * q1);
  r(2, 2) = q0 * q0 - q1 * q1 - q2 * q2 + q3 * q3;
  return r;
}

Rotation quat_to_rotation(const UnitQuaternion& q) {
  const double dev = std::fabs(norm(q.coords()) - 1.0);
  if (dev > 1e-8) {
    std::ostringstream msg;
    msg << "quat_to_rotation: | ||q|| - 1 | = " << dev << " exceeds 1e-8";
    throw std::invalid_argument(msg.str());
  }
  return Rotation::unchecked(quat_matrix(q.coords()));
}

double ambient_lifted_energy(const Vec4& q, std::span<const double> lambdas) {
  if (lambdas.size() != 3)
    throw std::invalid_argument("ambient_lifted_energy: expected 3 singular values");
  return extended_energy(quat_matrix(q), Mat::diag(lambdas), reduced_params());
}

double lifted_energy(const UnitQuaternion& q, std::span<const double> lambdas) {
  return ambient_lifted_energy(q.coords(), lambdas);
}

Vec4 ambient_lifted_gradient(const Vec4& q, std::span<const double> lambdas) {
  if (lambdas.size() != 3)
    throw std::invalid_argument("ambient_lifted_gradient: expected 3 singular values");
  const DeformationGradient d(Mat::diag(lambdas));
  const Mat grad_w = energy_gradient(quat_matrix(q), d, reduced_params());
  Vec4 g{};
  for (int a = 0; a < 4; ++a)
    g[static_cast<size_t>(a)] = frobenius_inner(grad_w, quat_matrix_derivative(q, a));
  return g;
}

Mat ambient_lifted_hessian(const Vec4& q, std::span<const double> lambdas) {
  if (lambdas.size() != 3)
    throw std::invalid_argument("ambient_lifted_hessian: expected 3 singular values");
  const DeformationGradient d(Mat::diag(lambdas));
  const Mat grad_w = energy_gradient(quat_matrix(q), d, reduced_params());
  std::array<Mat, 4> dp;
  for (int a = 0; a < 4; ++a) dp[static_cast<size_t>(a)] = quat_matrix_derivative(q, a);

  Mat h(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      const double val =
          ambient_hessian_form(Mat::identity(3), d, reduced_params(),
                               dp[static_cast<size_t>(a)], dp[static_cast<size_t>(b)]) +
          frobenius_inner(grad_w, quat_matrix_second_derivative(a, b));
      h(a, b) = val;
      h(b, a) = val;
    }
  return h;
}

Vec4 sphere_embedded_gradient(const UnitQuaternion& q, std::span<const double> lambdas) {
  const Vec4& qc = q.coords();
  const Vec4 g = ambient_lifted_gradient(qc, lambdas);
  const double sigma = dot(g, qc) / dot(qc, qc);
  return Vec4{g[0] - sigma * qc[0], g[1] - sigma * qc[1], g[2] - sigma * qc[2],
              g[3] - sigma * qc[3]};
}

SphereTangentBasis sphere_tangent_basis(const UnitQuaternion& q) {
  const Vec4& qc = q.coords();
  int pivot = 0;
  for (int i = 1; i < 4; ++i)
    if (std::fabs(qc[static_cast<size_t>(i)]) > std::fabs(qc[static_cast<size_t>(pivot)]))
      pivot = i;

  std::array<Vec4, 3> dirs;
  int slot = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == pivot) continue;
    Vec4 v{};
    v[static_cast<size_t>(i)] = 1.0;
    const double qi = qc[static_cast<size_t>(i)];
    for (int k = 0; k < 4; ++k) v[static_cast<size_t>(k)] -= qi * qc[static_cast<size_t>(k)];
    // Gram-Schmidt against the already accepted directions.
    for (int s = 0; s < slot; ++s) {
      const double proj = dot(v, dirs[static_cast<size_t>(s)]);
      for (int k = 0; k < 4; ++k)
        v[static_cast<size_t>(k)] -= proj * dirs[static_cast<size_t>(s)][static_cast<size_t>(k)];
    }
    const double len = norm(v);
    if (!(len > 1e-12))
      throw std::logic_error("sphere_tangent_basis: degenerate direction");
    for (double& x : v) x /= len;
    dirs[static_cast<size_t>(slot++)] = v;
  }
  return SphereTangentBasis{q, pivot, dirs};
}

SphereRestrictedHessian sphere_restricted_hessian(const UnitQuaternion& q,
                                                  std::span<const double> lambdas) {
  SphereTangentBasis basis = sphere_tangent_basis(q);
  const Vec4& qc = q.coords();
  const Mat hess = ambient_lifted_hessian(qc, lambdas);
  const Vec4 grad = ambient_lifted_gradient(qc, lambdas);
  const double sigma = dot(grad, qc) / dot(qc, qc);

  auto apply = [&](const Vec4& u, const Vec4& v) {
    double acc = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        acc += u[static_cast<size_t>(a)] * hess(a, b) * v[static_cast<size_t>(b)];
    return acc - sigma * dot(u, v);
  };

  SphereRestrictedHessian out{{}, {}, basis};
  for (int j = 0; j < 3; ++j)
    for (int k = j; k < 3; ++k) {
      const double val = apply(basis.directions[static_cast<size_t>(j)],
                               basis.directions[static_cast<size_t>(k)]);
      out.matrix[static_cast<size_t>(j)][static_cast<size_t>(k)] = val;
      out.matrix[static_cast<size_t>(k)][static_cast<size_t>(j)] = val;
    }

  Mat hm(3);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) hm(j, k) = out.matrix[static_cast<size_t>(j)][static_cast<size_t>(k)];
  const SymmetricEigen eig = symmetric_eigen(hm);
  out.spectrum.assign(eig.eigenvalues.rbegin(), eig.eigenvalues.rend());
  return out;
}

}  // namespace cosserat
