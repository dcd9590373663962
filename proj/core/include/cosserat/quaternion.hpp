#pragma once

#include <array>
#include <span>
#include <vector>

#include "cosserat/matrix.hpp"
#include "cosserat/rotation.hpp"

namespace cosserat {

using Vec4 = std::array<double, 4>;

double dot(const Vec4& a, const Vec4& b);
double norm(const Vec4& a);

/// Point of S^3; construction validates | ||q|| - 1 | against the quaternion
/// norm tolerance.
class UnitQuaternion {
 public:
  explicit UnitQuaternion(const Vec4& q);
  UnitQuaternion(double q0, double q1, double q2, double q3);

  /// Scales an arbitrary nonzero 4-vector onto the sphere.
  static UnitQuaternion normalized(const Vec4& q);

  const Vec4& coords() const { return q_; }
  double operator[](int i) const { return q_[static_cast<size_t>(i)]; }
  UnitQuaternion antipode() const { return UnitQuaternion(Vec4{-q_[0], -q_[1], -q_[2], -q_[3]}); }

 private:
  Vec4 q_;
};

/// Double covering map P : S^3 -> SO(3); P(q) = P(-q) exactly.
/// Rejects inputs whose norm deviates from 1 by more than 1e-8.
Rotation quat_to_rotation(const UnitQuaternion& q);

/// The quadratic matrix P evaluated at an arbitrary 4-vector (off-sphere
/// extension used by the ambient derivatives).
Mat quat_matrix(const Vec4& q);

/// Lifted reduced cost G(q) = W_{1,0}(P(q); diag(lambdas)) as the quartic
/// polynomial on R^4; restricting to the sphere gives the lifted energy.
double ambient_lifted_energy(const Vec4& q, std::span<const double> lambdas);

double lifted_energy(const UnitQuaternion& q, std::span<const double> lambdas);

/// Euclidean gradient of the quartic polynomial (exact differentiation).
Vec4 ambient_lifted_gradient(const Vec4& q, std::span<const double> lambdas);

/// Ambient Hessian of the quartic polynomial (exact differentiation).
Mat ambient_lifted_hessian(const Vec4& q, std::span<const double> lambdas);

/// Embedded gradient on the sphere: grad - (<grad, q>/||q||^2) q.
/// Orthogonal to q; zero exactly at critical points of the lifted cost.
Vec4 sphere_embedded_gradient(const UnitQuaternion& q, std::span<const double> lambdas);

/// Orthonormalized tangent basis at q built from {e_i - q^i q | i != pivot},
/// pivot = argmax |q^j|, Gram-Schmidt in index order.
struct SphereTangentBasis {
  UnitQuaternion base_point;
  int pivot;
  std::array<Vec4, 3> directions;
};

SphereTangentBasis sphere_tangent_basis(const UnitQuaternion& q);

/// Hessian of the lifted cost restricted to T_q S^3 in the orthonormal basis:
///   (Hess G - (<grad G, q>/||q||^2) I_4) | T_q S^3 x T_q S^3.
/// Spectrum sorted increasing.
struct SphereRestrictedHessian {
  std::array<std::array<double, 3>, 3> matrix;
  std::vector<double> spectrum;
  SphereTangentBasis basis;
};

SphereRestrictedHessian sphere_restricted_hessian(const UnitQuaternion& q,
                                                  std::span<const double> lambdas);

}  // namespace cosserat
