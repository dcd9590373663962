#pragma once

#include <optional>
#include <vector>

#include "cosserat/classification.hpp"
#include "cosserat/energy.hpp"
#include "cosserat/matrix.hpp"
#include "cosserat/rotation.hpp"

namespace cosserat {

/// Multiplier matrix of the orthogonality constraints,
/// Sigma(R) = 1/2 ((grad)^T R + R^T grad). At a critical point its entries are
/// the classical Lagrange multipliers.
Mat sigma_matrix(const Rotation& r, const Mat& euclidean_grad);

/// Embedded gradient dG = grad - R Sigma(R); tangent to SO(n) at R and zero
/// exactly at constrained critical points.
Mat embedded_gradient(const Rotation& r, const Mat& euclidean_grad);

struct CriticalityCheck {
  bool critical;
  double residual;
};

/// Tests the criticality condition
///   (mu - mu_c)(F R^T F R^T - R F^T R F^T) = 2 mu (F R^T - R F^T)
/// by its Frobenius residual.
CriticalityCheck is_critical(const Rotation& r, const DeformationGradient& f,
                             const MaterialParams& p, double tol);
CriticalityCheck is_critical(const Rotation& r, const DeformationGradient& f,
                             const MaterialParams& p);

/// mu = mu_c case: criticality reduces to the symmetry condition F R^T = R F^T.
CriticalityCheck grioli_is_critical(const Rotation& r, const DeformationGradient& f,
                                    double tol);

/// Square-root route to critical points: X with X X^T = F F^T and
///   (X - X^T)((mu - mu_c)(X + X^T) - 2 mu I) = (mu - mu_c)(X X^T - X^T X)
/// yields the critical rotation R = X^T F^{-T}.
struct SquareRootCriticality {
  bool root_matches;          // X X^T = F F^T within tol
  double root_residual;
  bool condition_holds;       // the bracket identity within tol
  double condition_residual;
  std::optional<Rotation> rotation;   // set when both checks hold
  double criticality_residual = 0.0;  // is_critical residual at the recovered rotation
};

SquareRootCriticality critical_from_square_root(const Mat& x, const DeformationGradient& f,
                                                const MaterialParams& p, double tol);

/// Orthonormal basis of T_R SO(n): directions R A_k with A_k the normalized
/// elementary skew matrices (E_ij - E_ji)/sqrt(2), (i, j) lexicographic.
struct TangentBasis {
  Rotation base_point;
  std::vector<Mat> directions;  // n(n-1)/2 matrices
};

TangentBasis tangent_basis(const Rotation& r);

/// Hessian of the constrained cost restricted to T_R SO(n), assembled in the
/// orthonormal tangent basis:
///   H_jk = D^2 W[U_j, U_k] - tr(U_j Sigma(R) U_k^T).
/// Spectrum sorted increasing. Classification is meaningful at critical points.
struct RestrictedHessian {
  int dim;
  std::vector<double> matrix;    // dim x dim, row-major, exactly symmetric
  std::vector<double> spectrum;  // increasing
  TangentBasis basis;

  double at(int j, int k) const { return matrix[static_cast<size_t>(j) * dim + k]; }
};

RestrictedHessian restricted_hessian(const Rotation& r, const DeformationGradient& f,
                                     const MaterialParams& p);

}  // namespace cosserat
