#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cosserat/classification.hpp"
#include "cosserat/matrix.hpp"
#include "cosserat/rotation.hpp"

namespace cosserat {

/// Shear modulus mu > 0 and couple modulus mu_c >= 0.
struct MaterialParams {
  double mu;
  double mu_c;
  MaterialParams(double mu_, double mu_c_);
};

/// n x n deformation gradient with det F > 0.
class DeformationGradient {
 public:
  explicit DeformationGradient(Mat f);
  const Mat& matrix() const { return f_; }
  int dim() const { return f_.dim(); }
  double det() const { return det_; }

 private:
  Mat f_;
  double det_;
};

enum class Regime { mu_gt_muc, grioli, mu_lt_muc };

const char* to_string(Regime r);

/// Diagonal reduction data: singular values of the scaled gradient
/// ((mu - mu_c)/mu) F sorted decreasing, together with the orthogonal factors
/// that conjugate the original problem onto the diagonal one. In the grioli
/// regime (mu = mu_c) the scaled gradient vanishes and no lambdas exist.
struct ReducedProblem {
  Regime regime;
  std::vector<double> lambdas;        // empty in grioli regime
  Mat rotation_part;                  // orthogonal; det -1 possible when mu < mu_c, n odd
  Mat basis_change;                   // Q in SO(n), stretch = Q^T diag(lambda) Q
  std::vector<bool> coincident_with_next;  // lambdas[i] ~ lambdas[i+1] within tolerance

  bool has_lambdas() const { return !lambdas.empty(); }
  Mat diagonal() const { return Mat::diag(lambdas); }
  /// Conjugates a rotation of the original problem into the diagonal frame.
  Mat to_diagonal_frame(const Mat& r) const;
  /// Inverse of to_diagonal_frame.
  Mat from_diagonal_frame(const Mat& r_bar) const;
};

/// W(R; F) = mu ||sym(R^T F - I)||^2 + mu_c ||skew(R^T F - I)||^2.
double energy(const Rotation& r, const DeformationGradient& f, const MaterialParams& p);

/// Prolongation of the cost to arbitrary n x n matrices:
///   (mu - mu_c)/2 tr(F^T M F^T M) - 2 mu tr(F^T M) + (mu + mu_c)/2 tr(F^T F) + mu n.
/// Agrees with energy() on SO(n); this is the extension whose Euclidean
/// derivatives drive the constrained machinery.
double extended_energy(const Mat& m, const DeformationGradient& f, const MaterialParams& p);

/// Same prolongation with an unconstrained F (the scaled gradient of the
/// mu < mu_c regime has negative determinant).
double extended_energy(const Mat& m, const Mat& f, const MaterialParams& p);

/// Euclidean gradient of the prolongation: (mu - mu_c) F R^T F - 2 mu F.
Mat energy_gradient(const Mat& r, const DeformationGradient& f, const MaterialParams& p);

/// Second derivative of the prolongation, the constant bilinear form
/// (U, V) -> (mu - mu_c) tr(F^T U F^T V).
double ambient_hessian_form(const Mat& r, const DeformationGradient& f,
                            const MaterialParams& p, const Mat& u, const Mat& v);

ReducedProblem reduce(const DeformationGradient& f, const MaterialParams& p);

/// Additive constant in the reduction identity
///   W_{mu,mu_c}(R; F) = mu^2/(mu - mu_c) W_{1,0}(R; F_hat) + constant,
/// evaluated numerically as the difference of the two sides at one rotation.
/// Only defined for mu != mu_c.
double reduction_constant(const DeformationGradient& f, const MaterialParams& p);

/// Label transport between the original and the reduced (mu = 1, mu_c = 0)
/// problem: identity when mu > mu_c, min <-> max swap when mu < mu_c.
/// Throws std::invalid_argument in the grioli regime.
Label classification_transfer(Label label, const MaterialParams& p);

}  // namespace cosserat
