#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace cosserat {

/// Dense real square matrix, row-major. Sized for the small problems this
/// library targets (rotations and tangent-space Hessians, dim <= ~30); not a
/// general-purpose linear algebra type.
class Mat {
 public:
  Mat() = default;
  explicit Mat(int n);  // zero-filled
  Mat(std::initializer_list<std::initializer_list<double>> rows);

  static Mat identity(int n);
  static Mat diag(std::span<const double> d);
  static Mat diag(std::initializer_list<double> d);

  int dim() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(double s);

  bool all_finite() const;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(double s, Mat a);
Mat operator-(Mat a);

Mat transpose(const Mat& m);
Mat sym_part(const Mat& m);
Mat skew_part(const Mat& m);

double trace(const Mat& m);
double frobenius_inner(const Mat& a, const Mat& b);
double frobenius_norm(const Mat& m);
double determinant(const Mat& m);   // Gaussian elimination, partial pivoting
Mat inverse(const Mat& m);          // throws std::domain_error if singular

/// ||M^T M - I||_F, the orthogonality defect.
double orthogonality_residual(const Mat& m);

void require_same_dim(const Mat& a, const Mat& b, const char* what);

}  // namespace cosserat
