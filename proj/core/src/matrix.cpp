#include "cosserat/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cosserat {

Mat::Mat(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
  if (n < 1) throw std::invalid_argument("Mat: dimension must be positive");
}

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows)
    : Mat(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("Mat: ragged initializer, expected " +
                                  std::to_string(n_) + " columns");
    int j = 0;
    for (double v : row) (*this)(i, j++) = v;
    ++i;
  }
}

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::diag(std::span<const double> d) {
  Mat m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
  return m;
}

Mat Mat::diag(std::initializer_list<double> d) {
  return diag(std::span<const double>(d.begin(), d.size()));
}

Mat& Mat::operator+=(const Mat& o) {
  require_same_dim(*this, o, "operator+=");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_dim(*this, o, "operator-=");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Mat& Mat::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

bool Mat::all_finite() const {
  for (double v : a_)
    if (!std::isfinite(v)) return false;
  return true;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(double s, Mat a) { return a *= s; }
Mat operator-(Mat a) { return a *= -1.0; }

Mat operator*(const Mat& a, const Mat& b) {
  require_same_dim(a, b, "operator*");
  const int n = a.dim();
  Mat c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Mat transpose(const Mat& m) {
  const int n = m.dim();
  Mat t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(j, i) = m(i, j);
  return t;
}

Mat sym_part(const Mat& m) {
  const int n = m.dim();
  Mat s(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = 0.5 * (m(i, j) + m(j, i));
  return s;
}

Mat skew_part(const Mat& m) {
  const int n = m.dim();
  Mat s(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = 0.5 * (m(i, j) - m(j, i));
  return s;
}

double trace(const Mat& m) {
  double t = 0.0;
  for (int i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

double frobenius_inner(const Mat& a, const Mat& b) {
  require_same_dim(a, b, "frobenius_inner");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) s += a(i, j) * b(i, j);
  return s;
}

double frobenius_norm(const Mat& m) { return std::sqrt(frobenius_inner(m, m)); }

namespace {

// LU factorization with partial pivoting; returns false on (numerical) singularity.
// 'a' is overwritten; 'sign' accumulates the permutation sign.
bool lu_factor(Mat& a, std::vector<int>& piv, double& sign) {
  const int n = a.dim();
  piv.resize(static_cast<size_t>(n));
  sign = 1.0;
  for (int col = 0; col < n; ++col) {
    int p = col;
    double best = std::fabs(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::fabs(a(r, col));
      if (v > best) {
        best = v;
        p = r;
      }
    }
    piv[static_cast<size_t>(col)] = p;
    if (best == 0.0) return false;
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      sign = -sign;
    }
    const double d = a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) / d;
      a(r, col) = f;
      for (int j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return true;
}

}  // namespace

double determinant(const Mat& m) {
  Mat a = m;
  std::vector<int> piv;
  double sign = 0.0;
  if (!lu_factor(a, piv, sign)) return 0.0;
  double det = sign;
  for (int i = 0; i < a.dim(); ++i) det *= a(i, i);
  return det;
}

Mat inverse(const Mat& m) {
  const int n = m.dim();
  Mat a = m;
  std::vector<int> piv;
  double sign = 0.0;
  if (!lu_factor(a, piv, sign))
    throw std::domain_error("inverse: matrix is singular");
  Mat inv = Mat::identity(n);
  // Solve A X = I column by column using the LU factors.
  for (int c = 0; c < n; ++c) {
    // apply permutation
    for (int i = 0; i < n; ++i) {
      const int p = piv[static_cast<size_t>(i)];
      if (p != i) std::swap(inv(i, c), inv(p, c));
    }
    // forward substitution (unit lower)
    for (int i = 1; i < n; ++i)
      for (int k = 0; k < i; ++k) inv(i, c) -= a(i, k) * inv(k, c);
    // back substitution
    for (int i = n - 1; i >= 0; --i) {
      for (int k = i + 1; k < n; ++k) inv(i, c) -= a(i, k) * inv(k, c);
      inv(i, c) /= a(i, i);
    }
  }
  return inv;
}

double orthogonality_residual(const Mat& m) {
  return frobenius_norm(transpose(m) * m - Mat::identity(m.dim()));
}

void require_same_dim(const Mat& a, const Mat& b, const char* what) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
}

}  // namespace cosserat
