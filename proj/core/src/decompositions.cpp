#include "cosserat/decompositions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cosserat/numerics.hpp"

namespace cosserat {

namespace {

Numerics g_numerics;

double max_asymmetry(const Mat& s) {
  double m = 0.0;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j)
      m = std::max(m, std::fabs(s(i, j) - s(j, i)));
  return m;
}

// First entry of v with magnitude above the noise floor decides the sign.
void canonicalize_sign(std::vector<double>& v) {
  for (double x : v) {
    if (std::fabs(x) > 1e-13) {
      if (x < 0.0)
        for (double& y : v) y = -y;
      return;
    }
  }
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Numerics& numerics() { return g_numerics; }

SymmetricEigen symmetric_eigen(const Mat& s) {
  const int n = s.dim();
  const double scale = frobenius_norm(s);
  const double asym = max_asymmetry(s);
  if (asym > numerics().symmetry_tol * (1.0 + scale)) {
    std::ostringstream msg;
    msg << "symmetric_eigen: input is not symmetric, max |S_ij - S_ji| = "
        << asym << " exceeds tolerance " << numerics().symmetry_tol * (1.0 + scale);
    throw std::invalid_argument(msg.str());
  }

  Mat a = sym_part(s);  // exact symmetry for the sweep
  Mat v = Mat::identity(n);

  const double off_tol = 1e-15 * (1.0 + scale);
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (std::sqrt(off) <= off_tol) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::fabs(apq) <= off_tol / (n * n)) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                             : 1.0 / (theta - std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<double> values(static_cast<size_t>(n));
  std::vector<std::vector<double>> vectors(static_cast<size_t>(n),
                                           std::vector<double>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    values[static_cast<size_t>(i)] = a(i, i);
    for (int k = 0; k < n; ++k) vectors[static_cast<size_t>(i)][static_cast<size_t>(k)] = v(k, i);
    canonicalize_sign(vectors[static_cast<size_t>(i)]);
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    const double di = values[static_cast<size_t>(i)], dj = values[static_cast<size_t>(j)];
    if (di != dj) return di > dj;
    // ties: descending lexicographic, so identity input keeps the identity basis
    return lex_less(vectors[static_cast<size_t>(j)], vectors[static_cast<size_t>(i)]);
  });

  SymmetricEigen out;
  out.eigenvalues.resize(static_cast<size_t>(n));
  out.eigenvectors = Mat(n);
  for (int c = 0; c < n; ++c) {
    const int src = order[static_cast<size_t>(c)];
    out.eigenvalues[static_cast<size_t>(c)] = values[static_cast<size_t>(src)];
    for (int k = 0; k < n; ++k)
      out.eigenvectors(k, c) = vectors[static_cast<size_t>(src)][static_cast<size_t>(k)];
  }
  return out;
}

Mat symmetric_sqrt(const Mat& s) {
  const SymmetricEigen eig = symmetric_eigen(s);
  const double top = std::fabs(eig.eigenvalues.front());
  const double floor = 1e-14 * (1.0 + top);
  for (size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    if (eig.eigenvalues[i] <= floor) {
      std::ostringstream msg;
      msg << "symmetric_sqrt: eigenvalue " << i << " = " << eig.eigenvalues[i]
          << " is not strictly positive";
      throw std::domain_error(msg.str());
    }
  }
  const int n = s.dim();
  Mat root(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k)
        acc += eig.eigenvectors(i, k) * std::sqrt(eig.eigenvalues[static_cast<size_t>(k)]) *
               eig.eigenvectors(j, k);
      root(i, j) = acc;
      root(j, i) = acc;
    }
  return root;
}

PolarDecomposition polar_decompose(const Mat& f) {
  const double det = determinant(f);
  if (!(det > 0.0)) {
    std::ostringstream msg;
    msg << "polar_decompose: det F = " << det << " must be positive";
    throw std::domain_error(msg.str());
  }
  const Mat gram = transpose(f) * f;
  const SymmetricEigen eig = symmetric_eigen(sym_part(gram));
  const double top = eig.eigenvalues.front();
  if (eig.eigenvalues.back() <= 1e-14 * (1.0 + top))
    throw std::domain_error("polar_decompose: F is numerically singular");

  const int n = f.dim();
  Mat stretch(n), inv_root(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double sv = 0.0, iv = 0.0;
      for (int k = 0; k < n; ++k) {
        const double root = std::sqrt(eig.eigenvalues[static_cast<size_t>(k)]);
        const double w = eig.eigenvectors(i, k) * eig.eigenvectors(j, k);
        sv += w * root;
        iv += w / root;
      }
      stretch(i, j) = sv;
      stretch(j, i) = sv;
      inv_root(i, j) = iv;
      inv_root(j, i) = iv;
    }
  PolarDecomposition out;
  out.rotation = f * inv_root;
  // one Newton-Schulz sweep: cuts the orthogonality defect to its square
  out.rotation =
      out.rotation * (1.5 * Mat::identity(n) - 0.5 * (transpose(out.rotation) * out.rotation));
  out.stretch = stretch;
  return out;
}

}  // namespace cosserat
