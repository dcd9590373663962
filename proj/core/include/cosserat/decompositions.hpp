#pragma once

#include "cosserat/matrix.hpp"

namespace cosserat {

/// Eigendecomposition of a symmetric matrix: S = Q diag(d) Q^T with Q
/// orthogonal and d sorted in decreasing order. Ties are broken by
/// lexicographic order of the (sign-canonicalized) eigenvectors so the output
/// is reproducible.
struct SymmetricEigen {
  std::vector<double> eigenvalues;  // decreasing
  Mat eigenvectors;                 // columns
};

/// Cyclic Jacobi rotations; deterministic for identical input.
/// Throws std::invalid_argument when the input asymmetry exceeds the relative
/// symmetry tolerance (the measured asymmetry is reported in the message).
SymmetricEigen symmetric_eigen(const Mat& s);

/// Unique symmetric positive-definite square root.
/// Throws std::domain_error naming the offending eigenvalue when one is not
/// strictly positive.
Mat symmetric_sqrt(const Mat& s);

struct PolarDecomposition {
  Mat rotation;   // R in SO(n)
  Mat stretch;    // S symmetric positive-definite, F = R S
};

/// Polar decomposition of F with det F > 0; throws std::domain_error for
/// singular or negative-determinant input.
PolarDecomposition polar_decompose(const Mat& f);

}  // namespace cosserat
