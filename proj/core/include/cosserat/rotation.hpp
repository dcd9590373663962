#pragma once

#include "cosserat/matrix.hpp"

namespace cosserat {

/// Element of SO(n). Construction validates ||R^T R - I||_F and det R = 1
/// within the rotation tolerance; the det = -1 component is rejected.
class Rotation {
 public:
  explicit Rotation(Mat m);

  /// Trusted construction for matrices orthonormal by construction
  /// (e.g. polar-retraction output in solver inner loops).
  static Rotation unchecked(Mat m);

  const Mat& matrix() const { return m_; }
  int dim() const { return m_.dim(); }

 private:
  struct Unchecked {};
  Rotation(Mat m, Unchecked) : m_(std::move(m)) {}
  Mat m_;
};

/// Bi-invariant geodesic distance (rotation angle, in [0, pi] for n = 3;
/// principal-angle norm for general n).
double geodesic_distance(const Rotation& a, const Rotation& b);

}  // namespace cosserat
