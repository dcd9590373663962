#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "cosserat/numerics.hpp"

namespace cosserat {

enum class Label { min, max, saddle, degenerate };

inline const char* to_string(Label l) {
  switch (l) {
    case Label::min: return "min";
    case Label::max: return "max";
    case Label::saddle: return "saddle";
    case Label::degenerate: return "degenerate";
  }
  return "?";
}

/// Relative zero threshold used by classify: zero_eig_rel_tol * (1 + max |eigenvalue|).
inline double default_zero_tol(std::span<const double> spectrum) {
  double top = 0.0;
  for (double e : spectrum) top = std::max(top, std::fabs(e));
  return numerics().zero_eig_rel_tol * (1.0 + top);
}

/// Second-order test on a restricted-Hessian spectrum. Any eigenvalue within
/// zero_tol of zero makes the point degenerate (continuous families produce
/// structural zeros).
inline Label classify(std::span<const double> spectrum, double zero_tol) {
  bool has_pos = false, has_neg = false, has_zero = false;
  for (double e : spectrum) {
    if (std::fabs(e) <= zero_tol)
      has_zero = true;
    else if (e > 0.0)
      has_pos = true;
    else
      has_neg = true;
  }
  if (has_zero) return Label::degenerate;
  if (has_pos && has_neg) return Label::saddle;
  if (has_pos) return Label::min;
  return Label::max;
}

inline Label classify(std::span<const double> spectrum) {
  return classify(spectrum, default_zero_tol(spectrum));
}

}  // namespace cosserat
