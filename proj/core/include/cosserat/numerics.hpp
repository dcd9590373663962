#pragma once

namespace cosserat {

/// Global numerical tolerances. Defaults are the contract used throughout the
/// library; the CLI exposes them as --tol-* flags.
struct Numerics {
  double symmetry_tol = 1e-10;     ///< relative symmetry tolerance for eigensolver input
  double rotation_tol = 1e-8;      ///< orthogonality / determinant tolerance for rotations
  double quaternion_norm_tol = 1e-10;
  double criticality_tol = 1e-8;   ///< default residual threshold for is_critical
  double zero_eig_rel_tol = 1e-7;  ///< relative zero threshold for spectrum classification
  double gate_tol = 1e-9;          ///< relative tolerance for catalog existence gates
  double coincidence_tol = 1e-9;   ///< relative tolerance for singular-value coincidence
  double match_tol = 1e-5;         ///< geodesic distance threshold for solver/catalog matching
};

Numerics& numerics();

}  // namespace cosserat
