#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cosserat/catalog.hpp"
#include "cosserat/energy.hpp"
#include "cosserat/rotation.hpp"

namespace cosserat {

struct SolverConfig {
  int max_iters = 20000;
  double initial_step = 1.0;
  double backtrack_factor = 0.5;
  double armijo_c = 1e-4;
  double step_growth = 2.0;       // accepted steps seed the next search, grown by this
  double max_step = 1e12;
  double grad_tol = 1e-15;
  std::uint64_t seed = 0;
  int num_starts = 200;
  double match_tol = 0.0;         // <= 0: use numerics().match_tol

  void validate() const;
};

struct SolveOutcome {
  Rotation rotation;
  double gradient_norm = 0.0;     // ||embedded gradient||_F at the final iterate
  int iterations = 0;
  bool stalled = false;           // line search exhausted 60 halvings
  double energy = 0.0;
  std::string matched = "unmatched";
  double match_distance = -1.0;   // geodesic distance to the matched entry, reduced frame
};

/// Nearest-rotation projection via polar decomposition.
/// Throws std::domain_error when det M <= 0 (signal to shorten the step).
Rotation polar_retract(const Mat& m);

/// Riemannian descent R_{k+1} = retract(R_k - t_k dW(R_k)) with Armijo
/// backtracking on the energy; accepted steps never increase the energy.
/// When a catalog and its reduction are supplied the limit is matched against
/// the cataloged critical points.
SolveOutcome descend(const DeformationGradient& f, const MaterialParams& p,
                     const Rotation& r0, const SolverConfig& cfg,
                     const Catalog* catalog = nullptr,
                     const ReducedProblem* reduction = nullptr);

struct CatalogMatch {
  std::string name = "unmatched";
  double distance = -1.0;
};

/// Geodesic-distance match of a reduced-frame rotation against the catalog;
/// continuous families are searched by a coarse parameter grid plus local
/// refinement.
CatalogMatch match_rotation(const Rotation& r_reduced, const Catalog& catalog, double tol);

struct MultistartResult {
  ReducedProblem reduction;
  Catalog catalog;
  std::vector<SolveOutcome> outcomes;   // in start-index order
  std::map<std::string, int> hits;      // catalog entry name -> converged starts
  int unmatched = 0;
};

/// Seeded Haar-uniform multistart (angle for n = 2, quaternion for n = 3).
/// Outcomes are reproducible bit-for-bit for a fixed seed and config,
/// independent of the number of worker threads (capped by the
/// COSSERAT_CRITIC_THREADS environment variable).
MultistartResult multistart(const DeformationGradient& f, const MaterialParams& p,
                            const SolverConfig& cfg);

}  // namespace cosserat
