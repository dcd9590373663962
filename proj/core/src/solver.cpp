#include "cosserat/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "cosserat/decompositions.hpp"
#include "cosserat/numerics.hpp"
#include "cosserat/quaternion.hpp"
#include "cosserat/son_geometry.hpp"

namespace cosserat {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr int kMaxHalvings = 60;

double uniform01(std::mt19937_64& rng) {
  // 53-bit mantissa, strictly inside (0, 1)
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

Rotation random_rotation(int n, std::mt19937_64& rng) {
  if (n == 2) {
    const double theta = kTwoPi * uniform01(rng);
    const double c = std::cos(theta), s = std::sin(theta);
    return Rotation::unchecked(Mat{{c, -s}, {s, c}});
  }
  if (n == 3) {
    Vec4 q{standard_normal(rng), standard_normal(rng), standard_normal(rng),
           standard_normal(rng)};
    return quat_to_rotation(UnitQuaternion::normalized(q));
  }
  // generic n: polar projection of a Gaussian matrix, resampled until det > 0
  for (;;) {
    Mat g(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = standard_normal(rng);
    if (determinant(g) > 0.0) return Rotation::unchecked(polar_decompose(g).rotation);
  }
}

// Multi-stage shrinking grid over one period; enough resolution that a point
// lying on the family reads a distance at the noise floor.
double minimize_circle(const std::function<double(double)>& f, double period) {
  double lo = 0.0, hi = period;
  double best_x = 0.0, best_v = f(0.0);
  for (int stage = 0; stage < 9; ++stage) {
    const int pts = 64;
    const double w = (hi - lo) / pts;
    for (int i = 0; i < pts; ++i) {
      const double x = lo + (i + 0.5) * w;
      const double v = f(x);
      if (v < best_v) {
        best_v = v;
        best_x = x;
      }
    }
    lo = best_x - w;
    hi = best_x + w;
  }
  return best_v;
}

double minimize_sphere(const std::function<double(double, double)>& f) {
  const double pi = 0.5 * kTwoPi;
  double tlo = 0.0, thi = pi, plo = 0.0, phi_hi = kTwoPi;
  double best_t = 0.0, best_p = 0.0, best_v = f(0.0, 0.0);
  for (int stage = 0; stage < 9; ++stage) {
    const int pts = 24;
    const double wt = (thi - tlo) / pts;
    const double wp = (phi_hi - plo) / pts;
    for (int i = 0; i < pts; ++i)
      for (int j = 0; j < pts; ++j) {
        const double t = tlo + (i + 0.5) * wt;
        const double p = plo + (j + 0.5) * wp;
        const double v = f(t, p);
        if (v < best_v) {
          best_v = v;
          best_t = t;
          best_p = p;
        }
      }
    tlo = best_t - wt;
    thi = best_t + wt;
    plo = best_p - wp;
    phi_hi = best_p + wp;
  }
  return best_v;
}

// Extended-precision scalar for the descent endgame. Line-search certificates
// compare energy differences that shrink like the squared gradient norm;
// double rounding of the retraction floors them near ||dW|| ~ 1e-8, far above
// the tolerances the cross-validation needs.
#if defined(__SIZEOF_FLOAT128__)
using Quad = __float128;
#else
using Quad = long double;
#endif

// Fixed-capacity square matrix over a configurable scalar.
template <typename S>
struct SmallMat {
  int n = 0;
  std::array<S, 64> a{};

  S& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const S& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static SmallMat identity(int n) {
    SmallMat m;
    m.n = n;
    for (int i = 0; i < n; ++i) m.at(i, i) = S(1);
    return m;
  }
  static SmallMat from(const Mat& src) {
    SmallMat m;
    m.n = src.dim();
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) m.at(i, j) = S(src(i, j));
    return m;
  }
  Mat to_mat() const {
    Mat m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = static_cast<double>(at(i, j));
    return m;
  }
};

template <typename S>
SmallMat<S> mul(const SmallMat<S>& a, const SmallMat<S>& b) {
  SmallMat<S> c;
  c.n = a.n;
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      const S aik = a.at(i, k);
      for (int j = 0; j < a.n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

template <typename S>
SmallMat<S> transpose(const SmallMat<S>& m) {
  SmallMat<S> t;
  t.n = m.n;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

template <typename S>
SmallMat<S> combine(const SmallMat<S>& a, S ca, const SmallMat<S>& b, S cb) {
  SmallMat<S> c;
  c.n = a.n;
  for (int i = 0; i < a.n * a.n; ++i)
    c.a[static_cast<size_t>(i)] = ca * a.a[static_cast<size_t>(i)] + cb * b.a[static_cast<size_t>(i)];
  return c;
}

template <typename S>
S inner(const SmallMat<S>& a, const SmallMat<S>& b) {
  S s{};
  for (int i = 0; i < a.n * a.n; ++i) s += a.a[static_cast<size_t>(i)] * b.a[static_cast<size_t>(i)];
  return s;
}

template <typename S>
S trace_of(const SmallMat<S>& m) {
  S s{};
  for (int i = 0; i < m.n; ++i) s += m.at(i, i);
  return s;
}

// Embedded gradient dW = grad - R sym(grad^T R) in scalar S.
template <typename S>
SmallMat<S> embedded_gradient_s(const SmallMat<S>& r, const SmallMat<S>& f, double mu,
                                double mu_c) {
  const SmallMat<S> grad =
      combine(mul(mul(f, transpose(r)), f), S(mu - mu_c), f, S(-2.0 * mu));
  SmallMat<S> gr = mul(transpose(grad), r);
  SmallMat<S> sigma;
  sigma.n = r.n;
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j) sigma.at(i, j) = (gr.at(i, j) + gr.at(j, i)) / S(2);
  return combine(grad, S(1), mul(r, sigma), S(-1));
}

// W(R') - W(R) through the exact identity tr(M'M') - tr(MM) = tr(dM M') + tr(M dM),
// with M = F^T R; resolved at the scale of the step rather than of the energy.
template <typename S>
S energy_decrease_s(const SmallMat<S>& r, const SmallMat<S>& r_next, const SmallMat<S>& f,
                    double mu, double mu_c) {
  const SmallMat<S> ft = transpose(f);
  const SmallMat<S> m = mul(ft, r);
  const SmallMat<S> m_next = mul(ft, r_next);
  const SmallMat<S> dm = combine(m_next, S(1), m, S(-1));
  const S quad = inner(transpose(dm), m_next) + inner(transpose(m), dm);
  return S(0.5 * (mu - mu_c)) * quad - S(2.0 * mu) * trace_of(dm);
}

// Newton-Schulz sweeps drive a nearly orthogonal matrix (Gram defect < 1) to
// orthogonality at the precision floor of S.
template <typename S>
SmallMat<S> newton_schulz_polish(SmallMat<S> x) {
  double prev_defect = std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < 12; ++sweep) {
    const SmallMat<S> gram = mul(transpose(x), x);
    S defect_sq{};
    for (int i = 0; i < x.n; ++i)
      for (int j = 0; j < x.n; ++j) {
        const S v = gram.at(i, j) - (i == j ? S(1) : S(0));
        defect_sq += v * v;
      }
    const double defect = static_cast<double>(defect_sq);
    if (defect == 0.0 || defect >= prev_defect) break;
    prev_defect = defect;
    x = mul(x, combine(SmallMat<S>::identity(x.n), S(1.5), gram, S(-0.5)));
  }
  return x;
}

template <typename S>
struct PhaseResult {
  SmallMat<S> rotation;
  int iterations = 0;
  bool stalled = false;
  double gradient_norm = 0.0;
};

// One precision tier of the retracted line-search descent.
template <typename S>
PhaseResult<S> descend_phase(SmallMat<S> r, const SmallMat<S>& f_s, const MaterialParams& p,
                             const SolverConfig& cfg, double tol, int iter_budget,
                             double& step) {
  // the iterate and all candidates must sit on the manifold at the same
  // precision, or the comparison inherits an O(defect * ||grad W||) offset
  r = newton_schulz_polish(std::move(r));

  PhaseResult<S> out;
  for (; out.iterations < iter_budget; ++out.iterations) {
    const SmallMat<S> dg = embedded_gradient_s(r, f_s, p.mu, p.mu_c);
    const S gn2 = inner(dg, dg);
    out.gradient_norm = std::sqrt(static_cast<double>(gn2));
    if (out.gradient_norm <= tol) break;

    bool accepted = false;
    double t = step;
    for (int h = 0; h < kMaxHalvings; ++h) {
      const SmallMat<S> candidate = combine(r, S(1), dg, S(-t));
      // Gram(candidate) = I + t^2 dg^T dg by tangency, so Newton-Schulz
      // converges directly whenever t ||dg|| is small; otherwise seed it with
      // the double polar factor.
      const bool small_defect = t * out.gradient_norm < 0.1;
      const Mat candidate_d = candidate.to_mat();
      if (determinant(candidate_d) > 0.0) {
        try {
          const SmallMat<S> rt =
              small_defect
                  ? newton_schulz_polish(candidate)
                  : newton_schulz_polish(
                        SmallMat<S>::from(polar_decompose(candidate_d).rotation));
          const S decrease = energy_decrease_s(r, rt, f_s, p.mu, p.mu_c);
          if (decrease <= S(-cfg.armijo_c * t) * gn2) {
            r = rt;
            step = std::min(t * cfg.step_growth, cfg.max_step);
            accepted = true;
            break;
          }
        } catch (const std::domain_error&) {
          // numerically singular retraction argument: treat as a failed step
        }
      }
      t *= cfg.backtrack_factor;
    }
    if (!accepted) {
      out.stalled = true;
      break;
    }
  }
  out.rotation = std::move(r);
  if (out.iterations == iter_budget && !out.stalled) {
    const SmallMat<S> dg = embedded_gradient_s(out.rotation, f_s, p.mu, p.mu_c);
    out.gradient_norm = std::sqrt(static_cast<double>(inner(dg, dg)));
  }
  return out;
}

int worker_count(int num_starts) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("COSSERAT_CRITIC_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return static_cast<int>(std::min<unsigned>(hw, static_cast<unsigned>(num_starts)));
}

}  // namespace

void SolverConfig::validate() const {
  if (max_iters < 1) throw std::invalid_argument("SolverConfig: max_iters must be >= 1");
  if (!(grad_tol > 0.0)) throw std::invalid_argument("SolverConfig: grad_tol must be > 0");
  if (!(initial_step > 0.0))
    throw std::invalid_argument("SolverConfig: initial_step must be > 0");
  if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0))
    throw std::invalid_argument("SolverConfig: backtrack_factor must be in (0, 1)");
  if (!(armijo_c > 0.0 && armijo_c < 1.0))
    throw std::invalid_argument("SolverConfig: armijo_c must be in (0, 1)");
  if (num_starts < 1) throw std::invalid_argument("SolverConfig: num_starts must be >= 1");
}

Rotation polar_retract(const Mat& m) {
  const double det = determinant(m);
  if (!(det > 0.0))
    throw std::domain_error("polar_retract: det = " + std::to_string(det) +
                            " is not positive (shorten the step)");
  return Rotation::unchecked(polar_decompose(m).rotation);
}

SolveOutcome descend(const DeformationGradient& f, const MaterialParams& p,
                     const Rotation& r0, const SolverConfig& cfg, const Catalog* catalog,
                     const ReducedProblem* reduction) {
  cfg.validate();
  require_same_dim(r0.matrix(), f.matrix(), "descend");

  double step = cfg.initial_step;

  // bulk phase in double; double rounding of the retraction floors the
  // certified descent near ||dW|| ~ 1e-8
  const double phase1_tol = std::max(cfg.grad_tol, 1e-8);
  PhaseResult<double> p1 =
      descend_phase<double>(SmallMat<double>::from(r0.matrix()),
                            SmallMat<double>::from(f.matrix()), p, cfg, phase1_tol,
                            cfg.max_iters, step);
  int iters = p1.iterations;
  bool stalled = p1.stalled;
  Mat final_m = p1.rotation.to_mat();

  // endgame in extended precision, down to the requested tolerance
  if (p1.gradient_norm > cfg.grad_tol && iters < cfg.max_iters) {
    PhaseResult<Quad> p2 = descend_phase<Quad>(
        SmallMat<Quad>::from(final_m), SmallMat<Quad>::from(f.matrix()), p, cfg,
        cfg.grad_tol, cfg.max_iters - iters, step);
    iters += p2.iterations;
    stalled = p2.stalled;
    final_m = p2.rotation.to_mat();
  }

  Rotation r = Rotation::unchecked(std::move(final_m));
  const Mat grad = energy_gradient(r.matrix(), f, p);
  const double gn = frobenius_norm(embedded_gradient(r, grad));
  const double e = energy(r, f, p);

  SolveOutcome out{std::move(r), gn, iters, stalled, e, "unmatched", -1.0};
  if (catalog != nullptr && reduction != nullptr) {
    const double tol = cfg.match_tol > 0.0 ? cfg.match_tol : numerics().match_tol;
    const Rotation r_bar =
        Rotation::unchecked(reduction->to_diagonal_frame(out.rotation.matrix()));
    const CatalogMatch m = match_rotation(r_bar, *catalog, tol);
    out.matched = m.name;
    out.match_distance = m.distance;
  }
  return out;
}

CatalogMatch match_rotation(const Rotation& r_reduced, const Catalog& catalog, double tol) {
  CatalogMatch best;
  // isolated entries first: cheap, and converged limits sit on top of them
  for (const auto& point : catalog.points) {
    if (point.family.kind != FamilyKind::isolated) continue;
    const double d = geodesic_distance(r_reduced, point.rotation);
    if (best.distance < 0.0 || d < best.distance) {
      best.distance = d;
      best.name = point.name;
    }
  }
  if (best.distance >= 0.0 && best.distance <= tol) return best;

  for (const auto& point : catalog.points) {
    double d = -1.0;
    if (point.family.kind == FamilyKind::circle) {
      d = minimize_circle(
          [&](double alpha) {
            return geodesic_distance(r_reduced,
                                     quat_to_rotation(point.family.circle_point(alpha)));
          },
          kTwoPi);
    } else if (point.family.kind == FamilyKind::two_sphere) {
      d = minimize_sphere([&](double theta, double phi) {
        return geodesic_distance(r_reduced,
                                 quat_to_rotation(point.family.sphere_point(theta, phi)));
      });
    } else {
      continue;
    }
    if (best.distance < 0.0 || d < best.distance) {
      best.distance = d;
      best.name = point.name;
    }
  }

  if (!(best.distance >= 0.0 && best.distance <= tol)) best.name = "unmatched";
  return best;
}

MultistartResult multistart(const DeformationGradient& f, const MaterialParams& p,
                            const SolverConfig& cfg) {
  cfg.validate();
  ReducedProblem reduction = reduce(f, p);
  if (reduction.regime != Regime::mu_gt_muc)
    throw std::invalid_argument(
        "multistart: catalog cross-validation requires the mu > mu_c regime (regime: " +
        std::string(to_string(reduction.regime)) + ")");
  const int n = f.dim();
  Catalog catalog;
  if (n == 2)
    catalog = catalog_n2(reduction.lambdas[0], reduction.lambdas[1]);
  else if (n == 3)
    catalog = catalog_n3(reduction.lambdas[0], reduction.lambdas[1], reduction.lambdas[2]);
  else
    throw std::invalid_argument("multistart: closed-form catalogs exist for n in {2, 3}");

  std::vector<std::optional<SolveOutcome>> slots(static_cast<size_t>(cfg.num_starts));
  const int workers = worker_count(cfg.num_starts);

  auto run_range = [&](int begin, int stride) {
    for (int i = begin; i < cfg.num_starts; i += stride) {
      std::mt19937_64 rng(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(i) + 1)));
      const Rotation r0 = random_rotation(n, rng);
      slots[static_cast<size_t>(i)] = descend(f, p, r0, cfg, &catalog, &reduction);
    }
  };

  if (workers <= 1) {
    run_range(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_range, w, workers);
    for (auto& t : pool) t.join();
  }

  MultistartResult result{std::move(reduction), std::move(catalog), {}, {}, 0};
  result.outcomes.reserve(static_cast<size_t>(cfg.num_starts));
  for (auto& slot : slots) {
    SolveOutcome& o = *slot;
    if (o.matched == "unmatched")
      ++result.unmatched;
    else
      ++result.hits[o.matched];
    result.outcomes.push_back(std::move(o));
  }
  return result;
}

}  // namespace cosserat
