#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "cosserat/solver.hpp"
#include "cosserat/son_geometry.hpp"
#include "oracles.hpp"

using namespace cosserat;
namespace ct = cosserat::testing;

namespace {

Mat rot2(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Mat{{c, -s}, {s, c}};
}

}  // namespace

TEST(PolarRetract, Examples) {
  std::mt19937_64 rng(3);
  const Rotation r = ct::random_rotation(3, rng);
  EXPECT_LE(frobenius_norm(polar_retract(r.matrix()).matrix() - r.matrix()), 1e-13);

  EXPECT_LE(frobenius_norm(polar_retract(1.5 * Mat::identity(3)).matrix() - Mat::identity(3)),
            1e-13);

  const Mat skew = ct::random_skew(3, rng, 0.05);
  const Rotation near_id = polar_retract(Mat::identity(3) + skew);
  EXPECT_LE(orthogonality_residual(near_id.matrix()), 1e-11);

  EXPECT_THROW(polar_retract(Mat::diag({1.0, -1.0})), std::domain_error);
  EXPECT_THROW(polar_retract(Mat(2)), std::domain_error);
}

TEST(Descend, ConvergesToIdentityInsideTheSmallBall) {
  const DeformationGradient d(Mat::diag({0.5, 0.5}));
  const MaterialParams p(1.0, 0.0);
  SolverConfig cfg;
  cfg.grad_tol = 1e-11;
  const SolveOutcome out = descend(d, p, Rotation(rot2(0.3)), cfg);
  EXPECT_FALSE(out.stalled);
  EXPECT_LE(out.gradient_norm, 1e-10);
  EXPECT_LE(geodesic_distance(out.rotation, Rotation(Mat::identity(2))), 1e-9);
}

TEST(Descend, ConvergesToTheNearestPlanarMinimum) {
  const DeformationGradient d(Mat::diag({2.0, 1.0}));
  const MaterialParams p(1.0, 0.0);
  SolverConfig cfg;
  cfg.grad_tol = 1e-11;
  const SolveOutcome out = descend(d, p, Rotation(rot2(0.3)), cfg);
  const double theta_star = std::acos(2.0 / 3.0);
  EXPECT_LE(geodesic_distance(out.rotation, Rotation(rot2(theta_star))), 1e-8);
  EXPECT_LE(out.energy, energy(Rotation(rot2(0.3)), d, p));
}

TEST(Descend, AlreadyCriticalTakesZeroIterations) {
  const DeformationGradient d(Mat::diag({4.0, 2.0, 1.0}));
  const MaterialParams p(1.0, 0.0);
  SolverConfig cfg;
  const ReducedProblem red = reduce(d, p);
  const Catalog cat = catalog_n3(4.0, 2.0, 1.0);
  const SolveOutcome out = descend(d, p, Rotation(Mat::identity(3)), cfg, &cat, &red);
  EXPECT_EQ(out.iterations, 0);
  EXPECT_EQ(out.matched, "q^(0)");
  EXPECT_LE(out.match_distance, 1e-8);
}

TEST(Descend, ReportedGradientNormIsExact) {
  std::mt19937_64 rng(7);
  const DeformationGradient d(Mat::diag({3.0, 1.5, 0.7}));
  const MaterialParams p(1.2, 0.3);
  SolverConfig cfg;
  cfg.grad_tol = 1e-9;
  const SolveOutcome out = descend(d, p, ct::random_rotation(3, rng), cfg);
  const Mat grad = energy_gradient(out.rotation.matrix(), d, p);
  EXPECT_NEAR(out.gradient_norm, frobenius_norm(embedded_gradient(out.rotation, grad)),
              1e-12 * (1.0 + out.gradient_norm));
  // limit points are critical with residual <= 10 * gradient tolerance
  EXPECT_FALSE(out.stalled);
  EXPECT_TRUE(is_critical(out.rotation, d, p, 10.0 * cfg.grad_tol).critical);
}

TEST(Multistart, PlanarSmallBallAllReachIdentity) {
  const DeformationGradient d(Mat::diag({0.6, 0.6}));
  const MaterialParams p(1.0, 0.0);
  SolverConfig cfg;
  cfg.num_starts = 40;
  cfg.seed = 5;
  cfg.grad_tol = 1e-10;
  const MultistartResult res = multistart(d, p, cfg);
  EXPECT_EQ(res.unmatched, 0);
  ASSERT_EQ(res.hits.size(), 1u);
  EXPECT_EQ(res.hits.begin()->first, "R^(1)");
  EXPECT_EQ(res.hits.begin()->second, 40);
}

TEST(Multistart, DistinctTripleAllLimitsMatchCatalog) {
  const DeformationGradient d(Mat::diag({4.0, 2.0, 1.0}));
  const MaterialParams p(1.0, 0.0);
  SolverConfig cfg;
  cfg.num_starts = 40;
  cfg.seed = 11;
  const MultistartResult res = multistart(d, p, cfg);
  EXPECT_EQ(res.unmatched, 0);
  for (const auto& o : res.outcomes) {
    EXPECT_LE(o.gradient_norm, 1e-8);
    EXPECT_LE(o.match_distance, 1e-5);
    EXPECT_NE(o.matched, "unmatched");
  }
  // the global minima dominate the basins
  int min_hits = 0;
  for (const auto& [name, count] : res.hits)
    if (name.rfind("q^(7)", 0) == 0) min_hits += count;
  EXPECT_GE(min_hits, 30);
}

TEST(Multistart, TwoSphereFamilyIsMatched) {
  const DeformationGradient d(Mat::diag({1.5, 1.5, 1.5}));
  const MaterialParams p(1.0, 0.0);
  SolverConfig cfg;
  cfg.num_starts = 8;
  cfg.seed = 23;
  cfg.grad_tol = 1e-10;
  const MultistartResult res = multistart(d, p, cfg);
  EXPECT_EQ(res.unmatched, 0);
  for (const auto& o : res.outcomes) EXPECT_EQ(o.matched, "q^(17)");
}

TEST(Multistart, FullyDegenerateUnitTripleStillMatches) {
  const DeformationGradient d(Mat::identity(3));
  const MaterialParams p(1.0, 0.0);
  SolverConfig cfg;
  cfg.num_starts = 10;
  cfg.seed = 31;
  const MultistartResult res = multistart(d, p, cfg);  // default deep tolerance
  EXPECT_EQ(res.unmatched, 0);
  for (const auto& o : res.outcomes) {
    EXPECT_EQ(o.matched, "q^(0)");
    EXPECT_LE(o.gradient_norm, 1e-8);
    EXPECT_LE(o.match_distance, 1e-5);
  }
}

TEST(Multistart, DeterministicAcrossThreadCounts) {
  const DeformationGradient d(Mat::diag({2.0, 2.0, 0.5}));
  const MaterialParams p(1.0, 0.0);
  SolverConfig cfg;
  cfg.num_starts = 12;
  cfg.seed = 77;

  setenv("COSSERAT_CRITIC_THREADS", "1", 1);
  const MultistartResult serial = multistart(d, p, cfg);
  setenv("COSSERAT_CRITIC_THREADS", "2", 1);
  const MultistartResult parallel = multistart(d, p, cfg);
  unsetenv("COSSERAT_CRITIC_THREADS");

  ASSERT_EQ(serial.outcomes.size(), parallel.outcomes.size());
  for (size_t i = 0; i < serial.outcomes.size(); ++i) {
    const Mat& a = serial.outcomes[i].rotation.matrix();
    const Mat& b = parallel.outcomes[i].rotation.matrix();
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) EXPECT_EQ(a(r, c), b(r, c));
    EXPECT_EQ(serial.outcomes[i].energy, parallel.outcomes[i].energy);
    EXPECT_EQ(serial.outcomes[i].iterations, parallel.outcomes[i].iterations);
    EXPECT_EQ(serial.outcomes[i].matched, parallel.outcomes[i].matched);
  }
}

TEST(Multistart, NonDiagonalGradientUsesTheReductionFrames) {
  // shear: the reduction rotation and basis change are nontrivial, so the
  // matching exercises the conjugation into the diagonal frame
  const auto ex = shear_example(1.0, MaterialParams(1.0, 0.0));
  {
    SolverConfig cfg;
    cfg.num_starts = 30;
    cfg.seed = 3;
    const MultistartResult res =
        multistart(DeformationGradient(ex.f), MaterialParams(1.0, 0.0), cfg);
    EXPECT_EQ(res.unmatched, 0);
    for (const auto& o : res.outcomes) {
      EXPECT_NE(o.matched.rfind("q^(7)", 0), std::string::npos);
      EXPECT_LE(o.match_distance, 1e-6);
    }
  }
  {
    const DeformationGradient f(Mat{{1.1, 0.4, -0.2}, {0.0, 0.8, 0.3}, {0.2, -0.1, 1.4}});
    SolverConfig cfg;
    cfg.num_starts = 30;
    cfg.seed = 5;
    const MultistartResult res = multistart(f, MaterialParams(1.7, 0.4), cfg);
    EXPECT_EQ(res.unmatched, 0);
    for (const auto& o : res.outcomes) EXPECT_LE(o.match_distance, 1e-6);
  }
}

TEST(Multistart, RejectsRegimesWithoutCatalog) {
  SolverConfig cfg;
  cfg.num_starts = 2;
  EXPECT_THROW(multistart(DeformationGradient(Mat::identity(3)), MaterialParams(1.0, 1.0), cfg),
               std::invalid_argument);
  EXPECT_THROW(multistart(DeformationGradient(Mat::identity(3)), MaterialParams(1.0, 2.0), cfg),
               std::invalid_argument);
  EXPECT_THROW(multistart(DeformationGradient(Mat::identity(4)), MaterialParams(1.0, 0.0), cfg),
               std::invalid_argument);
}

TEST(SolverConfig, Validation) {
  SolverConfig cfg;
  cfg.num_starts = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.grad_tol = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.backtrack_factor = 1.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Descend, EnergyNeverIncreases) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const DeformationGradient f(ct::random_positive_det(n, rng));
    const MaterialParams p(ct::urand(rng, 0.3, 2.0), ct::urand(rng, 0.0, 1.5));
    const Rotation r0 = ct::random_rotation(n, rng, 1.5);
    const double e0 = energy(r0, f, p);
    const SolveOutcome out = descend(f, p, r0, SolverConfig{});
    EXPECT_LE(out.energy, e0 + 1e-12 * (1.0 + std::fabs(e0)));
  }
}

TEST(MatchRotation, FindsCircleFamilyMembers) {
  const Catalog c = catalog_n3(2.0, 2.0, 0.5);
  const CriticalPoint* q12 = nullptr;
  for (const auto& p : c.points)
    if (p.name == "q^(12)") q12 = &p;
  ASSERT_NE(q12, nullptr);
  // a family member away from the stored representative
  const Rotation member = quat_to_rotation(q12->family.circle_point(1.234));
  const CatalogMatch m = match_rotation(member, c, 1e-5);
  EXPECT_EQ(m.name, "q^(12)");
  EXPECT_LE(m.distance, 1e-6);
}
