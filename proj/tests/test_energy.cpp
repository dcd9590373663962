#include <gtest/gtest.h>

#include <random>

#include "cosserat/energy.hpp"
#include "cosserat/numerics.hpp"
#include "oracles.hpp"

using namespace cosserat;
namespace ct = cosserat::testing;

TEST(MaterialParams, Validation) {
  EXPECT_NO_THROW(MaterialParams(1.0, 0.0));
  EXPECT_NO_THROW(MaterialParams(0.5, 2.0));
  EXPECT_THROW(MaterialParams(0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(MaterialParams(-1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(MaterialParams(1.0, -0.1), std::invalid_argument);
}

TEST(DeformationGradient, RequiresPositiveDeterminant) {
  EXPECT_NO_THROW(DeformationGradient(Mat::identity(3)));
  EXPECT_THROW(DeformationGradient(Mat{{1, 0}, {0, -1}}), std::invalid_argument);
  EXPECT_THROW(DeformationGradient(Mat{{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST(Energy, SpecValues) {
  const MaterialParams p10(1.0, 0.0);
  EXPECT_DOUBLE_EQ(energy(Rotation(Mat::identity(3)), DeformationGradient(Mat::identity(3)), p10),
                   0.0);
  const DeformationGradient d21(Mat::diag({2.0, 1.0}));
  EXPECT_NEAR(energy(Rotation(Mat::identity(2)), d21, p10), 1.0, 1e-15);
  EXPECT_NEAR(energy(Rotation(-Mat::identity(2)), d21, p10), 13.0, 1e-13);
}

TEST(Energy, NonNegativeAndMatchesExtendedOnRotations) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Rotation r = ct::random_rotation(n, rng);
    const DeformationGradient f(ct::random_positive_det(n, rng));
    const MaterialParams p(ct::urand(rng, 0.2, 3.0), ct::urand(rng, 0.0, 3.0));
    const double w = energy(r, f, p);
    EXPECT_GE(w, 0.0);
    EXPECT_NEAR(w, extended_energy(r.matrix(), f, p), 1e-11 * (1.0 + w));
  }
}

TEST(EnergyGradient, SpecValues) {
  const MaterialParams p10(1.0, 0.0);
  const Mat g1 = energy_gradient(Mat::identity(3), DeformationGradient(Mat::identity(3)), p10);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_DOUBLE_EQ(g1(i, j), i == j ? -1.0 : 0.0);

  // mu = mu_c kills the quadratic term: grad = -2 F
  const MaterialParams p11(1.0, 1.0);
  const Mat g2 = energy_gradient(Mat::identity(2), DeformationGradient(Mat::diag({2.0, 1.0})), p11);
  EXPECT_DOUBLE_EQ(g2(0, 0), -4.0);
  EXPECT_DOUBLE_EQ(g2(1, 1), -2.0);
  EXPECT_DOUBLE_EQ(g2(0, 1), 0.0);
}

TEST(EnergyGradient, MatchesCentralDifferences) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Mat r = ct::random_rotation(n, rng).matrix();
    const DeformationGradient f(ct::random_positive_det(n, rng));
    const MaterialParams p(ct::urand(rng, 0.2, 3.0), ct::urand(rng, 0.0, 3.0));
    const Mat grad = energy_gradient(r, f, p);
    const Mat fd = ct::fd_ambient_gradient(r, f, p);
    EXPECT_LE(frobenius_norm(grad - fd), 1e-6 * (1.0 + frobenius_norm(grad)));
  }
}

TEST(AmbientHessianForm, SpecValues) {
  const DeformationGradient id2(Mat::identity(2));
  const DeformationGradient d21(Mat::diag({2.0, 1.0}));

  // mu = mu_c: identically zero
  const MaterialParams p11(2.0, 2.0);
  std::mt19937_64 rng(1);
  EXPECT_DOUBLE_EQ(ambient_hessian_form(Mat::identity(2), d21, p11,
                                        ct::random_matrix(2, rng), ct::random_matrix(2, rng)),
                   0.0);

  const MaterialParams p10(1.0, 0.0);
  Mat e12(2);
  e12(0, 1) = 1.0;
  EXPECT_DOUBLE_EQ(ambient_hessian_form(Mat::identity(2), id2, p10, e12, e12), 0.0);
  EXPECT_DOUBLE_EQ(
      ambient_hessian_form(Mat::identity(2), d21, p10, Mat::identity(2), Mat::identity(2)),
      5.0);
}

TEST(AmbientHessianForm, MatchesSecondDifferencesAndIsSymmetric) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Mat r = ct::random_rotation(n, rng).matrix();
    const DeformationGradient f(ct::random_positive_det(n, rng));
    const MaterialParams p(ct::urand(rng, 0.2, 3.0), ct::urand(rng, 0.0, 3.0));
    const Mat u = ct::random_matrix(n, rng);
    const Mat v = ct::random_matrix(n, rng);

    const double uv = ambient_hessian_form(r, f, p, u, v);
    const double vu = ambient_hessian_form(r, f, p, v, u);
    EXPECT_NEAR(uv, vu, 1e-12 * (1.0 + std::fabs(uv)));

    const double h = 1e-4;
    auto w = [&](double s, double t) {
      return extended_energy(r + s * u + t * v, f, p);
    };
    const double fd =
        (w(h, h) - w(h, -h) - w(-h, h) + w(-h, -h)) / (4.0 * h * h);
    const double form = ambient_hessian_form(r, f, p, u, v);
    EXPECT_NEAR(form, fd, 1e-5 * (1.0 + std::fabs(form)));
  }
}

TEST(Reduce, IdentityExamples) {
  const ReducedProblem a = reduce(DeformationGradient(Mat::identity(3)), MaterialParams(1.0, 0.0));
  EXPECT_EQ(a.regime, Regime::mu_gt_muc);
  ASSERT_EQ(a.lambdas.size(), 3u);
  for (double l : a.lambdas) EXPECT_NEAR(l, 1.0, 1e-14);

  const ReducedProblem b = reduce(DeformationGradient(Mat::identity(3)), MaterialParams(2.0, 1.0));
  for (double l : b.lambdas) EXPECT_NEAR(l, 0.5, 1e-14);
}

TEST(Reduce, GrioliRegimeHasNoLambdas) {
  const ReducedProblem r = reduce(DeformationGradient(Mat::diag({2.0, 1.0})), MaterialParams(1.5, 1.5));
  EXPECT_EQ(r.regime, Regime::grioli);
  EXPECT_FALSE(r.has_lambdas());
}

TEST(Reduce, ShearSingularValues) {
  // simple shear with k = 1: lambda = (sqrt(1.5 + sqrt(5)/2), 1, sqrt(1.5 - sqrt(5)/2))
  const double k = 1.0;
  const DeformationGradient f(Mat{{1, k, 0}, {0, 1, 0}, {0, 0, 1}});
  const ReducedProblem r = reduce(f, MaterialParams(1.0, 0.0));
  const double root = 0.5 * std::sqrt(k * k * (k * k + 4.0));
  EXPECT_NEAR(r.lambdas[0], std::sqrt(1.0 + 0.5 * k * k + root), 1e-12);
  EXPECT_NEAR(r.lambdas[1], 1.0, 1e-12);
  EXPECT_NEAR(r.lambdas[2], std::sqrt(1.0 + 0.5 * k * k - root), 1e-12);
}

TEST(Reduce, ProductIdentityOnRandomInputs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const DeformationGradient f(ct::random_positive_det(n, rng));
    const double mu = ct::urand(rng, 0.5, 3.0);
    const double mu_c = ct::urand(rng, 0.0, 0.95) * mu;  // mu > mu_c
    const MaterialParams p(mu, mu_c);
    const ReducedProblem r = reduce(f, p);
    double prod = 1.0;
    for (double l : r.lambdas) prod *= l;
    const double target = std::pow((mu - mu_c) / mu, n) * f.det();
    EXPECT_NEAR(prod, target, 1e-9 * (1.0 + std::fabs(target)));
    for (size_t i = 0; i + 1 < r.lambdas.size(); ++i)
      EXPECT_GE(r.lambdas[i], r.lambdas[i + 1]);
  }
}

TEST(Reduce, DiagonalFrameEnergyIdentity) {
  std::mt19937_64 rng(31);
  const MaterialParams reduced(1.0, 0.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const DeformationGradient f(ct::random_positive_det(n, rng));
    const double mu = ct::urand(rng, 0.5, 3.0);
    const MaterialParams p(mu, ct::urand(rng, 0.0, 0.95) * mu);
    const ReducedProblem red = reduce(f, p);
    const Mat f_hat = ((p.mu - p.mu_c) / p.mu) * f.matrix();
    const Mat d = red.diagonal();

    const Rotation r = ct::random_rotation(n, rng, 2.0);
    const Mat r_bar = red.to_diagonal_frame(r.matrix());
    const double lhs = extended_energy(r_bar, d, reduced);
    const double rhs = extended_energy(r.matrix(), f_hat, reduced);
    EXPECT_NEAR(lhs, rhs, 1e-9 * (1.0 + std::fabs(rhs)));

    // frame maps are mutually inverse
    EXPECT_LE(frobenius_norm(red.from_diagonal_frame(r_bar) - r.matrix()), 1e-11);
  }
}

TEST(Reduce, EnergyReductionConstantIsConstant) {
  std::mt19937_64 rng(37);
  const MaterialParams reduced(1.0, 0.0);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const DeformationGradient f(ct::random_positive_det(n, rng));
    const double mu = ct::urand(rng, 0.5, 3.0);
    const MaterialParams p(mu, ct::urand(rng, 0.0, 0.95) * mu);
    const double c = reduction_constant(f, p);
    const double scale_factor = p.mu * p.mu / (p.mu - p.mu_c);
    const Mat f_hat = ((p.mu - p.mu_c) / p.mu) * f.matrix();

    for (int sample = 0; sample < 100; ++sample) {
      const Rotation r = ct::random_rotation(n, rng, 2.0);
      const double w_full = energy(r, f, p);
      const double w_reduced = extended_energy(r.matrix(), f_hat, reduced);
      const double scale = 1.0 + std::fabs(w_full);
      EXPECT_LE(std::fabs(w_full - scale_factor * w_reduced - c), 1e-8 * scale);
    }
  }
}

TEST(ClassificationTransfer, SpecTable) {
  EXPECT_EQ(classification_transfer(Label::min, MaterialParams(1.0, 0.0)), Label::min);
  EXPECT_EQ(classification_transfer(Label::min, MaterialParams(1.0, 2.0)), Label::max);
  EXPECT_EQ(classification_transfer(Label::max, MaterialParams(1.0, 2.0)), Label::min);
  EXPECT_EQ(classification_transfer(Label::saddle, MaterialParams(1.0, 0.5)), Label::saddle);
  EXPECT_EQ(classification_transfer(Label::saddle, MaterialParams(1.0, 2.0)), Label::saddle);
  EXPECT_EQ(classification_transfer(Label::degenerate, MaterialParams(1.0, 2.0)),
            Label::degenerate);
  EXPECT_THROW(classification_transfer(Label::min, MaterialParams(1.0, 1.0)),
               std::invalid_argument);
}

TEST(Reduce, MuBelowMuCOddDimension) {
  // the scaled gradient has negative determinant; the orthogonal factor of the
  // reduction carries det -1 and the conjugation identity still holds
  std::mt19937_64 rng(71);
  const MaterialParams reduced(1.0, 0.0);
  for (int trial = 0; trial < 20; ++trial) {
    const DeformationGradient f(ct::random_positive_det(3, rng));
    const MaterialParams p(1.0, ct::urand(rng, 1.1, 3.0));  // mu < mu_c
    const ReducedProblem red = reduce(f, p);
    EXPECT_EQ(red.regime, Regime::mu_lt_muc);
    ASSERT_EQ(red.lambdas.size(), 3u);
    for (double l : red.lambdas) EXPECT_GT(l, 0.0);
    EXPECT_NEAR(determinant(red.rotation_part), -1.0, 1e-9);
    EXPECT_LE(orthogonality_residual(red.rotation_part), 1e-9);
    EXPECT_NEAR(determinant(red.basis_change), 1.0, 1e-10);

    const Mat f_hat = ((p.mu - p.mu_c) / p.mu) * f.matrix();
    const Rotation r = ct::random_rotation(3, rng, 1.5);
    const Mat r_bar = red.to_diagonal_frame(r.matrix());
    EXPECT_NEAR(extended_energy(r_bar, red.diagonal(), reduced),
                extended_energy(r.matrix(), f_hat, reduced),
                1e-9 * (1.0 + std::fabs(extended_energy(r.matrix(), f_hat, reduced))));
  }
}

TEST(Reduce, CoincidenceFlags) {
  const ReducedProblem r =
      reduce(DeformationGradient(Mat::diag({2.0, 2.0, 0.5})), MaterialParams(1.0, 0.0));
  ASSERT_EQ(r.coincident_with_next.size(), 2u);
  EXPECT_TRUE(r.coincident_with_next[0]);
  EXPECT_FALSE(r.coincident_with_next[1]);
}
