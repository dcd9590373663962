#include <benchmark/benchmark.h>

#include <random>

#include "cosserat/catalog.hpp"
#include "cosserat/decompositions.hpp"
#include "cosserat/quaternion.hpp"
#include "cosserat/solver.hpp"
#include "cosserat/son_geometry.hpp"

namespace {

using namespace cosserat;

Mat sample_gradient3() {
  return Mat{{1.2, 0.3, -0.4}, {0.1, 0.9, 0.2}, {-0.3, 0.5, 1.1}};
}

void BM_PolarDecompose3(benchmark::State& state) {
  const Mat f = sample_gradient3();
  for (auto _ : state) benchmark::DoNotOptimize(polar_decompose(f));
}
BENCHMARK(BM_PolarDecompose3);

void BM_SymmetricEigen8(benchmark::State& state) {
  std::mt19937_64 rng(5);
  Mat s(8);
  for (int i = 0; i < 8; ++i)
    for (int j = i; j < 8; ++j) {
      const double v = static_cast<double>(rng() % 1000) / 500.0 - 1.0;
      s(i, j) = v;
      s(j, i) = v;
    }
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_eigen(s));
}
BENCHMARK(BM_SymmetricEigen8);

void BM_RestrictedHessian3(benchmark::State& state) {
  const DeformationGradient f(sample_gradient3());
  const MaterialParams p(1.0, 0.25);
  const Rotation r = polar_retract(sample_gradient3());
  for (auto _ : state) benchmark::DoNotOptimize(restricted_hessian(r, f, p));
}
BENCHMARK(BM_RestrictedHessian3);

void BM_SphereHessian(benchmark::State& state) {
  const double lambdas[3] = {4.0, 2.0, 1.0};
  const UnitQuaternion q = UnitQuaternion::normalized(Vec4{0.4, -0.2, 0.7, 0.5});
  for (auto _ : state)
    benchmark::DoNotOptimize(sphere_restricted_hessian(q, lambdas));
}
BENCHMARK(BM_SphereHessian);

void BM_CatalogN3Distinct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(catalog_n3(4.0, 2.0, 1.0));
}
BENCHMARK(BM_CatalogN3Distinct);

void BM_Descend421(benchmark::State& state) {
  const DeformationGradient f(Mat::diag({4.0, 2.0, 1.0}));
  const MaterialParams p(1.0, 0.0);
  std::mt19937_64 rng(42);
  SolverConfig cfg;
  cfg.grad_tol = 1e-9;
  const Rotation r0 = polar_retract(Mat{{0.9, -0.4, 0.1}, {0.4, 0.9, 0.2}, {-0.2, 0.0, 1.0}});
  for (auto _ : state) benchmark::DoNotOptimize(descend(f, p, r0, cfg));
}
BENCHMARK(BM_Descend421);

}  // namespace

BENCHMARK_MAIN();
