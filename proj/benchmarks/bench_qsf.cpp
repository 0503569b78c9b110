#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include <random>

#include "qsf/curvature.hpp"
#include "qsf/hessian_identity.hpp"
#include "qsf/quaternion_frame.hpp"
#include "qsf/rng.hpp"
#include "qsf/sphere_model.hpp"

using namespace qsf;

namespace {

void bm_riemann(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuaternionStructure q = build_standard_structure(n);
  const SpaceFormParams params{n, 4.0};
  std::mt19937_64 gen(1);
  const Eigen::VectorXd x = rng::gaussian_vector(q.dim(), gen);
  const Eigen::VectorXd y = rng::gaussian_vector(q.dim(), gen);
  const Eigen::VectorXd z = rng::gaussian_vector(q.dim(), gen);
  const Eigen::VectorXd u = rng::gaussian_vector(q.dim(), gen);
  for (auto _ : state)
    benchmark::DoNotOptimize(riemann(params, q, x, y, z, u));
}
BENCHMARK(bm_riemann)->Arg(1)->Arg(2)->Arg(3);

void bm_operator_assembly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuaternionStructure q = build_standard_structure(n);
  const SpaceFormParams params{n, 4.0};
  const AdaptedFrame frame = build_adapted_frame(q, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(curvature_term_operator(params, q, frame));
}
BENCHMARK(bm_operator_assembly)->Arg(1)->Arg(2);

void bm_total_density(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuaternionStructure q = build_standard_structure(n);
  const SpaceFormParams params{n, 4.0};
  const AdaptedFrame frame = build_adapted_frame(q, 3);
  std::mt19937_64 gen(4);
  const Eigen::VectorXd v = rng::gaussian_vector(q.dim(), gen);
  for (auto _ : state)
    benchmark::DoNotOptimize(total_curvature_density(params, q, frame, v));
}
BENCHMARK(bm_total_density)->Arg(1)->Arg(3);

void bm_adapted_frame(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuaternionStructure q = build_standard_structure(n);
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(build_adapted_frame(q, ++seed));
}
BENCHMARK(bm_adapted_frame)->Arg(1)->Arg(3);

void bm_sphere_sampling(benchmark::State& state) {
  const SphereSpec spec = SphereSpec::from_curvature(4.0);
  const auto count = static_cast<std::int64_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(sample(spec, count, ++seed));
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(bm_sphere_sampling)->Arg(10000)->Arg(100000);

void bm_dirichlet_energy(benchmark::State& state) {
  const SphereSpec spec = SphereSpec::from_curvature(4.0);
  const SphereQuadrature quad = sample(spec, state.range(0), 5);
  const FieldSpec grad = coordinate_gradient(Vec5::Unit(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(dirichlet_energy(grad, spec, quad));
  state.SetItemsProcessed(state.iterations() * quad.size());
}
BENCHMARK(bm_dirichlet_energy)->Arg(10000)->Arg(100000);

void bm_rayleigh(benchmark::State& state) {
  const SphereSpec spec = SphereSpec::from_curvature(4.0);
  const SphereQuadrature quad = sample(spec, 100000, 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(rayleigh_lambda1(spec, quad, Vec5::Unit(2)));
  state.SetItemsProcessed(state.iterations() * quad.size());
}
BENCHMARK(bm_rayleigh);

}  // namespace

BENCHMARK_MAIN();
