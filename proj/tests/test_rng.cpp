#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "qsf/rng.hpp"

using namespace qsf;

TEST_CASE("derive_seed is deterministic and stream-separating") {
  CHECK(rng::derive_seed(0, 0) == rng::derive_seed(0, 0));
  CHECK(rng::derive_seed(0, 0) != rng::derive_seed(0, 1));
  CHECK(rng::derive_seed(0, 0) != rng::derive_seed(1, 0));

  // No collisions across a realistic block of stream indices.
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 10000; ++s)
    seen.insert(rng::derive_seed(42, s));
  CHECK(seen.size() == 10000);
}

TEST_CASE("gaussian_vector reproduces for equal generator state") {
  std::mt19937_64 a(7), b(7);
  const Eigen::VectorXd x = rng::gaussian_vector(12, a);
  const Eigen::VectorXd y = rng::gaussian_vector(12, b);
  CHECK(x.size() == 12);
  CHECK((x - y).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("gaussian_vector has roughly standard moments") {
  std::mt19937_64 gen(3);
  double sum = 0.0, sum2 = 0.0;
  const int count = 100000;
  for (int i = 0; i < count; ++i) {
    const double x = rng::gaussian_vector(1, gen)(0);
    sum += x;
    sum2 += x * x;
  }
  CHECK(std::abs(sum / count) < 0.02);
  CHECK(std::abs(sum2 / count - 1.0) < 0.02);
}

TEST_CASE("unit_vector is unit length") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 50; ++i) {
    const Eigen::VectorXd u = rng::unit_vector(5, gen);
    CHECK(std::abs(u.norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("random_orthogonal produces orthogonal deterministic matrices") {
  const Eigen::MatrixXd o = rng::random_orthogonal(8, 5);
  const Eigen::MatrixXd gram = o.transpose() * o;
  CHECK((gram - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() <=
        1e-12);
  CHECK((o - rng::random_orthogonal(8, 5)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((o - rng::random_orthogonal(8, 6)).cwiseAbs().maxCoeff() > 1e-3);
}
