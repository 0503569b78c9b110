#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qsf/curvature.hpp"
#include "qsf/hessian_identity.hpp"
#include "qsf/quaternion_frame.hpp"
#include "qsf/rng.hpp"

using namespace qsf;

TEST_CASE("base density at distinguished directions") {
  const QuaternionStructure q = build_standard_structure(2);
  const SpaceFormParams params{2, 4.0};
  const AdaptedFrame frame = build_adapted_frame(q, 7);

  // V along E_0: the two non-quaternionic terms cancel
  CHECK(std::abs(cri1_density(params, q, frame, frame.base(0), 0)) <= 1e-12);
  // V = J_1 E_0: braces collapse to 1 + 3, so the density is -c
  CHECK(cri1_density(params, q, frame, frame.rotated(0, 0), 0) ==
        doctest::Approx(-4.0).epsilon(1e-12));
  // V orthogonal to the whole quaternion block of E_0
  CHECK(cri1_density(params, q, frame, frame.base(1), 0) ==
        doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("rotated density at distinguished directions") {
  const QuaternionStructure q = build_standard_structure(1);
  const SpaceFormParams params{1, 4.0};
  const AdaptedFrame frame = build_adapted_frame(q, 8);

  for (int alpha = 0; alpha < 3; ++alpha) {
    CHECK(std::abs(cri2_density(params, q, frame, frame.rotated(alpha, 0), 0,
                                alpha)) <= 1e-12);
    CHECK(cri2_density(params, q, frame, frame.base(0), 0, alpha) ==
          doctest::Approx(-4.0).epsilon(1e-12));
  }
}

TEST_CASE("densities agree with the curvature tensor") {
  for (int n : {1, 2}) {
    const QuaternionStructure q = build_standard_structure(n);
    for (double c : {-4.0, 0.0, 1.0, 4.0}) {
      const SpaceFormParams params{n, c};
      const AdaptedFrame frame = build_adapted_frame(q, 5);
      std::mt19937_64 gen(31);
      for (int t = 0; t < 25; ++t) {
        const Eigen::VectorXd v = rng::gaussian_vector(q.dim(), gen);
        const double tol = 1e-12 * (1.0 + std::abs(c)) * v.squaredNorm();
        const int i = t % n;
        const int alpha = t % 3;
        CHECK(std::abs(cri1_density(params, q, frame, v, i) -
                       riemann(params, q, frame.base(i), v, frame.base(i), v)) <=
              tol);
        CHECK(std::abs(cri2_density(params, q, frame, v, i, alpha) -
                       riemann(params, q, frame.rotated(alpha, i), v,
                               frame.rotated(alpha, i), v)) <= tol);
      }
    }
  }
}

TEST_CASE("density index arguments are validated") {
  const QuaternionStructure q = build_standard_structure(1);
  const SpaceFormParams params{1, 4.0};
  const AdaptedFrame frame = build_adapted_frame(q, 9);
  const Eigen::VectorXd v = Eigen::VectorXd::Unit(4, 0);
  CHECK_THROWS_AS(cri1_density(params, q, frame, v, 1), std::invalid_argument);
  CHECK_THROWS_AS(cri2_density(params, q, frame, v, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(cri2_density(params, q, frame, v, -1, 0), std::invalid_argument);
}

TEST_CASE("frame parseval identity") {
  const QuaternionStructure q = build_standard_structure(3);
  const AdaptedFrame frame = build_adapted_frame(q, 12);
  std::mt19937_64 gen(13);
  for (int t = 0; t < 25; ++t) {
    const Eigen::VectorXd v = rng::gaussian_vector(12, gen);
    const auto [lhs, rhs] = co1_identity(frame, v);
    CHECK(rhs == v.squaredNorm());
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("j-component identity carries the factor three") {
  const QuaternionStructure q1 = build_standard_structure(1);
  const AdaptedFrame f1 = build_adapted_frame(q1, 14);
  const auto [unit_lhs, unit_rhs] = co2_identity(q1, f1, f1.base(0));
  CHECK(unit_rhs == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(unit_lhs == doctest::Approx(3.0).epsilon(1e-12));

  const QuaternionStructure q2 = build_standard_structure(2);
  const AdaptedFrame f2 = build_adapted_frame(q2, 15);
  std::mt19937_64 gen(16);
  for (int t = 0; t < 25; ++t) {
    const Eigen::VectorXd v = rng::gaussian_vector(8, gen);
    const auto [lhs, rhs] = co2_identity(q2, f2, v);
    CHECK(rhs == 3.0 * v.squaredNorm());
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("total density collapses to -(n+2) c |V|^2") {
  const QuaternionStructure q = build_standard_structure(1);
  const AdaptedFrame frame = build_adapted_frame(q, 18);

  const SpaceFormParams flat{1, 0.0};
  CHECK(total_curvature_density(flat, q, frame, frame.base(0)) == 0.0);

  const SpaceFormParams sphere{1, 4.0};
  CHECK(total_curvature_density(sphere, q, frame, frame.base(0)) ==
        doctest::Approx(-12.0).epsilon(1e-12));

  const QuaternionStructure q2 = build_standard_structure(2);
  const AdaptedFrame frame2 = build_adapted_frame(q2, 19);
  const SpaceFormParams hyper{2, -3.0};
  std::mt19937_64 gen(20);
  Eigen::VectorXd v = rng::gaussian_vector(8, gen);
  v *= std::sqrt(2.0) / v.norm();  // |V|^2 = 2
  CHECK(total_curvature_density(hyper, q2, frame2, v) ==
        doctest::Approx(24.0).epsilon(1e-12));
}

TEST_CASE("total density matches the operator quadratic form") {
  const QuaternionStructure q = build_standard_structure(2);
  const SpaceFormParams params{2, -1.5};
  const AdaptedFrame frame = build_adapted_frame(q, 22);
  const Eigen::MatrixXd op = curvature_term_operator(params, q, frame);
  std::mt19937_64 gen(23);
  for (int t = 0; t < 10; ++t) {
    const Eigen::VectorXd v = rng::gaussian_vector(8, gen);
    const double total = total_curvature_density(params, q, frame, v);
    CHECK(total == doctest::Approx(-v.dot(op * v))
                       .epsilon(1e-10 * (1.0 + v.squaredNorm())));
  }
}

TEST_CASE("total density is frame independent") {
  const QuaternionStructure q = build_standard_structure(2);
  const SpaceFormParams params{2, 4.0};
  const AdaptedFrame a = build_adapted_frame(q, 1);
  const AdaptedFrame b = build_adapted_frame(q, 2);
  std::mt19937_64 gen(24);
  const Eigen::VectorXd v = rng::gaussian_vector(8, gen);
  CHECK(total_curvature_density(params, q, a, v) ==
        doctest::Approx(total_curvature_density(params, q, b, v))
            .epsilon(1e-12));
}

TEST_CASE("closed-form breakdown combines the two integrals") {
  const HessianBreakdown hyper = hessian_closed_form({1, -1.0}, 0.0, 5.0);
  CHECK(hyper.curvature_coefficient == 3.0);
  CHECK(hyper.total == 15.0);

  // four-sphere witness: dirichlet = 4 l2 and coefficient -12 leave -8 l2
  const double l2 = 2.0 * std::numbers::pi * std::numbers::pi / 15.0;
  const HessianBreakdown witness = hessian_closed_form({1, 4.0}, 4.0 * l2, l2);
  CHECK(witness.curvature_coefficient == -12.0);
  CHECK(witness.total ==
        doctest::Approx(-16.0 * std::numbers::pi * std::numbers::pi / 15.0)
            .epsilon(1e-14));

  const HessianBreakdown pure = hessian_closed_form({3, 2.0}, 7.5, 0.0);
  CHECK(pure.total == 7.5);

  CHECK_THROWS_AS(hessian_closed_form({1, 4.0}, -1.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(hessian_closed_form({1, 4.0}, 0.0, -1.0),
                  std::invalid_argument);
}

TEST_CASE("pointwise verdict tracks the sign of c") {
  const PointwiseStability negative = pointwise_stability_check({2, -1.0}, 50, 3);
  CHECK(negative.verdict == "index-zero");
  CHECK(negative.checks.pass());
  CHECK(negative.min_curvature_contribution >= 0.0);

  const PointwiseStability flat = pointwise_stability_check({1, 0.0}, 50, 3);
  CHECK(flat.verdict == "hessian-equals-dirichlet");
  CHECK(flat.checks.pass());
  CHECK(flat.min_curvature_contribution == 0.0);

  const PointwiseStability positive = pointwise_stability_check({3, 4.0}, 50, 3);
  CHECK(positive.verdict == "deferred-to-spectral-criterion");
  CHECK(positive.checks.pass());
  CHECK(positive.min_curvature_contribution < 0.0);
}
