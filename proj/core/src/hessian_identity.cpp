#include "qsf/hessian_identity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "qsf/rng.hpp"

namespace qsf {

namespace {

void require_frame_index(const AdaptedFrame& frame, int i) {
  if (i < 0 || i >= frame.n)
    throw std::invalid_argument("frame index out of range");
}

double density_at(const SpaceFormParams& params, const QuaternionStructure& q,
                  const Eigen::VectorXd& v, const Eigen::VectorXd& e) {
  double sum = v.squaredNorm() - std::pow(v.dot(e), 2);
  for (int beta = 0; beta < 3; ++beta)
    sum += 3.0 * std::pow(v.dot(q.J[beta] * e), 2);
  return -0.25 * params.c * sum;
}

}  // namespace

double cri1_density(const SpaceFormParams& params, const QuaternionStructure& q,
                    const AdaptedFrame& frame, const Eigen::VectorXd& v,
                    int i) {
  require_frame_index(frame, i);
  if (v.size() != q.dim())
    throw std::invalid_argument("vector dimension does not match 4n");
  return density_at(params, q, v, frame.base(i));
}

double cri2_density(const SpaceFormParams& params, const QuaternionStructure& q,
                    const AdaptedFrame& frame, const Eigen::VectorXd& v, int i,
                    int alpha) {
  require_frame_index(frame, i);
  if (alpha < 0 || alpha > 2)
    throw std::invalid_argument("alpha must be in 0..2");
  if (v.size() != q.dim())
    throw std::invalid_argument("vector dimension does not match 4n");
  return density_at(params, q, v, frame.rotated(alpha, i));
}

std::pair<double, double> co1_identity(const AdaptedFrame& frame,
                                       const Eigen::VectorXd& v) {
  double lhs = 0.0;
  for (int i = 0; i < frame.n; ++i) {
    lhs += std::pow(v.dot(frame.base(i)), 2);
    for (int alpha = 0; alpha < 3; ++alpha)
      lhs += std::pow(v.dot(frame.rotated(alpha, i)), 2);
  }
  return {lhs, v.squaredNorm()};
}

std::pair<double, double> co2_identity(const QuaternionStructure& q,
                                       const AdaptedFrame& frame,
                                       const Eigen::VectorXd& v) {
  double lhs = 0.0;
  for (int i = 0; i < frame.n; ++i) {
    for (int beta = 0; beta < 3; ++beta)
      lhs += std::pow(v.dot(q.J[beta] * frame.base(i)), 2);
    for (int alpha = 0; alpha < 3; ++alpha)
      for (int beta = 0; beta < 3; ++beta)
        lhs += std::pow(v.dot(q.J[beta] * frame.rotated(alpha, i)), 2);
  }
  return {lhs, 3.0 * v.squaredNorm()};
}

double total_curvature_density(const SpaceFormParams& params,
                               const QuaternionStructure& q,
                               const AdaptedFrame& frame,
                               const Eigen::VectorXd& v) {
  double total = 0.0;
  for (int i = 0; i < frame.n; ++i) {
    total += cri1_density(params, q, frame, v, i);
    for (int alpha = 0; alpha < 3; ++alpha)
      total += cri2_density(params, q, frame, v, i, alpha);
  }
  return total;
}

HessianBreakdown hessian_closed_form(const SpaceFormParams& params,
                                     double dirichlet, double l2) {
  if (dirichlet < 0.0 || l2 < 0.0)
    throw std::invalid_argument(
        "dirichlet and l2 are integrals of squared norms and must be >= 0");
  HessianBreakdown b;
  b.dirichlet = dirichlet;
  b.curvature_coefficient = -(params.n + 2.0) * params.c;
  b.l2 = l2;
  b.total = b.dirichlet + b.curvature_coefficient * b.l2;
  return b;
}

PointwiseStability pointwise_stability_check(const SpaceFormParams& params,
                                             int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const QuaternionStructure q = build_standard_structure(params.n);
  const double coeff = (params.n + 2.0) * params.c;

  double identity_residual = 0.0;
  double min_contribution = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = rng::derive_seed(seed, t);
    const AdaptedFrame frame = build_adapted_frame(q, trial_seed);
    std::mt19937_64 gen(rng::derive_seed(trial_seed, 0x76656374ULL));
    const Eigen::VectorXd v = rng::gaussian_vector(q.dim(), gen);

    // total is the Hessian's curvature contribution -(n+2)c|V|^2; the
    // collapse identity pins its negative against (n+2)c|V|^2.
    const double total = total_curvature_density(params, q, frame, v);
    const double scale = std::max(v.squaredNorm(), 1e-300);
    identity_residual =
        std::max(identity_residual,
                 std::abs(-total - coeff * v.squaredNorm()) / scale);
    min_contribution = std::min(min_contribution, total);
  }

  PointwiseStability result;
  result.checks.checks.push_back(Check::residual(
      "curvature_density_collapse", "hessian-curvature-term", identity_residual,
      1e-10 * (1.0 + std::abs(params.c))));
  result.min_curvature_contribution = min_contribution;
  if (params.c < 0.0) {
    result.checks.checks.push_back(Check::value_of(
        "curvature_contribution_nonnegative", "index-zero-argument",
        min_contribution, 0.0, min_contribution >= 0.0));
    result.verdict = "index-zero";
  } else if (params.c == 0.0) {
    result.checks.checks.push_back(Check::value_of(
        "curvature_contribution_zero", "flat-case", min_contribution, 0.0,
        min_contribution == 0.0));
    result.verdict = "hessian-equals-dirichlet";
  } else {
    result.checks.checks.push_back(Check::value_of(
        "curvature_contribution_negative", "deferred-to-spectral-criterion",
        min_contribution, 0.0, min_contribution < 0.0));
    result.verdict = "deferred-to-spectral-criterion";
  }
  return result;
}

}  // namespace qsf
