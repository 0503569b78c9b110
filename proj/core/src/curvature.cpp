#include "qsf/curvature.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qsf/rng.hpp"

namespace qsf {

namespace {

void require_dim(const SpaceFormParams& params, const QuaternionStructure& q,
                 const Eigen::VectorXd& v) {
  if (q.n != params.n)
    throw std::invalid_argument("structure and params disagree on n");
  if (v.size() != q.dim())
    throw std::invalid_argument("vector dimension does not match 4n");
}

}  // namespace

double riemann(const SpaceFormParams& params, const QuaternionStructure& q,
               const Eigen::VectorXd& x, const Eigen::VectorXd& y,
               const Eigen::VectorXd& z, const Eigen::VectorXd& u) {
  require_dim(params, q, x);
  require_dim(params, q, y);
  require_dim(params, q, z);
  require_dim(params, q, u);

  double sum = x.dot(z) * y.dot(u) - z.dot(y) * x.dot(u);
  for (int alpha = 0; alpha < 3; ++alpha) {
    const Eigen::VectorXd jx = q.J[alpha] * x;
    const Eigen::VectorXd jy = q.J[alpha] * y;
    const Eigen::VectorXd jz = q.J[alpha] * z;
    const Eigen::VectorXd ju = q.J[alpha] * u;
    sum += x.dot(jz) * y.dot(ju) - u.dot(jx) * jy.dot(z) +
           2.0 * x.dot(jy) * ju.dot(z);
  }
  return -0.25 * params.c * sum;
}

double sectional_curvature(const SpaceFormParams& params,
                           const QuaternionStructure& q,
                           const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const double xx = x.squaredNorm();
  const double yy = y.squaredNorm();
  const double xy = x.dot(y);
  const double gram = xx * yy - xy * xy;
  if (gram <= 1e-12 * xx * yy)
    throw std::invalid_argument("sectional curvature of a degenerate plane");
  return riemann(params, q, x, y, y, x) / gram;
}

double quaternion_sectional(const SpaceFormParams& params,
                            const QuaternionStructure& q,
                            const Eigen::VectorXd& x, int alpha) {
  if (alpha < 0 || alpha > 2)
    throw std::invalid_argument("alpha must be in 0..2");
  if (x.norm() == 0.0)
    throw std::invalid_argument("quaternion sectional curvature of the zero vector");
  return sectional_curvature(params, q, x, q.J[alpha] * x);
}

Eigen::MatrixXd curvature_term_operator(const SpaceFormParams& params,
                                        const QuaternionStructure& q,
                                        const AdaptedFrame& frame) {
  const int dim = q.dim();
  if (frame.dim() != dim)
    throw std::invalid_argument("frame does not match the structure");

  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(dim, dim);
  Eigen::MatrixXd op(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const Eigen::VectorXd v = identity.col(col);
    for (int row = 0; row < dim; ++row) {
      double acc = 0.0;
      for (int f = 0; f < dim; ++f) {
        const Eigen::VectorXd fv = frame.vectors.col(f);
        acc += riemann(params, q, v, fv, fv, identity.col(row));
      }
      op(row, col) = acc;
    }
  }
  return op;
}

CheckReport check_symmetries(const SpaceFormParams& params,
                             const QuaternionStructure& q, int trials,
                             std::uint64_t seed, double tol) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const int dim = q.dim();

  double antisym_xy = 0.0, antisym_zu = 0.0, pair = 0.0, bianchi = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 gen(rng::derive_seed(seed, static_cast<std::uint64_t>(t)));
    const Eigen::VectorXd x = rng::gaussian_vector(dim, gen);
    const Eigen::VectorXd y = rng::gaussian_vector(dim, gen);
    const Eigen::VectorXd z = rng::gaussian_vector(dim, gen);
    const Eigen::VectorXd u = rng::gaussian_vector(dim, gen);

    const double rxyzu = riemann(params, q, x, y, z, u);
    antisym_xy = std::max(antisym_xy,
                          std::abs(rxyzu + riemann(params, q, y, x, z, u)));
    antisym_zu = std::max(antisym_zu,
                          std::abs(rxyzu + riemann(params, q, x, y, u, z)));
    pair = std::max(pair, std::abs(rxyzu - riemann(params, q, z, u, x, y)));
    bianchi = std::max(bianchi,
                       std::abs(rxyzu + riemann(params, q, y, z, x, u) +
                                riemann(params, q, z, x, y, u)));
  }

  CheckReport report;
  report.checks.push_back(Check::residual(
      "curvature_antisymmetry_first_pair", "curvature-tensor-symmetries", antisym_xy, tol));
  report.checks.push_back(Check::residual(
      "curvature_antisymmetry_last_pair", "curvature-tensor-symmetries", antisym_zu, tol));
  report.checks.push_back(Check::residual(
      "curvature_pair_interchange", "curvature-tensor-symmetries", pair, tol));
  report.checks.push_back(Check::residual(
      "curvature_first_bianchi", "curvature-tensor-symmetries", bianchi, tol));
  return report;
}

CheckReport constant_curvature_reduction(const SpaceFormParams& params,
                                         const QuaternionStructure& q) {
  if (params.n != 1)
    throw std::invalid_argument(
        "constant-curvature reduction applies to n = 1 only");
  const Eigen::Matrix4d identity = Eigen::Matrix4d::Identity();

  double dev = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int cc = 0; cc < 4; ++cc)
        for (int d = 0; d < 4; ++d) {
          const Eigen::VectorXd x = identity.col(a);
          const Eigen::VectorXd y = identity.col(b);
          const Eigen::VectorXd z = identity.col(cc);
          const Eigen::VectorXd u = identity.col(d);
          const double model =
              params.c * (x.dot(u) * y.dot(z) - x.dot(z) * y.dot(u));
          dev = std::max(dev,
                         std::abs(riemann(params, q, x, y, z, u) - model));
        }

  CheckReport report;
  report.checks.push_back(Check::residual(
      "constant_curvature_model", "four-sphere-reduction", dev,
      1e-12 * (1.0 + std::abs(params.c))));
  return report;
}

}  // namespace qsf
