#include "qsf/quaternion_frame.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qsf/rng.hpp"

namespace qsf {

namespace {

constexpr int kMaxQuaternionDim = 1 << 12;

void require_valid_n(int n) {
  if (n < 1) throw std::invalid_argument("quaternion dimension must be >= 1");
  if (n > kMaxQuaternionDim)
    throw std::invalid_argument("quaternion dimension too large");
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

// Left multiplication tables by i, j, k on H = R^4, basis order (1, i, j, k).
Eigen::Matrix4d unit_block(int alpha) {
  Eigen::Matrix4d b = Eigen::Matrix4d::Zero();
  switch (alpha) {
    case 0:  // i: 1->i, i->-1, j->k, k->-j
      b(1, 0) = 1;  b(0, 1) = -1;  b(3, 2) = 1;  b(2, 3) = -1;
      break;
    case 1:  // j: 1->j, i->-k, j->-1, k->i
      b(2, 0) = 1;  b(3, 1) = -1;  b(0, 2) = -1;  b(1, 3) = 1;
      break;
    default:  // k: 1->k, i->j, j->-i, k->-1
      b(3, 0) = 1;  b(2, 1) = 1;  b(1, 2) = -1;  b(0, 3) = -1;
      break;
  }
  return b;
}

}  // namespace

QuaternionStructure build_standard_structure(int n) {
  require_valid_n(n);
  const int dim = 4 * n;
  QuaternionStructure q;
  q.n = n;
  for (int alpha = 0; alpha < 3; ++alpha) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(dim, dim);
    const Eigen::Matrix4d block = unit_block(alpha);
    for (int b = 0; b < n; ++b) j.block<4, 4>(4 * b, 4 * b) = block;
    q.J[alpha] = std::move(j);
  }
  return q;
}

QuaternionStructure conjugated_structure(const QuaternionStructure& q,
                                         const Eigen::MatrixXd& orthogonal) {
  const int dim = q.dim();
  if (orthogonal.rows() != dim || orthogonal.cols() != dim)
    throw std::invalid_argument("conjugating matrix has wrong dimensions");
  const double dev = max_abs(orthogonal.transpose() * orthogonal -
                             Eigen::MatrixXd::Identity(dim, dim));
  if (dev > 1e-10) {
    std::ostringstream msg;
    msg << "conjugating matrix is not orthogonal: max |O^T O - I| = " << dev;
    throw std::invalid_argument(msg.str());
  }
  QuaternionStructure out;
  out.n = q.n;
  for (int alpha = 0; alpha < 3; ++alpha)
    out.J[alpha] = orthogonal.transpose() * q.J[alpha] * orthogonal;
  return out;
}

CheckReport verify_structure(const QuaternionStructure& q, double tol) {
  const int dim = q.dim();
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(dim, dim);

  double square = 0.0, cyclic = 0.0, orthogonal = 0.0, skew = 0.0;
  for (int a = 0; a < 3; ++a) {
    square = std::max(square, max_abs(q.J[a] * q.J[a] + identity));
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    cyclic = std::max(cyclic, max_abs(q.J[a] * q.J[b] - q.J[c]));
    cyclic = std::max(cyclic, max_abs(q.J[b] * q.J[a] + q.J[c]));
    orthogonal =
        std::max(orthogonal, max_abs(q.J[a].transpose() * q.J[a] - identity));
    skew = std::max(skew, max_abs(q.J[a] + q.J[a].transpose()));
  }

  CheckReport report;
  report.checks.push_back(
      Check::residual("j_square_minus_identity", "quaternion-relations", square, tol));
  report.checks.push_back(
      Check::residual("j_cyclic_products", "quaternion-relations", cyclic, tol));
  report.checks.push_back(
      Check::residual("j_orthogonality", "metric-compatibility", orthogonal, tol));
  report.checks.push_back(
      Check::residual("j_skew_adjoint", "metric-compatibility", skew, tol));
  return report;
}

namespace {

// Shared greedy loop. draw(i, attempt) supplies the raw candidate for block
// i; retries > 0 only for the seeded path.
AdaptedFrame build_frame(const QuaternionStructure& q,
                         const std::function<Eigen::VectorXd(int, int)>& draw,
                         int retries) {
  const int n = q.n;
  const int dim = q.dim();
  AdaptedFrame frame;
  frame.n = n;
  frame.vectors.resize(dim, dim);

  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd e;
    bool placed = false;
    for (int attempt = 0; attempt <= retries && !placed; ++attempt) {
      Eigen::VectorXd candidate = draw(i, attempt);
      if (candidate.size() != dim)
        throw std::invalid_argument("frame candidate has wrong dimension");
      // Project orthogonal to every vector of the previous quaternion blocks.
      for (int k = 0; k < i; ++k) {
        candidate -= candidate.dot(frame.vectors.col(k)) * frame.vectors.col(k);
        for (int alpha = 0; alpha < 3; ++alpha) {
          const auto prev = frame.vectors.col((alpha + 1) * n + k);
          candidate -= candidate.dot(prev) * prev;
        }
      }
      const double norm = candidate.norm();
      if (norm >= 1e-8) {
        e = candidate / norm;
        placed = true;
      }
    }
    if (!placed)
      throw std::runtime_error(
          "adapted frame construction failed: degenerate projection");

    frame.vectors.col(i) = e;
    for (int alpha = 0; alpha < 3; ++alpha)
      frame.vectors.col((alpha + 1) * n + i) = q.J[alpha] * e;
  }
  return frame;
}

}  // namespace

AdaptedFrame build_adapted_frame(const QuaternionStructure& q,
                                 std::uint64_t seed) {
  std::mt19937_64 gen(rng::derive_seed(seed, 0x66726d65ULL));
  return build_frame(
      q, [&](int, int) { return rng::gaussian_vector(q.dim(), gen); }, 100);
}

AdaptedFrame build_adapted_frame_from(
    const QuaternionStructure& q,
    const std::vector<Eigen::VectorXd>& candidates) {
  if (static_cast<int>(candidates.size()) != q.n)
    throw std::invalid_argument("expected one candidate per quaternion block");
  return build_frame(
      q, [&](int i, int) -> Eigen::VectorXd { return candidates[i]; }, 0);
}

}  // namespace qsf
