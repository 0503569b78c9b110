#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>

#include "qsf/check_report.hpp"

namespace qsf {

/// Triple (J1, J2, J3) of orthogonal endomorphisms of R^{4n} satisfying
/// J_i^2 = -I and the cyclic products J1J2 = J3, J2J3 = J1, J3J1 = J2.
struct QuaternionStructure {
  int n = 0;  // quaternion dimension; the matrices act on R^{4n}
  std::array<Eigen::MatrixXd, 3> J;

  int dim() const { return 4 * n; }
};

/// Orthonormal basis of R^{4n} stored column-wise in block order
/// {E_1..E_n, J1E_1..J1E_n, J2E_1..J2E_n, J3E_1..J3E_n}:
/// column(alpha*n + i) == J_alpha * column(i) for alpha in 1..3.
struct AdaptedFrame {
  int n = 0;
  Eigen::MatrixXd vectors;  // 4n x 4n

  int dim() const { return 4 * n; }
  /// E_i, 0-based.
  Eigen::VectorXd base(int i) const { return vectors.col(i); }
  /// J_alpha E_i, alpha in 0..2, i 0-based.
  Eigen::VectorXd rotated(int alpha, int i) const {
    return vectors.col((alpha + 1) * n + i);
  }
};

/// Block-diagonal structure where each 4x4 block is left multiplication by
/// the quaternion units i, j, k on H = R^4 with basis order (1, i, j, k).
QuaternionStructure build_standard_structure(int n);

/// (O^T J1 O, O^T J2 O, O^T J3 O). Throws unless O is orthogonal to 1e-10.
QuaternionStructure conjugated_structure(const QuaternionStructure& q,
                                         const Eigen::MatrixXd& orthogonal);

/// Max-abs residuals of the defining relations, one entry per relation.
CheckReport verify_structure(const QuaternionStructure& q, double tol);

/// Greedy seeded construction: draw a unit E_1, take its quaternion block,
/// then draw each next E_i projected orthogonal to all previous blocks.
AdaptedFrame build_adapted_frame(const QuaternionStructure& q,
                                 std::uint64_t seed);

/// Same construction from caller-supplied candidate base vectors (one per
/// quaternion block, projected and renormalized in order). Degenerate
/// candidates throw instead of being redrawn.
AdaptedFrame build_adapted_frame_from(const QuaternionStructure& q,
                                      const std::vector<Eigen::VectorXd>& candidates);

}  // namespace qsf
