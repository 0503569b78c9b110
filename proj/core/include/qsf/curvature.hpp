#pragma once

#include <Eigen/Dense>

#include <cstdint>

#include "qsf/check_report.hpp"
#include "qsf/quaternion_frame.hpp"

namespace qsf {

/// Quaternion dimension n and constant quaternion sectional curvature c of
/// the space form M^n(c).
struct SpaceFormParams {
  int n = 1;
  double c = 0.0;
};

/// Curvature component g(R(X,Y)Z,U) of M^n(c).
double riemann(const SpaceFormParams& params, const QuaternionStructure& q,
               const Eigen::VectorXd& x, const Eigen::VectorXd& y,
               const Eigen::VectorXd& z, const Eigen::VectorXd& u);

/// K(X,Y) = R(X,Y,Y,X) / (|X|^2 |Y|^2 - <X,Y>^2). Throws on a degenerate
/// plane (Gram determinant <= 1e-12 |X|^2 |Y|^2).
double sectional_curvature(const SpaceFormParams& params,
                           const QuaternionStructure& q,
                           const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// Sectional curvature of span{X, J_alpha X}, alpha in 0..2. Equals c for
/// every nonzero X.
double quaternion_sectional(const SpaceFormParams& params,
                            const QuaternionStructure& q,
                            const Eigen::VectorXd& x, int alpha);

/// Matrix of V -> sum_f R(V, f) f over the frame, assembled column by
/// column through `riemann` against the standard basis. Equals
/// (n+2) c Identity for any adapted frame.
Eigen::MatrixXd curvature_term_operator(const SpaceFormParams& params,
                                        const QuaternionStructure& q,
                                        const AdaptedFrame& frame);

/// Max residuals of the two pair antisymmetries, the pair interchange
/// symmetry and the first Bianchi sum over seeded random 4-tuples.
CheckReport check_symmetries(const SpaceFormParams& params,
                             const QuaternionStructure& q, int trials,
                             std::uint64_t seed, double tol = 1e-10);

/// n=1 only: compares the tensor against the constant-curvature model
/// c (<X,U><Y,Z> - <X,Z><Y,U>) over all 256 basis 4-tuples.
CheckReport constant_curvature_reduction(const SpaceFormParams& params,
                                         const QuaternionStructure& q);

}  // namespace qsf
