#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <utility>

#include "qsf/check_report.hpp"
#include "qsf/curvature.hpp"
#include "qsf/quaternion_frame.hpp"

namespace qsf {

/// Closed-form Hessian of the identity map split into its two integrals:
/// total = dirichlet + curvature_coefficient * l2 with
/// curvature_coefficient = -(n+2)c.
struct HessianBreakdown {
  double dirichlet = 0.0;
  double curvature_coefficient = 0.0;
  double l2 = 0.0;
  double total = 0.0;
};

/// g(R(E_i,V)E_i,V) in closed form:
/// -(c/4) { |V|^2 - <V,E_i>^2 + 3 sum_b <V,J_b E_i>^2 }. i is 0-based.
double cri1_density(const SpaceFormParams& params, const QuaternionStructure& q,
                    const AdaptedFrame& frame, const Eigen::VectorXd& v, int i);

/// g(R(J_a E_i,V)J_a E_i,V) in closed form:
/// -(c/4) { |V|^2 - <V,J_a E_i>^2 + 3 sum_b <V,J_b J_a E_i>^2 }.
/// i 0-based, alpha in 0..2.
double cri2_density(const SpaceFormParams& params, const QuaternionStructure& q,
                    const AdaptedFrame& frame, const Eigen::VectorXd& v, int i,
                    int alpha);

/// (lhs, rhs) of the frame Parseval identity:
/// sum_i <V,E_i>^2 + sum_{a,i} <V,J_a E_i>^2 = |V|^2.
std::pair<double, double> co1_identity(const AdaptedFrame& frame,
                                       const Eigen::VectorXd& v);

/// (lhs, rhs) of the J-component identity:
/// sum_i [ sum_b <V,J_b E_i>^2 + sum_{a,b} <V,J_b J_a E_i>^2 ] = 3 |V|^2.
std::pair<double, double> co2_identity(const QuaternionStructure& q,
                                       const AdaptedFrame& frame,
                                       const Eigen::VectorXd& v);

/// sum_i cri1 + sum_{a,i} cri2; equals -(n+2) c |V|^2.
double total_curvature_density(const SpaceFormParams& params,
                               const QuaternionStructure& q,
                               const AdaptedFrame& frame,
                               const Eigen::VectorXd& v);

/// Populates the breakdown from the two integrals. Both must be
/// nonnegative (they are integrals of squared norms).
HessianBreakdown hessian_closed_form(const SpaceFormParams& params,
                                     double dirichlet, double l2);

/// Verdict of the seeded pointwise trials: the density identity residual
/// plus the sign of the curvature contribution -(n+2)c|V|^2 per trial.
struct PointwiseStability {
  CheckReport checks;
  /// Smallest curvature contribution seen over all trials.
  double min_curvature_contribution = 0.0;
  /// "index-zero" (c<0), "hessian-equals-dirichlet" (c=0) or
  /// "deferred-to-spectral-criterion" (c>0).
  std::string verdict;
};

PointwiseStability pointwise_stability_check(const SpaceFormParams& params,
                                             int trials, std::uint64_t seed);

}  // namespace qsf
