#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "qsf/check_report.hpp"
#include "qsf/hessian_identity.hpp"

namespace qsf {

using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat5 = Eigen::Matrix<double, 5, 5>;

/// Round sphere S^4 of sectional curvature c > 0, radius r = 1/sqrt(c),
/// embedded in R^5. This is the n=1 compact space form.
struct SphereSpec {
  double c = 4.0;
  double r = 0.5;

  static constexpr int ambient_dim = 5;
  static SphereSpec from_curvature(double c);
  /// Vol(S^4_r) = (8 pi^2 / 3) r^4.
  double volume() const;
};

/// Seeded uniform point set with equal weights. Integral estimates are
/// Vol * mean(integrand), accumulated in fixed-size chunks so the result
/// does not depend on the number of worker threads.
struct SphereQuadrature {
  std::vector<Vec5> points;
  double weight = 0.0;  // volume() / N
  std::uint64_t seed = 0;

  std::int64_t size() const { return static_cast<std::int64_t>(points.size()); }
};

SphereQuadrature sample(const SphereSpec& spec, std::int64_t count,
                        std::uint64_t seed);

/// Tangent gradient of f_a(p) = <a,p> for a unit vector a.
struct CoordinateGradient {
  Vec5 a;
};
/// V(p) = A p for a skew generator A (an infinitesimal rotation).
struct KillingField {
  Mat5 generator;
};
/// Same projection formula as CoordinateGradient without the unit-norm
/// restriction on a; a = 0 gives the zero field.
struct ProjectedConstant {
  Vec5 a;
};

using FieldSpec = std::variant<CoordinateGradient, KillingField, ProjectedConstant>;

/// Validating constructors.
FieldSpec coordinate_gradient(const Vec5& a);
FieldSpec killing_field(const Mat5& generator);
/// Rotation generator in the (i, j) coordinate plane: A e_i = e_j.
FieldSpec killing_rotation(int i, int j);
FieldSpec projected_constant(const Vec5& a);

/// Field value at p; tangent to the sphere at p. Throws for off-sphere p.
Vec5 evaluate_field(const FieldSpec& field, const SphereSpec& spec,
                    const Vec5& p);

/// Levi-Civita covariant derivative nabla_X V at p: the analytic ambient
/// directional derivative of the field formula projected tangentially.
/// X must be tangent at p.
Vec5 covariant_derivative(const FieldSpec& field, const SphereSpec& spec,
                          const Vec5& p, const Vec5& x);

/// Orthonormal tangent frame at p: the five ambient basis vectors are
/// projected tangentially, the most degenerate projection is dropped and
/// the remaining four are orthonormalized.
Eigen::Matrix<double, 5, 4> tangent_frame(const SphereSpec& spec, const Vec5& p);

/// Equal-weight Monte Carlo integral volume * mean(integrand). Partial
/// sums run over fixed-size chunks reduced in chunk order, so the value
/// is identical for every thread count. A constant integrand integrates
/// exactly (mean 1 is exact).
double integral(const SphereSpec& spec, const SphereQuadrature& quad,
                const std::function<double(const Vec5&)>& integrand,
                int threads = 1);

/// Monte Carlo estimate of int sum_i |nabla_{e_i} V|^2 over the per-point
/// tangent frames.
double dirichlet_energy(const FieldSpec& field, const SphereSpec& spec,
                        const SphereQuadrature& quad, int threads = 1);

/// Monte Carlo estimate of int |V|^2.
double l2_norm(const FieldSpec& field, const SphereSpec& spec,
               const SphereQuadrature& quad, int threads = 1);

/// hessian_closed_form at n = 1 fed with the two quadrature estimates.
HessianBreakdown hessian_identity_map(const FieldSpec& field,
                                      const SphereSpec& spec,
                                      const SphereQuadrature& quad,
                                      int threads = 1);

/// Rayleigh quotient int |grad f_a|^2 / int f_a^2 for f_a(p) = <a,p>;
/// estimates the first Laplace-Beltrami eigenvalue 4 c of the sphere.
double rayleigh_lambda1(const SphereSpec& spec, const SphereQuadrature& quad,
                        const Vec5& a, int threads = 1);

/// The identity map is harmonic: its second fundamental form is the
/// difference of two equal covariant derivatives. The spot check evaluates
/// both paths at seeded random points and reports the (identically zero)
/// residual.
struct HarmonicityNote {
  bool harmonic = true;
  double max_residual = 0.0;
};
HarmonicityNote identity_map_harmonicity_note(const SphereSpec& spec,
                                              std::uint64_t seed = 0,
                                              int trials = 16);

}  // namespace qsf
