#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qsf/check_report.hpp"
#include "qsf/hessian_identity.hpp"

namespace qsf {

enum class Classification { projective, euclidean, hyperbolic };
enum class Verdict { stable_index_zero, stable, unstable, indeterminate };

std::string to_string(Classification c);
std::string to_string(Verdict v);

/// First Laplace-Beltrami eigenvalue and Einstein constant of a compact
/// Einstein space, with the provenance of the numbers.
struct SpectralData {
  double lambda1 = 0.0;
  double einstein_constant = 0.0;
  enum class Source { literature, numerical } source = Source::literature;
};

/// Sign classification of the space form: c > 0 projective, c = 0
/// euclidean, c < 0 hyperbolic. Throws on non-finite c.
Classification classify(double c);

/// Constants of the quaternion projective space in the c = 4
/// normalization: lambda1 = 8(n+1), einstein constant 4(n+2).
SpectralData qps_constants(int n);

/// Einstein-manifold stability: stable iff lambda1 >= 2 * einstein
/// constant, unstable on strict violation.
Verdict smith_verdict(const SpectralData& sd);

/// lambda1 - 2C for the quaternion projective space: 8(n+1) - 8(n+2) = -8
/// for every n.
double qps_margin(int n);

/// Attached Monte Carlo confirmation (n=1 only; the sphere model is built
/// at the requested curvature).
struct SphereNumerics {
  double lambda1_estimate = 0.0;
  HessianBreakdown witness;  // coordinate-gradient field Hessian
};

struct StabilityReport {
  int n = 1;
  double c = 0.0;
  Classification classification = Classification::euclidean;
  Verdict verdict = Verdict::indeterminate;
  std::string criterion_used;
  std::string note;
  /// lambda1 - 2C; only meaningful for the projective case.
  std::optional<double> margin;
  std::optional<SpectralData> spectral;
  std::optional<SphereNumerics> numerics;
  CheckReport identity_checks;
};

struct FullReportOptions {
  bool attach_numerics = false;
  int trials = 200;
  std::int64_t samples = 200000;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Verdict chain: c < 0 -> stable-index-zero from the closed-form Hessian;
/// c = 0 -> stable (Dirichlet-only Hessian); c > 0 -> Smith criterion with
/// the projective constants, unstable. Numerics attach only at n = 1.
StabilityReport full_report(int n, double c, const FullReportOptions& opts = {});

}  // namespace qsf
