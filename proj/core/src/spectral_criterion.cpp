#include "qsf/spectral_criterion.hpp"

#include <cmath>
#include <stdexcept>

#include "qsf/sphere_model.hpp"

namespace qsf {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::projective: return "projective";
    case Classification::euclidean: return "euclidean";
    case Classification::hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::stable_index_zero: return "stable-index-zero";
    case Verdict::stable: return "stable";
    case Verdict::unstable: return "unstable";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "unknown";
}

Classification classify(double c) {
  if (!std::isfinite(c))
    throw std::invalid_argument("curvature must be finite");
  if (c > 0.0) return Classification::projective;
  if (c < 0.0) return Classification::hyperbolic;
  return Classification::euclidean;
}

SpectralData qps_constants(int n) {
  if (n < 1) throw std::invalid_argument("quaternion dimension must be >= 1");
  SpectralData sd;
  sd.lambda1 = 8.0 * (n + 1.0);
  sd.einstein_constant = 4.0 * (n + 2.0);
  sd.source = SpectralData::Source::literature;
  return sd;
}

Verdict smith_verdict(const SpectralData& sd) {
  return sd.lambda1 >= 2.0 * sd.einstein_constant ? Verdict::stable
                                                  : Verdict::unstable;
}

double qps_margin(int n) {
  const SpectralData sd = qps_constants(n);
  return sd.lambda1 - 2.0 * sd.einstein_constant;
}

StabilityReport full_report(int n, double c, const FullReportOptions& opts) {
  if (n < 1) throw std::invalid_argument("quaternion dimension must be >= 1");

  StabilityReport report;
  report.n = n;
  report.c = c;
  report.classification = classify(c);

  const SpaceFormParams params{n, c};
  if (opts.trials >= 1) {
    PointwiseStability pointwise =
        pointwise_stability_check(params, opts.trials, opts.seed);
    report.identity_checks = std::move(pointwise.checks);
  }

  switch (report.classification) {
    case Classification::hyperbolic:
      report.verdict = Verdict::stable_index_zero;
      report.criterion_used = "closed-form Hessian positivity";
      report.note =
          "compact examples arise as quotients of the quaternion hyperbolic "
          "space";
      break;
    case Classification::euclidean:
      report.verdict = Verdict::stable;
      report.criterion_used = "Dirichlet-only Hessian";
      report.note = "flat case: the Hessian reduces to the Dirichlet term";
      break;
    case Classification::projective: {
      // Scaling g -> t g multiplies both lambda1 and the Einstein constant
      // by 1/t, so the canonical constants 8(n+1), 4(n+2) at c = 4 rescale
      // linearly in c and the verdict is scale-invariant.
      SpectralData sd;
      sd.lambda1 = 2.0 * (n + 1.0) * c;
      sd.einstein_constant = (n + 2.0) * c;
      sd.source = SpectralData::Source::literature;
      report.verdict = smith_verdict(sd);
      report.criterion_used = "first-eigenvalue criterion for Einstein manifolds";
      report.margin = sd.lambda1 - 2.0 * sd.einstein_constant;
      report.note = c == 4.0
                        ? "canonical normalization: the Einstein constant "
                          "(n+2)c matches the frame contraction at c = 4"
                        : "spectral constants rescaled from the canonical "
                          "c = 4 normalization";

      if (opts.attach_numerics && n == 1) {
        const SphereSpec spec = SphereSpec::from_curvature(c);
        const SphereQuadrature quad = sample(spec, opts.samples, opts.seed);
        SphereNumerics numerics;
        numerics.lambda1_estimate =
            rayleigh_lambda1(spec, quad, Vec5::Unit(2), opts.threads);
        numerics.witness = hessian_identity_map(
            coordinate_gradient(Vec5::Unit(2)), spec, quad, opts.threads);
        report.numerics = numerics;
        sd.source = SpectralData::Source::numerical;
      }
      report.spectral = sd;
      break;
    }
  }
  return report;
}

}  // namespace qsf
