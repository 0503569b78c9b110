#include "qsf/runs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qsf/curvature.hpp"
#include "qsf/hessian_identity.hpp"
#include "qsf/quaternion_frame.hpp"
#include "qsf/rng.hpp"
#include "qsf/sphere_model.hpp"

namespace qsf {

namespace {

// Dense structure matrices make the algebraic subcommands O((4n)^5) in the
// worst path (operator assembly); keep the CLI in the cheap regime.
constexpr int kMaxCliN = 8;

void validate_shared(const RunConfig& cfg) {
  if (!std::isfinite(cfg.c)) throw ConfigError("c must be finite");
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  if (cfg.samples < 1) throw ConfigError("samples must be >= 1");
  if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
  if (!(cfg.tol_algebraic > 0.0) || !(cfg.tol_lambda1 > 0.0) ||
      !(cfg.tol_hessian > 0.0))
    throw ConfigError("tolerances must be > 0");
}

void validate_n(const RunConfig& cfg) {
  if (cfg.n < 1) throw ConfigError("n must be >= 1");
  if (cfg.n > kMaxCliN) throw ConfigError("n must be <= 8 for dense checks");
}

double safe_inverse(double x) { return 1.0 / std::max(x, 1e-300); }

}  // namespace

RunOutput run_identities(const RunConfig& cfg) {
  validate_shared(cfg);
  validate_n(cfg);

  RunOutput out;
  out.config = cfg;

  const SpaceFormParams params{cfg.n, cfg.c};
  const QuaternionStructure q = build_standard_structure(cfg.n);
  out.checks.append(verify_structure(q, cfg.tol_algebraic));
  out.checks.append(
      check_symmetries(params, q, cfg.trials, cfg.seed, cfg.tol_algebraic));

  const Eigen::MatrixXd op =
      curvature_term_operator(params, q, build_adapted_frame(q, cfg.seed));

  double cri1_dev = 0.0, cri2_dev = 0.0, co1_dev = 0.0, co2_dev = 0.0;
  double collapse_dev = 0.0, operator_dev = 0.0;
  const double coeff = (cfg.n + 2.0) * cfg.c;
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t trial_seed = rng::derive_seed(cfg.seed, t);
    const AdaptedFrame frame = build_adapted_frame(q, trial_seed);
    std::mt19937_64 gen(rng::derive_seed(trial_seed, 0x76656374ULL));
    const Eigen::VectorXd v = rng::gaussian_vector(q.dim(), gen);
    const double inv_v2 = safe_inverse(v.squaredNorm());

    for (int i = 0; i < cfg.n; ++i) {
      const Eigen::VectorXd e = frame.base(i);
      cri1_dev = std::max(cri1_dev,
                          std::abs(cri1_density(params, q, frame, v, i) -
                                   riemann(params, q, e, v, e, v)) *
                              inv_v2);
      for (int alpha = 0; alpha < 3; ++alpha) {
        const Eigen::VectorXd je = frame.rotated(alpha, i);
        cri2_dev = std::max(
            cri2_dev, std::abs(cri2_density(params, q, frame, v, i, alpha) -
                               riemann(params, q, je, v, je, v)) *
                          inv_v2);
      }
    }

    const auto [co1_lhs, co1_rhs] = co1_identity(frame, v);
    co1_dev = std::max(co1_dev, std::abs(co1_lhs - co1_rhs) * inv_v2);
    const auto [co2_lhs, co2_rhs] = co2_identity(q, frame, v);
    co2_dev = std::max(co2_dev, std::abs(co2_lhs - co2_rhs) * inv_v2);

    const double total = total_curvature_density(params, q, frame, v);
    collapse_dev = std::max(
        collapse_dev, std::abs(total + coeff * v.squaredNorm()) * inv_v2);
    operator_dev = std::max(
        operator_dev, std::abs(total + v.dot(op * v)) * inv_v2);
  }

  const double scale = 1.0 + std::abs(cfg.c);
  out.checks.checks.push_back(Check::residual(
      "cri1_matches_curvature", "base-direction-density", cri1_dev,
      cfg.tol_algebraic / 100.0 * scale));
  out.checks.checks.push_back(Check::residual(
      "cri2_matches_curvature", "rotated-direction-density", cri2_dev,
      cfg.tol_algebraic / 100.0 * scale));
  out.checks.checks.push_back(Check::residual(
      "frame_parseval_identity", "frame-parseval", co1_dev, cfg.tol_algebraic));
  out.checks.checks.push_back(Check::residual(
      "j_component_identity", "rotated-parseval", co2_dev, cfg.tol_algebraic));
  out.checks.checks.push_back(Check::residual(
      "density_collapse", "hessian-curvature-term", collapse_dev,
      cfg.tol_algebraic * scale));
  out.checks.checks.push_back(Check::residual(
      "density_matches_operator", "einstein-contraction", operator_dev,
      cfg.tol_algebraic * scale));
  return out;
}

RunOutput run_curvature(const RunConfig& cfg) {
  validate_shared(cfg);
  validate_n(cfg);

  RunOutput out;
  out.config = cfg;

  const SpaceFormParams params{cfg.n, cfg.c};
  const QuaternionStructure q = build_standard_structure(cfg.n);
  out.checks.append(
      check_symmetries(params, q, cfg.trials, cfg.seed, cfg.tol_algebraic));

  double sectional_dev = 0.0;
  for (int t = 0; t < cfg.trials; ++t) {
    std::mt19937_64 gen(rng::derive_seed(cfg.seed, 0x73656374ULL + t));
    const Eigen::VectorXd x = rng::gaussian_vector(q.dim(), gen);
    sectional_dev = std::max(
        sectional_dev,
        std::abs(quaternion_sectional(params, q, x, t % 3) - cfg.c));
  }
  const double scale = 1.0 + std::abs(cfg.c);
  out.checks.checks.push_back(Check::residual(
      "quaternion_sectional_constant", "constant-sectional-curvature",
      sectional_dev, cfg.tol_algebraic * scale));

  double operator_dev = 0.0;
  const Eigen::MatrixXd model = (cfg.n + 2.0) * cfg.c *
                                Eigen::MatrixXd::Identity(q.dim(), q.dim());
  for (int k = 0; k < 5; ++k) {
    const AdaptedFrame frame =
        build_adapted_frame(q, rng::derive_seed(cfg.seed, 0x6672616dULL + k));
    operator_dev =
        std::max(operator_dev, (curvature_term_operator(params, q, frame) -
                                model).cwiseAbs().maxCoeff());
  }
  out.checks.checks.push_back(Check::residual(
      "einstein_contraction_operator", "einstein-contraction", operator_dev,
      cfg.tol_algebraic * scale * cfg.n));

  if (cfg.n == 1) out.checks.append(constant_curvature_reduction(params, q));
  return out;
}

RunOutput run_sphere(const RunConfig& cfg) {
  validate_shared(cfg);
  if (cfg.c <= 0.0)
    throw ConfigError(
        "no desk-scale compact model for c <= 0: the compact space forms of "
        "negative curvature are quotients of the quaternion hyperbolic space");

  RunOutput out;
  out.config = cfg;
  out.config.n = 1;  // the sphere model is the n = 1 space form

  const SphereSpec spec = SphereSpec::from_curvature(cfg.c);
  const SphereQuadrature quad = sample(spec, cfg.samples, cfg.seed);
  const double pi2 = std::numbers::pi * std::numbers::pi;

  const double lambda1_exact = 4.0 * cfg.c;
  const double lambda1_est =
      rayleigh_lambda1(spec, quad, Vec5::Unit(2), cfg.threads);
  out.checks.checks.push_back(Check::value_of(
      "lambda1_closed_form", "first-eigenvalue", lambda1_exact, 0.0, true));
  out.checks.checks.push_back(Check::value_of(
      "lambda1_estimate", "first-eigenvalue", lambda1_est, cfg.tol_lambda1,
      std::abs(lambda1_est - lambda1_exact) <= cfg.tol_lambda1 * lambda1_exact));

  const HessianBreakdown witness = hessian_identity_map(
      coordinate_gradient(Vec5::Unit(2)), spec, quad, cfg.threads);
  const double witness_exact = -64.0 * pi2 / (15.0 * cfg.c);
  out.checks.checks.push_back(Check::value_of(
      "instability_witness_closed_form", "identity-map-instability",
      witness_exact, 0.0, true));
  out.checks.checks.push_back(Check::value_of(
      "instability_witness_total", "identity-map-instability", witness.total,
      0.0, witness.total < 0.0));
  out.checks.checks.push_back(Check::residual(
      "instability_witness_accuracy", "identity-map-instability",
      std::abs(witness.total - witness_exact) * safe_inverse(-witness_exact),
      cfg.tol_hessian));
  out.checks.checks.push_back(Check::value_of(
      "witness_dirichlet", "second-variation-terms", witness.dirichlet, 0.0,
      true));
  out.checks.checks.push_back(Check::value_of(
      "witness_l2", "second-variation-terms", witness.l2, 0.0, true));

  out.checks.checks.push_back(Check::residual(
      "rough_laplacian_identity", "integration-by-parts",
      std::abs(witness.dirichlet - cfg.c * witness.l2) *
          safe_inverse(witness.dirichlet),
      cfg.tol_hessian));

  const HessianBreakdown killing = hessian_identity_map(
      killing_rotation(0, 1), spec, quad, cfg.threads);
  out.checks.checks.push_back(Check::value_of(
      "killing_hessian_total", "killing-nullity", killing.total, 0.0,
      std::abs(killing.total) <= cfg.tol_hessian * killing.dirichlet));
  out.checks.checks.push_back(Check::residual(
      "killing_nullity_ratio", "killing-nullity",
      std::abs(killing.total) * safe_inverse(killing.dirichlet),
      cfg.tol_hessian));

  const HarmonicityNote note = identity_map_harmonicity_note(spec, cfg.seed);
  out.checks.checks.push_back(Check::residual(
      "identity_map_harmonicity", "harmonic-identity-map", note.max_residual,
      1e-12));

  out.verdict = witness.total < 0.0 ? "unstable" : "indeterminate";
  return out;
}

RunOutput run_stability(const RunConfig& cfg) {
  validate_shared(cfg);
  validate_n(cfg);

  FullReportOptions opts;
  opts.attach_numerics = cfg.attach_numerics;
  opts.trials = cfg.trials;
  opts.samples = cfg.samples;
  opts.seed = cfg.seed;
  opts.threads = cfg.threads;
  const StabilityReport report = full_report(cfg.n, cfg.c, opts);

  RunOutput out;
  out.config = cfg;
  out.checks = report.identity_checks;
  if (report.spectral) {
    out.checks.checks.push_back(Check::value_of(
        "lambda1", "first-eigenvalue", report.spectral->lambda1, 0.0, true));
    out.checks.checks.push_back(Check::value_of(
        "einstein_constant", "einstein-constant",
        report.spectral->einstein_constant, 0.0, true));
    out.checks.checks.push_back(Check::value_of(
        "margin", "spectral-stability-margin", *report.margin, 0.0,
        (*report.margin < 0.0) == (report.verdict == Verdict::unstable)));
  }
  if (report.numerics) {
    const double lambda1_exact = report.spectral->lambda1;
    out.checks.checks.push_back(Check::value_of(
        "lambda1_estimate", "first-eigenvalue",
        report.numerics->lambda1_estimate, cfg.tol_lambda1,
        std::abs(report.numerics->lambda1_estimate - lambda1_exact) <=
            cfg.tol_lambda1 * lambda1_exact));
    out.checks.checks.push_back(Check::value_of(
        "instability_witness_total", "identity-map-instability",
        report.numerics->witness.total, 0.0,
        report.numerics->witness.total < 0.0));
  }
  out.verdict = to_string(report.verdict);
  return out;
}

RunOutput run_report(const RunConfig& cfg) {
  validate_shared(cfg);
  if (cfg.n_range_lo < 1 || cfg.n_range_hi < cfg.n_range_lo)
    throw ConfigError("report needs a nonempty range: --n-range LO..HI with "
                      "1 <= LO <= HI");
  if (cfg.n_range_hi > 100000)
    throw ConfigError("range upper bound is capped at 100000");

  RunOutput out;
  out.config = cfg;
  out.rows.emplace();

  FullReportOptions opts;
  opts.trials = 0;  // rows are symbolic; skip the pointwise trials
  for (int n = cfg.n_range_lo; n <= cfg.n_range_hi; ++n) {
    const StabilityReport report = full_report(n, cfg.c, opts);
    StabilityRow row;
    row.n = n;
    row.c = cfg.c;
    row.classification = to_string(report.classification);
    row.verdict = to_string(report.verdict);
    if (report.spectral) {
      row.lambda1 = report.spectral->lambda1;
      row.einstein_constant = report.spectral->einstein_constant;
      row.margin = report.margin;
    }
    out.rows->push_back(std::move(row));
  }
  return out;
}

}  // namespace qsf
