#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsf/check_report.hpp"
#include "qsf/spectral_criterion.hpp"

namespace qsf {

enum class OutputFormat { json, csv, text };

/// Parsed command configuration. `threads` controls internal parallelism
/// only and is deliberately not part of the serialized config echo.
struct RunConfig {
  std::string subcommand;
  int n = 1;
  double c = 4.0;
  int trials = 1000;
  std::int64_t samples = 1000000;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::json;
  int n_range_lo = 0;  // report subcommand
  int n_range_hi = -1;
  bool attach_numerics = false;
  double tol_algebraic = 1e-10;
  double tol_lambda1 = 0.01;
  double tol_hessian = 0.02;
  int threads = 1;
};

/// Pinned row shape of the `report` subcommand.
struct StabilityRow {
  int n = 1;
  double c = 0.0;
  std::string classification;
  std::string verdict;
  std::optional<double> lambda1;
  std::optional<double> einstein_constant;
  std::optional<double> margin;
};

struct RunOutput {
  RunConfig config;
  CheckReport checks;
  std::optional<std::string> verdict;
  /// Set for the `report` subcommand, which serializes as a row table.
  std::optional<std::vector<StabilityRow>> rows;

  int exit_code() const { return checks.pass() ? 0 : 1; }
};

/// Structure relations, curvature symmetries and the per-identity residual
/// chain for (n, c).
RunOutput run_identities(const RunConfig& cfg);

/// Curvature tensor checks: symmetries, the constant quaternion sectional
/// curvature, the frame contraction operator and (n=1) the
/// constant-curvature reduction.
RunOutput run_curvature(const RunConfig& cfg);

/// Sphere-model estimates at n=1, c>0: first eigenvalue, the
/// coordinate-gradient instability witness, Killing nullity and the
/// rough-Laplacian cross-check. Throws ConfigError for c <= 0.
RunOutput run_sphere(const RunConfig& cfg);

/// Single (n, c) stability verdict with its decisive checks.
RunOutput run_stability(const RunConfig& cfg);

/// One StabilityRow per n in the configured range.
RunOutput run_report(const RunConfig& cfg);

/// Invalid configuration (CLI exit code 2).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace qsf
