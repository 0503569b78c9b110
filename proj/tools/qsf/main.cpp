#include <exception>
#include <iostream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "qsf/report_io.hpp"
#include "qsf/runs.hpp"

namespace {

qsf::OutputFormat parse_format(const std::string& name) {
  if (name == "json") return qsf::OutputFormat::json;
  if (name == "csv") return qsf::OutputFormat::csv;
  if (name == "text") return qsf::OutputFormat::text;
  throw qsf::ConfigError("unknown format '" + name + "' (json|csv|text)");
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto bad = [&] {
    return qsf::ConfigError("bad range '" + text + "', expected LO..HI");
  };
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      std::size_t used = 0;
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw bad();
      return {n, n};
    }
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw bad();
    const std::string hi_text = text.substr(dots + 2);
    const int hi = std::stoi(hi_text, &used);
    if (used != hi_text.size()) throw bad();
    return {lo, hi};
  } catch (const qsf::ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

void add_run_flags(CLI::App* cmd, qsf::RunConfig& cfg, std::string& format) {
  cmd->add_option("--c", cfg.c, "quaternion sectional curvature")
      ->capture_default_str();
  cmd->add_option("--trials", cfg.trials, "seeded random trials")
      ->capture_default_str();
  cmd->add_option("--samples", cfg.samples, "Monte Carlo sample count")
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  cmd->add_option("--format", format, "output format: json|csv|text")
      ->capture_default_str();
  cmd->add_option("--threads", cfg.threads,
                  "worker threads for quadrature (does not change results)")
      ->capture_default_str();
  cmd->add_option("--tol-algebraic", cfg.tol_algebraic,
                  "tolerance for exact-identity residuals")
      ->capture_default_str();
  cmd->add_option("--tol-lambda1", cfg.tol_lambda1,
                  "relative tolerance for the eigenvalue estimate")
      ->capture_default_str();
  cmd->add_option("--tol-hessian", cfg.tol_hessian,
                  "relative tolerance for Hessian estimates")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternion space form stability checks"};
  app.set_version_flag("--version", "qsf 0.1.0");
  app.require_subcommand(1);

  qsf::RunConfig cfg;
  std::string format = "json";
  std::string range;

  CLI::App* identities = app.add_subcommand(
      "identities", "structure relations and the pointwise identity chain");
  identities->add_option("--n", cfg.n, "quaternion dimension")
      ->capture_default_str();
  add_run_flags(identities, cfg, format);

  CLI::App* curvature = app.add_subcommand(
      "curvature", "curvature tensor symmetries and contraction checks");
  curvature->add_option("--n", cfg.n, "quaternion dimension")
      ->capture_default_str();
  add_run_flags(curvature, cfg, format);

  CLI::App* sphere = app.add_subcommand(
      "sphere", "four-sphere model: eigenvalue estimate and Hessian witnesses");
  add_run_flags(sphere, cfg, format);

  CLI::App* stability = app.add_subcommand(
      "stability", "stability verdict for one (n, c) space form");
  stability->add_option("--n", cfg.n, "quaternion dimension")
      ->capture_default_str();
  stability->add_flag("--attach-numerics", cfg.attach_numerics,
                      "attach sphere-model estimates (n=1, c>0)");
  add_run_flags(stability, cfg, format);

  CLI::App* report = app.add_subcommand(
      "report", "verdict table over a range of quaternion dimensions");
  report->add_option("--n-range", range, "dimension range LO..HI")->required();
  add_run_flags(report, cfg, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.format = parse_format(format);
    qsf::RunOutput out;
    if (identities->parsed()) {
      cfg.subcommand = "identities";
      out = qsf::run_identities(cfg);
    } else if (curvature->parsed()) {
      cfg.subcommand = "curvature";
      out = qsf::run_curvature(cfg);
    } else if (sphere->parsed()) {
      cfg.subcommand = "sphere";
      out = qsf::run_sphere(cfg);
    } else if (stability->parsed()) {
      cfg.subcommand = "stability";
      out = qsf::run_stability(cfg);
    } else {
      cfg.subcommand = "report";
      std::tie(cfg.n_range_lo, cfg.n_range_hi) = parse_range(range);
      out = qsf::run_report(cfg);
    }
    std::cout << qsf::render(out, cfg.format);
    return out.exit_code();
  } catch (const qsf::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
