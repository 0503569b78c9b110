#include "qsf/report_io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qsf {

namespace {

const char* format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "unknown";
}

nlohmann::ordered_json config_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["subcommand"] = cfg.subcommand;
  if (cfg.subcommand == "report") {
    j["n_range"] = {cfg.n_range_lo, cfg.n_range_hi};
  } else {
    j["n"] = cfg.n;
  }
  j["c"] = cfg.c;
  j["trials"] = cfg.trials;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["format"] = format_name(cfg.format);
  j["attach_numerics"] = cfg.attach_numerics;
  j["tol_algebraic"] = cfg.tol_algebraic;
  j["tol_lambda1"] = cfg.tol_lambda1;
  j["tol_hessian"] = cfg.tol_hessian;
  return j;
}

nlohmann::ordered_json check_json(const Check& check) {
  nlohmann::ordered_json j;
  j["name"] = check.name;
  j["paper_ref"] = check.paper_ref;
  if (check.kind == Check::Kind::residual)
    j["residual"] = check.value;
  else
    j["value"] = check.value;
  j["tolerance"] = check.tolerance;
  j["pass"] = check.pass;
  return j;
}

nlohmann::ordered_json row_json(const StabilityRow& row) {
  nlohmann::ordered_json j;
  j["n"] = row.n;
  j["c"] = row.c;
  j["classification"] = row.classification;
  j["verdict"] = row.verdict;
  j["lambda1"] = row.lambda1 ? nlohmann::ordered_json(*row.lambda1)
                             : nlohmann::ordered_json(nullptr);
  j["einstein_constant"] =
      row.einstein_constant ? nlohmann::ordered_json(*row.einstein_constant)
                            : nlohmann::ordered_json(nullptr);
  j["margin"] = row.margin ? nlohmann::ordered_json(*row.margin)
                           : nlohmann::ordered_json(nullptr);
  return j;
}

std::string optional_double(const std::optional<double>& x) {
  return x ? format_double(*x) : std::string();
}

}  // namespace

std::string format_double(double x) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, result.ptr);
}

std::string to_json(const RunOutput& out) {
  if (out.rows) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const StabilityRow& row : *out.rows) rows.push_back(row_json(row));
    return rows.dump(2) + "\n";
  }

  nlohmann::ordered_json j;
  j["config"] = config_json(out.config);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const Check& check : out.checks.checks)
    checks.push_back(check_json(check));
  j["checks"] = checks;
  if (out.verdict) j["verdict"] = *out.verdict;
  return j.dump(2) + "\n";
}

std::string to_csv(const RunOutput& out) {
  std::string csv;
  if (out.rows) {
    csv = "n,c,classification,verdict,lambda1,einstein_constant,margin\n";
    for (const StabilityRow& row : *out.rows) {
      csv += std::to_string(row.n) + ',' + format_double(row.c) + ',' +
             row.classification + ',' + row.verdict + ',' +
             optional_double(row.lambda1) + ',' +
             optional_double(row.einstein_constant) + ',' +
             optional_double(row.margin) + '\n';
    }
    return csv;
  }

  csv = "name,paper_ref,kind,value,tolerance,pass\n";
  for (const Check& check : out.checks.checks) {
    csv += check.name + ',' + check.paper_ref + ',' +
           (check.kind == Check::Kind::residual ? "residual" : "value") +
           ',' + format_double(check.value) + ',' +
           format_double(check.tolerance) + ',' +
           (check.pass ? "true" : "false") + '\n';
  }
  return csv;
}

std::string to_text(const RunOutput& out) {
  std::ostringstream text;
  if (out.rows) {
    text << "stability report (c = " << format_double(out.config.c) << ")\n";
    for (const StabilityRow& row : *out.rows) {
      text << "  n=" << row.n << "  " << row.classification << "  "
           << row.verdict;
      if (row.margin)
        text << "  (lambda1 " << format_double(*row.lambda1) << ", 2C "
             << format_double(2.0 * *row.einstein_constant) << ", margin "
             << format_double(*row.margin) << ")";
      text << "\n";
    }
    return text.str();
  }

  text << "qsf " << out.config.subcommand << " (n=" << out.config.n
       << ", c=" << format_double(out.config.c)
       << ", trials=" << out.config.trials
       << ", samples=" << out.config.samples << ", seed=" << out.config.seed
       << ")\n";
  for (const Check& check : out.checks.checks) {
    text << "  [" << (check.pass ? "PASS" : "FAIL") << "] " << check.name
         << "  "
         << (check.kind == Check::Kind::residual ? "residual " : "value ")
         << format_double(check.value);
    if (check.kind == Check::Kind::residual)
      text << " <= " << format_double(check.tolerance);
    text << "  (" << check.paper_ref << ")\n";
  }
  if (out.verdict) text << "verdict: " << *out.verdict << "\n";
  text << "result: " << (out.checks.pass() ? "PASS" : "FAIL") << "\n";
  return text.str();
}

std::string render(const RunOutput& out, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return to_json(out);
    case OutputFormat::csv: return to_csv(out);
    case OutputFormat::text: return to_text(out);
  }
  throw std::logic_error("unknown output format");
}

}  // namespace qsf
