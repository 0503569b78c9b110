#pragma once

#include <string>
#include <vector>

namespace qsf {

/// One named verification entry. `kind` decides whether `value` is a
/// residual (compared as value <= tolerance) or a plain reported value.
struct Check {
  enum class Kind { residual, value };

  std::string name;
  std::string paper_ref;
  Kind kind = Kind::residual;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  static Check residual(std::string name, std::string ref, double residual,
                        double tolerance) {
    return Check{std::move(name), std::move(ref), Kind::residual, residual,
                 tolerance, residual <= tolerance};
  }
  static Check value_of(std::string name, std::string ref, double value,
                        double tolerance, bool pass) {
    return Check{std::move(name), std::move(ref), Kind::value, value,
                 tolerance, pass};
  }
};

struct CheckReport {
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  double max_residual() const {
    double m = 0.0;
    for (const auto& c : checks)
      if (c.kind == Check::Kind::residual && c.value > m) m = c.value;
    return m;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  void append(const CheckReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace qsf
