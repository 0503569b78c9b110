#pragma once

#include <string>

#include "qsf/runs.hpp"

namespace qsf {

/// Canonical JSON rendering: {config, checks, verdict?} for check runs, a
/// bare array of rows for the report subcommand. Byte-stable for a given
/// configuration.
std::string to_json(const RunOutput& out);

/// Canonical CSV: header row then data rows, '.' decimal separator.
std::string to_csv(const RunOutput& out);

/// Human-readable rendering; not covered by byte-stability guarantees.
std::string to_text(const RunOutput& out);

std::string render(const RunOutput& out, OutputFormat format);

/// Shortest round-trip decimal form via std::to_chars; locale-independent.
std::string format_double(double x);

}  // namespace qsf
