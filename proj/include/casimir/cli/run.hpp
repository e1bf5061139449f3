#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "casimir/cli/config.hpp"

namespace casimir::cli {

/// Numerics against asymptotics at one sweep point.
struct ComparisonRecord {
  double tau = 0.0;
  double numeric_value = 0.0;
  double asymptotic_value = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  std::optional<double> fitted_leading_coefficient;
  std::optional<double> target_coefficient;
};

[[nodiscard]] ComparisonRecord compare(double tau, double numeric, double asymptotic);

/// One output record; empty optionals are written as empty CSV fields / JSON null.
struct OutputRow {
  double a = 0.0;
  std::optional<double> T;
  std::optional<double> tau;
  std::string quantity;
  double value_SI = 0.0;
  std::optional<double> value_dimensionless;
  std::optional<double> asymptotic_SI;
  std::optional<double> rel_residual;
  std::optional<long> l_used;
  std::optional<bool> hit_cap;
  std::string flag;
};

inline constexpr const char* kCsvHeader =
    "a_m,T_K,tau,quantity,value_SI,value_dimensionless,asymptotic_SI,rel_residual,l_used,hit_cap,flag";

struct RunOutcome {
  std::vector<OutputRow> rows;
  bool any_cap_hit = false;
  std::vector<std::string> diagnostics;
};

/// Evaluates every grid point of the configured command, rows in input order.
/// Throws ConfigError when the command does not apply to the material.
[[nodiscard]] RunOutcome execute(const RunConfig& config);

void write_csv(std::ostream& os, const std::vector<OutputRow>& rows);
void write_json(std::ostream& os, const std::vector<OutputRow>& rows);

/// Exit statuses of the command-line tool.
enum ExitCode : int { kSuccess = 0, kRuntimeError = 1, kConfigError = 2, kConvergenceFailure = 3 };

/// Executes and writes output to config.output_path (or `fallback`);
/// diagnostics go to `log`. Returns the exit status.
int run(const RunConfig& config, std::ostream& fallback, std::ostream& log);

}  // namespace casimir::cli
