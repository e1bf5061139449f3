#pragma once

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"
#include "casimir/thermodynamics.hpp"

namespace casimir::cli {

/// Configuration rejected by validation; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { free_energy, pressure, entropy, sweep, compare_asymptotics, nernst_check };
enum class OutputFormat { csv, json };

[[nodiscard]] Command parse_command(const std::string& name);
[[nodiscard]] std::string command_name(Command c);

/// Temperatures are given either in kelvin or as dimensionless tau (the
/// latter resolved per separation).
struct TemperatureGrid {
  enum class Kind { kelvin, tau };
  Kind kind = Kind::kelvin;
  std::vector<double> values;
};

struct RunConfig {
  Command command = Command::free_energy;
  MaterialModel material = MaterialModel::constant(1.0, 1.0);
  std::vector<double> a_grid;  // m
  TemperatureGrid temperature;
  EngineSettings engine;
  DiffSettings diff;
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::csv;
  bool strict = false;
  /// Relative tolerance of the nernst-check PASS/FAIL flag.
  double nernst_tolerance = 1e-2;
  /// Relative tolerance of the compare-asymptotics coefficient flag.
  double fit_tolerance = 2e-2;
  int fit_correction_terms = 1;
};

/// Parses and validates a configuration document. `command_override`
/// (from the command line) wins over a "command" key; a conflicting pair is
/// an error. Throws ConfigError.
[[nodiscard]] RunConfig parse_config(const nlohmann::json& doc,
                                     std::optional<Command> command_override = std::nullopt);

/// Canonical JSON form; parse_config(to_json(c)) reproduces c.
[[nodiscard]] nlohmann::json to_json(const RunConfig& config);

[[nodiscard]] RunConfig load_config(const std::string& path,
                                    std::optional<Command> command_override = std::nullopt);

}  // namespace casimir::cli
