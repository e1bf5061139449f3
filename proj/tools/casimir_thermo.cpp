#include <CLI11.hpp>
#include <iostream>

#include "casimir/cli/config.hpp"
#include "casimir/cli/run.hpp"

int main(int argc, char** argv) {
  using namespace casimir::cli;
  CLI::App app{"Casimir free energy, pressure and entropy of magnetodielectric plates"};
  std::string command;
  std::string config_path;
  std::optional<std::string> output;
  std::optional<std::string> format;
  bool strict = false;
  bool echo = false;
  app.add_option("command", command, "free-energy | pressure | entropy | sweep | compare-asymptotics | nernst-check")
      ->required()
      ->check(CLI::IsMember({"free-energy", "pressure", "entropy", "sweep", "compare-asymptotics", "nernst-check"}));
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--output", output, "output file (default: config output.path, else stdout)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--strict", strict, "fail with exit 3 when a Matsubara sum hits its cap");
  app.add_flag("--echo-config", echo, "print the canonical configuration and exit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  RunConfig config;
  try {
    config = load_config(config_path, parse_command(command));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  if (output) config.output_path = *output;
  if (format) config.format = *format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (strict) config.strict = true;
  if (echo) {
    std::cout << to_json(config).dump(2) << '\n';
    return kSuccess;
  }
  return run(config, std::cout, std::cerr);
}
