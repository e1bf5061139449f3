#include "casimir/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "casimir/errors.hpp"
#include "casimir/units.hpp"

namespace casimir::cli {
namespace {

using nlohmann::json;

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::free_energy, "free-energy"},
    {Command::pressure, "pressure"},
    {Command::entropy, "entropy"},
    {Command::sweep, "sweep"},
    {Command::compare_asymptotics, "compare-asymptotics"},
    {Command::nernst_check, "nernst-check"},
};

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

const json& require_object(const json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ConfigError("missing required section '" + key + "'");
  const auto& v = doc.at(key);
  if (!v.is_object()) throw ConfigError("'" + key + "' must be an object");
  return v;
}

double number(const json& obj, const std::string& key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(where + "." + key + " must be finite");
  return x;
}

template <class T>
void maybe(const json& obj, const std::string& key, T& out, const std::string& where) {
  if (!obj.contains(key)) return;
  if constexpr (std::is_same_v<T, bool>) {
    if (!obj.at(key).is_boolean()) throw ConfigError(where + "." + key + " must be a boolean");
    out = obj.at(key).get<bool>();
  } else if constexpr (std::is_integral_v<T>) {
    if (!obj.at(key).is_number_integer()) throw ConfigError(where + "." + key + " must be an integer");
    out = obj.at(key).get<T>();
  } else {
    out = number(obj, key, where);
  }
}

std::vector<double> grid(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw ConfigError(where + " must be a non-empty array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError(where + " must contain numbers");
    out.push_back(x.get<double>());
  }
  bool up = true;
  bool down = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!std::isfinite(out[i]) || !(out[i] > 0.0)) throw ConfigError(where + " values must be finite and positive");
    if (i > 0) {
      up = up && out[i] > out[i - 1];
      down = down && out[i] < out[i - 1];
    }
  }
  if (out.size() > 1 && !up && !down) throw ConfigError(where + " must be strictly monotone");
  return out;
}

MaterialModel parse_material(const json& m, const std::vector<double>& a_grid) {
  reject_unknown(m, {"eps0", "mu0", "debye", "dc"}, "material");
  double eps0 = 1.0;
  double mu0 = 1.0;
  maybe(m, "eps0", eps0, "material");
  maybe(m, "mu0", mu0, "material");
  try {
    auto model = MaterialModel::constant(eps0, mu0);
    if (m.contains("debye")) {
      const auto& d = m.at("debye");
      if (!d.is_object()) throw ConfigError("material.debye must be an object");
      reject_unknown(d, {"omega_m", "kappa_m"}, "material.debye");
      double omega = 0.0;
      if (d.contains("omega_m") == d.contains("kappa_m")) {
        throw ConfigError("material.debye needs exactly one of omega_m, kappa_m");
      }
      if (d.contains("omega_m")) {
        omega = number(d, "omega_m", "material.debye");
      } else {
        if (a_grid.size() != 1) throw ConfigError("material.debye.kappa_m requires a single separation");
        const double kappa = number(d, "kappa_m", "material.debye");
        if (!(kappa > 0.0)) throw ConfigError("material.debye.kappa_m must be positive");
        omega = constants::c / (2.0 * a_grid.front() * kappa);
      }
      model = MaterialModel::debye(eps0, mu0, omega);
    }
    if (m.contains("dc")) {
      const auto& d = m.at("dc");
      if (!d.is_object()) throw ConfigError("material.dc must be an object");
      reject_unknown(d, {"sigma_ref", "units", "b", "beta_ref", "T_ref"}, "material.dc");
      DcConductivity dc;
      if (!d.contains("b")) throw ConfigError("material.dc.b is required");
      dc.activation_temperature = number(d, "b", "material.dc");
      if (d.contains("sigma_ref") == d.contains("beta_ref")) {
        throw ConfigError("material.dc needs exactly one of sigma_ref, beta_ref");
      }
      if (d.contains("sigma_ref")) {
        dc.sigma_ref = number(d, "sigma_ref", "material.dc");
        const std::string units = d.value("units", "gaussian");
        if (units == "si") {
          dc.sigma_ref = si_conductivity_to_gaussian(dc.sigma_ref);
        } else if (units != "gaussian") {
          throw ConfigError("material.dc.units must be 'gaussian' or 'si'");
        }
      } else {
        if (!d.contains("T_ref")) throw ConfigError("material.dc.beta_ref requires T_ref");
        dc.sigma_ref = sigma_ref_for_beta(number(d, "beta_ref", "material.dc"), number(d, "T_ref", "material.dc"),
                                          dc.activation_temperature);
      }
      model = model.with_dc(dc);
    }
    return model;
  } catch (const DomainError& e) {
    throw ConfigError(std::string("material: ") + e.what());
  }
}

}  // namespace

Command parse_command(const std::string& name) {
  for (const auto& [c, n] : kCommands) {
    if (name == n) return c;
  }
  throw ConfigError("unknown command '" + name + "'");
}

std::string command_name(Command c) {
  for (const auto& [cmd, n] : kCommands) {
    if (cmd == c) return n;
  }
  return "?";
}

RunConfig parse_config(const json& doc, std::optional<Command> command_override) {
  if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
  reject_unknown(doc, {"command", "material", "geometry", "temperature", "engine", "diff", "output", "strict",
                       "nernst", "fit"},
                 "configuration");
  RunConfig cfg;
  std::optional<Command> from_doc;
  if (doc.contains("command")) {
    if (!doc.at("command").is_string()) throw ConfigError("command must be a string");
    from_doc = parse_command(doc.at("command").get<std::string>());
  }
  if (command_override && from_doc && *command_override != *from_doc) {
    throw ConfigError("command on the command line conflicts with the configuration");
  }
  if (!command_override && !from_doc) throw ConfigError("no command given");
  cfg.command = command_override ? *command_override : *from_doc;

  const auto& geo = require_object(doc, "geometry");
  reject_unknown(geo, {"a", "a_grid"}, "geometry");
  if (geo.contains("a") == geo.contains("a_grid")) throw ConfigError("geometry needs exactly one of a, a_grid");
  cfg.a_grid = geo.contains("a") ? grid(json::array({geo.at("a")}), "geometry.a") : grid(geo.at("a_grid"), "geometry.a_grid");

  const auto& temp = require_object(doc, "temperature");
  reject_unknown(temp, {"T", "T_grid", "tau_grid"}, "temperature");
  if (temp.size() != 1) throw ConfigError("temperature needs exactly one of T, T_grid, tau_grid");
  if (temp.contains("T")) {
    cfg.temperature.values = grid(json::array({temp.at("T")}), "temperature.T");
  } else if (temp.contains("T_grid")) {
    cfg.temperature.values = grid(temp.at("T_grid"), "temperature.T_grid");
  } else {
    cfg.temperature.kind = TemperatureGrid::Kind::tau;
    cfg.temperature.values = grid(temp.at("tau_grid"), "temperature.tau_grid");
  }

  cfg.material = parse_material(require_object(doc, "material"), cfg.a_grid);

  if (doc.contains("engine")) {
    const auto& e = doc.at("engine");
    if (!e.is_object()) throw ConfigError("engine must be an object");
    reject_unknown(e, {"quad_rel_tol", "panel_width", "y_cutoff_offset", "matsubara_rel_tol", "matsubara_consecutive",
                       "l_max_cap", "gauss_points"},
                   "engine");
    auto& s = cfg.engine;
    maybe(e, "quad_rel_tol", s.quad_rel_tol, "engine");
    maybe(e, "panel_width", s.panel_width, "engine");
    maybe(e, "y_cutoff_offset", s.y_cutoff_offset, "engine");
    maybe(e, "matsubara_rel_tol", s.matsubara_rel_tol, "engine");
    maybe(e, "matsubara_consecutive", s.matsubara_consecutive, "engine");
    maybe(e, "l_max_cap", s.l_max_cap, "engine");
    maybe(e, "gauss_points", s.gauss_points, "engine");
    if (!(s.quad_rel_tol > 0) || !(s.panel_width > 0) || !(s.y_cutoff_offset > 0) || !(s.matsubara_rel_tol > 0)) {
      throw ConfigError("engine tolerances and widths must be positive");
    }
    if (s.matsubara_consecutive < 1 || s.l_max_cap < 0 || s.l_max_cap > 10'000'000 || s.gauss_points < 2) {
      throw ConfigError("engine integer settings out of range");
    }
  }
  if (doc.contains("diff")) {
    const auto& d = doc.at("diff");
    if (!d.is_object()) throw ConfigError("diff must be an object");
    reject_unknown(d, {"rel_step", "richardson_levels", "min_abs_step"}, "diff");
    maybe(d, "rel_step", cfg.diff.rel_step, "diff");
    maybe(d, "richardson_levels", cfg.diff.richardson_levels, "diff");
    maybe(d, "min_abs_step", cfg.diff.min_abs_step, "diff");
    if (!(cfg.diff.rel_step > 0) || cfg.diff.richardson_levels < 1 || !(cfg.diff.min_abs_step >= 0)) {
      throw ConfigError("diff settings out of range");
    }
  }
  if (doc.contains("output")) {
    const auto& o = doc.at("output");
    if (!o.is_object()) throw ConfigError("output must be an object");
    reject_unknown(o, {"path", "format"}, "output");
    if (o.contains("path")) {
      if (!o.at("path").is_string()) throw ConfigError("output.path must be a string");
      cfg.output_path = o.at("path").get<std::string>();
    }
    if (o.contains("format")) {
      const auto f = o.at("format").is_string() ? o.at("format").get<std::string>() : std::string{};
      if (f == "csv") {
        cfg.format = OutputFormat::csv;
      } else if (f == "json") {
        cfg.format = OutputFormat::json;
      } else {
        throw ConfigError("output.format must be 'csv' or 'json'");
      }
    }
  }
  maybe(doc, "strict", cfg.strict, "configuration");
  if (doc.contains("nernst")) {
    const auto& n = doc.at("nernst");
    if (!n.is_object()) throw ConfigError("nernst must be an object");
    reject_unknown(n, {"tolerance"}, "nernst");
    maybe(n, "tolerance", cfg.nernst_tolerance, "nernst");
    if (!(cfg.nernst_tolerance > 0)) throw ConfigError("nernst.tolerance must be positive");
  }
  if (doc.contains("fit")) {
    const auto& f = doc.at("fit");
    if (!f.is_object()) throw ConfigError("fit must be an object");
    reject_unknown(f, {"tolerance", "correction_terms"}, "fit");
    maybe(f, "tolerance", cfg.fit_tolerance, "fit");
    maybe(f, "correction_terms", cfg.fit_correction_terms, "fit");
    if (!(cfg.fit_tolerance > 0) || cfg.fit_correction_terms < 0) throw ConfigError("fit settings out of range");
  }
  return cfg;
}

nlohmann::json to_json(const RunConfig& c) {
  json material = {{"eps0", c.material.eps0()}, {"mu0", c.material.mu0()}};
  if (c.material.omega_m()) material["debye"] = {{"omega_m", *c.material.omega_m()}};
  if (c.material.dc()) {
    material["dc"] = {{"sigma_ref", c.material.dc()->sigma_ref},
                      {"units", "gaussian"},
                      {"b", c.material.dc()->activation_temperature}};
  }
  json temperature;
  temperature[c.temperature.kind == TemperatureGrid::Kind::tau ? "tau_grid" : "T_grid"] = c.temperature.values;
  json out = {
      {"command", command_name(c.command)},
      {"material", material},
      {"geometry", {{"a_grid", c.a_grid}}},
      {"temperature", temperature},
      {"engine",
       {{"quad_rel_tol", c.engine.quad_rel_tol},
        {"panel_width", c.engine.panel_width},
        {"y_cutoff_offset", c.engine.y_cutoff_offset},
        {"matsubara_rel_tol", c.engine.matsubara_rel_tol},
        {"matsubara_consecutive", c.engine.matsubara_consecutive},
        {"l_max_cap", c.engine.l_max_cap},
        {"gauss_points", c.engine.gauss_points}}},
      {"diff",
       {{"rel_step", c.diff.rel_step},
        {"richardson_levels", c.diff.richardson_levels},
        {"min_abs_step", c.diff.min_abs_step}}},
      {"output", {{"format", c.format == OutputFormat::csv ? "csv" : "json"}}},
      {"strict", c.strict},
      {"nernst", {{"tolerance", c.nernst_tolerance}}},
      {"fit", {{"tolerance", c.fit_tolerance}, {"correction_terms", c.fit_correction_terms}}},
  };
  if (c.output_path) out["output"]["path"] = *c.output_path;
  return out;
}

RunConfig load_config(const std::string& path, std::optional<Command> command_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc, command_override);
}

}  // namespace casimir::cli
