#include "casimir/cli/run.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "casimir/asymptotics.hpp"
#include "casimir/errors.hpp"
#include "casimir/fit.hpp"
#include "casimir/units.hpp"

namespace casimir::cli {
namespace {

namespace as = casimir::asymptotics;

double entropy_unit(double a) { return constants::k_B / (8.0 * constants::pi * a * a); }

std::optional<double> relative(double numeric, double reference) {
  const double diff = std::abs(numeric - reference);
  if (reference != 0.0) return diff / std::abs(reference);
  if (diff == 0.0) return 0.0;
  return std::nullopt;
}

double resolve_T(const RunConfig& cfg, double a, double v) {
  return cfg.temperature.kind == TemperatureGrid::Kind::tau ? temperature_of(a, v) : v;
}

OutputRow base_row(double a, double T, const std::string& quantity) {
  OutputRow row;
  row.a = a;
  row.T = T;
  row.tau = tau_of(a, T);
  row.quantity = quantity;
  return row;
}

void attach(OutputRow& row, const ConvergenceReport& report, RunOutcome& out) {
  row.l_used = report.l_used;
  row.hit_cap = report.hit_cap;
  out.any_cap_hit = out.any_cap_hit || report.hit_cap;
  for (const auto& d : report.diagnostics) out.diagnostics.push_back(d);
}

OutputRow free_energy_row(const RunConfig& cfg, double a, double T, RunOutcome& out) {
  const auto r = free_energy(cfg.material, make_state(cfg.material, a, T), cfg.engine);
  auto row = base_row(a, T, "free_energy");
  row.value_SI = r.value;
  row.value_dimensionless = r.value / energy_prefactor(a);
  attach(row, r.report, out);
  return row;
}

OutputRow pressure_row(const RunConfig& cfg, double a, double T, RunOutcome& out) {
  const auto r = pressure(cfg.material, make_state(cfg.material, a, T), cfg.engine);
  auto row = base_row(a, T, "pressure");
  row.value_SI = r.value;
  row.value_dimensionless = r.value / pressure_prefactor(a);
  attach(row, r.report, out);
  return row;
}

OutputRow entropy_row(const RunConfig& cfg, double a, double T, RunOutcome& out) {
  const auto r = entropy(cfg.material, a, T, cfg.engine, cfg.diff);
  auto row = base_row(a, T, "entropy");
  row.value_SI = r.value;
  row.value_dimensionless = r.value / entropy_unit(a);
  attach(row, r.report, out);
  return row;
}

as::AsymptoticInput asymptotic_input(const MaterialModel& m, double a, double T) {
  as::AsymptoticInput in;
  in.eps0 = m.eps0();
  in.mu0 = m.mu0();
  in.a = a;
  in.tau = tau_of(a, T);
  in.kappa_m = m.omega_m() ? kappa_of(a, *m.omega_m()) : 0.0;
  in.unit_mode = as::UnitMode::SI;
  return in;
}

void compare_asymptotics(const RunConfig& cfg, RunOutcome& out) {
  const auto& m = cfg.material;
  if (m.conducting()) {
    throw ConfigError("compare-asymptotics needs a model without dc conduction; use nernst-check");
  }
  const bool debye = m.is_debye();
  for (double a : cfg.a_grid) {
    std::vector<double> Ts;
    std::vector<double> Ss;
    for (double v : cfg.temperature.values) {
      const double T = resolve_T(cfg, a, v);
      const auto in = asymptotic_input(m, a, T);
      if (auto w = as::regime_warning(in)) out.diagnostics.push_back(*w);
      const auto state = make_state(m, a, T);

      const auto f = thermal_correction(m, state, cfg.engine);
      auto f_row = base_row(a, T, "thermal_free_energy");
      f_row.value_SI = f.value;
      f_row.value_dimensionless = f.value / energy_prefactor(a);
      attach(f_row, f.report, out);
      f_row.asymptotic_SI = debye ? as::delta_f_debye(in) : as::delta_f_nlo(in);
      f_row.rel_residual = compare(in.tau, f_row.value_SI, *f_row.asymptotic_SI).rel_residual;
      out.rows.push_back(f_row);

      const auto p = thermal_pressure(m, state, cfg.engine);
      auto p_row = base_row(a, T, "thermal_pressure");
      p_row.value_SI = p.value;
      p_row.value_dimensionless = p_row.value_SI / pressure_prefactor(a);
      p_row.asymptotic_SI = debye ? as::delta_p_debye(in) : as::delta_p_leading(in);
      p_row.rel_residual = compare(in.tau, p_row.value_SI, *p_row.asymptotic_SI).rel_residual;
      attach(p_row, p.report, out);
      out.rows.push_back(p_row);

      auto s_row = entropy_row(cfg, a, T, out);
      s_row.asymptotic_SI = debye ? as::entropy_debye(in) : as::entropy_nlo(in);
      s_row.rel_residual = compare(in.tau, s_row.value_SI, *s_row.asymptotic_SI).rel_residual;
      out.rows.push_back(s_row);
      Ts.push_back(T);
      Ss.push_back(s_row.value_SI);
    }
    if (Ts.size() >= 4 && !m.is_vacuum()) {
      const int power = debye ? 1 : 2;
      const auto terms = std::min<int>(cfg.fit_correction_terms, static_cast<int>(Ts.size()) - 2);
      const auto fit = fit_leading_coefficient(Ts, Ss, power, terms);
      const double target = debye ? as::entropy_debye_coefficient(m.mu0(), *m.omega_m(), a)
                                  : as::entropy_leading_coefficient(m.eps0(), m.mu0());
      OutputRow row;
      row.a = a;
      row.quantity = debye ? "entropy_coefficient_T1" : "entropy_coefficient_T2";
      row.value_SI = fit.coefficient;
      row.asymptotic_SI = target;
      row.rel_residual = relative(fit.coefficient, target);
      row.flag = row.rel_residual && *row.rel_residual <= cfg.fit_tolerance ? "PASS" : "FAIL";
      out.rows.push_back(row);
    }
  }
}

void nernst_check(const RunConfig& cfg, RunOutcome& out) {
  const auto& m = cfg.material;
  for (double a : cfg.a_grid) {
    const double scale = nernst_limit_dc(a, m.eps0());
    const double target = m.conducting() ? scale : 0.0;
    std::vector<double> Ts;
    std::vector<double> Ss;
    for (double v : cfg.temperature.values) {
      const double T = resolve_T(cfg, a, v);
      auto row = entropy_row(cfg, a, T, out);
      row.asymptotic_SI = target;
      row.rel_residual = std::abs(row.value_SI - target) / scale;
      Ts.push_back(T);
      Ss.push_back(row.value_SI);
      out.rows.push_back(row);
    }
    OutputRow row;
    row.a = a;
    row.T = 0.0;
    row.tau = 0.0;
    row.quantity = "entropy_zero_limit";
    if (Ts.size() >= 2) {
      std::vector<int> powers = m.is_debye() ? std::vector<int>{1, 2, 3} : std::vector<int>{2, 3, 4};
      powers.resize(std::min(powers.size(), Ts.size() - 1));
      row.value_SI = extrapolate_to_zero(Ts, Ss, powers).limit;
    } else {
      row.value_SI = Ss.front();
    }
    row.value_dimensionless = row.value_SI / entropy_unit(a);
    row.asymptotic_SI = target;
    row.rel_residual = std::abs(row.value_SI - target) / scale;
    row.flag = *row.rel_residual <= cfg.nernst_tolerance ? "PASS" : "FAIL";
    out.rows.push_back(row);
  }
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class T>
std::string field(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "true" : "false";
  } else if constexpr (std::is_integral_v<T>) {
    return std::to_string(*v);
  } else {
    return std::isfinite(*v) ? format_number(*v) : std::string{};
  }
}

template <class T>
nlohmann::json json_field(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(*v)) return nullptr;
  }
  return *v;
}

}  // namespace

ComparisonRecord compare(double tau, double numeric, double asymptotic) {
  ComparisonRecord r;
  r.tau = tau;
  r.numeric_value = numeric;
  r.asymptotic_value = asymptotic;
  r.abs_residual = std::abs(numeric - asymptotic);
  r.rel_residual = relative(numeric, asymptotic).value_or(INFINITY);
  return r;
}

RunOutcome execute(const RunConfig& cfg) {
  RunOutcome out;
  switch (cfg.command) {
    case Command::compare_asymptotics:
      compare_asymptotics(cfg, out);
      return out;
    case Command::nernst_check:
      nernst_check(cfg, out);
      return out;
    default:
      break;
  }
  for (double a : cfg.a_grid) {
    for (double v : cfg.temperature.values) {
      const double T = resolve_T(cfg, a, v);
      if (cfg.command == Command::free_energy || cfg.command == Command::sweep) {
        out.rows.push_back(free_energy_row(cfg, a, T, out));
      }
      if (cfg.command == Command::pressure || cfg.command == Command::sweep) {
        out.rows.push_back(pressure_row(cfg, a, T, out));
      }
      if (cfg.command == Command::entropy || cfg.command == Command::sweep) {
        out.rows.push_back(entropy_row(cfg, a, T, out));
      }
    }
  }
  return out;
}

void write_csv(std::ostream& os, const std::vector<OutputRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << format_number(r.a) << ',' << field(r.T) << ',' << field(r.tau) << ',' << r.quantity << ','
       << format_number(r.value_SI) << ',' << field(r.value_dimensionless) << ',' << field(r.asymptotic_SI) << ','
       << field(r.rel_residual) << ',' << field(r.l_used) << ',' << field(r.hit_cap) << ',' << r.flag << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<OutputRow>& rows) {
  auto doc = nlohmann::json::array();
  for (const auto& r : rows) {
    doc.push_back({
        {"a_m", r.a},
        {"T_K", json_field(r.T)},
        {"tau", json_field(r.tau)},
        {"quantity", r.quantity},
        {"value_SI", r.value_SI},
        {"value_dimensionless", json_field(r.value_dimensionless)},
        {"asymptotic_SI", json_field(r.asymptotic_SI)},
        {"rel_residual", json_field(r.rel_residual)},
        {"l_used", json_field(r.l_used)},
        {"hit_cap", json_field(r.hit_cap)},
        {"flag", r.flag.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.flag)},
    });
  }
  os << doc.dump(2) << '\n';
}

int run(const RunConfig& cfg, std::ostream& fallback, std::ostream& log) {
  RunOutcome outcome;
  try {
    outcome = execute(cfg);
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  std::ofstream file;
  std::ostream* os = &fallback;
  if (cfg.output_path) {
    file.open(*cfg.output_path);
    if (!file) {
      log << "error: cannot write '" << *cfg.output_path << "'\n";
      return kRuntimeError;
    }
    os = &file;
  }
  if (cfg.format == OutputFormat::csv) {
    write_csv(*os, outcome.rows);
  } else {
    write_json(*os, outcome.rows);
  }
  for (const auto& d : outcome.diagnostics) log << "warning: " << d << '\n';
  if (outcome.any_cap_hit) {
    log << (cfg.strict ? "error" : "warning") << ": Matsubara cap reached for at least one point\n";
    if (cfg.strict) return kConvergenceFailure;
  }
  return kSuccess;
}

}  // namespace casimir::cli
