#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/special_functions.hpp"

namespace casimir {
namespace {

using constants::c;
using constants::hbar;
using constants::k_B;
using constants::pi;

constexpr long kAbsoluteCap = 10'000'000;

struct ReflectionPair {
  double tm2;
  double te2;
};

// (alpha y - q)/(alpha y + q) written as ((alpha y)^2 - q^2)/(alpha y + q)^2 to
// keep precision when the coefficient is small.
double reflection(double alpha, double eps, double mu, double zeta, double y) {
  if (zeta == 0.0) return (alpha - 1.0) / (alpha + 1.0);
  const double shift = zeta * zeta * (eps * mu - 1.0);
  const double q = std::sqrt(y * y + shift);
  const double den = alpha * y + q;
  return ((alpha * alpha - 1.0) * y * y - shift) / (den * den);
}

ReflectionPair reflection_pair(const PermittivityValue& eps, double mu, double zeta, double y) {
  if (eps.is_infinite()) {
    // Only reached at the zero frequency, where q = y.
    const double te = (mu - 1.0) / (mu + 1.0);
    return {1.0, te * te};
  }
  const double tm = reflection(eps.value, eps.value, mu, zeta, y);
  const double te = reflection(mu, eps.value, mu, zeta, y);
  return {tm * tm, te * te};
}

// ln(1 - r^2 e^{-y})
double log_factor(double r2, double y) {
  if (r2 == 1.0) return std::log(-std::expm1(-y));
  return std::log1p(-r2 * std::exp(-y));
}

// r^2 / (e^y - r^2)
double pressure_factor(double r2, double y) {
  if (r2 == 1.0) return 1.0 / std::expm1(y);
  const double e = r2 * std::exp(-y);
  return e / (1.0 - e);
}

struct ModeSpec {
  PermittivityValue eps;
  double mu;
  double zeta;
};

double energy_integral(const ModeSpec& m, const EngineSettings& s, int points) {
  const auto breaks = graded_breakpoints(m.zeta, s.y_cutoff_offset, s.panel_width);
  return integrate_panels(
      [&](double y) {
        const auto r = reflection_pair(m.eps, m.mu, m.zeta, y);
        return y * (log_factor(r.tm2, y) + log_factor(r.te2, y));
      },
      breaks, gauss_legendre(points));
}

double pressure_integral(const ModeSpec& m, const EngineSettings& s, int points) {
  const auto breaks = graded_breakpoints(m.zeta, s.y_cutoff_offset, s.panel_width);
  return integrate_panels(
      [&](double y) {
        const auto r = reflection_pair(m.eps, m.mu, m.zeta, y);
        return y * y * (pressure_factor(r.tm2, y) + pressure_factor(r.te2, y));
      },
      breaks, gauss_legendre(points));
}

// Change of the energy integrand when eps_plain -> eps_dc; both finite.
double energy_difference_integral(const ModeSpec& dc, const ModeSpec& plain, const EngineSettings& s) {
  const auto breaks = graded_breakpoints(plain.zeta, s.y_cutoff_offset, s.panel_width);
  return integrate_panels(
      [&](double y) {
        const auto rd = reflection_pair(dc.eps, dc.mu, dc.zeta, y);
        const auto rp = reflection_pair(plain.eps, plain.mu, plain.zeta, y);
        const double e = std::exp(-y);
        // ln(1 - a) - ln(1 - b) = log1p((b - a) / (1 - b))
        const double tm = std::log1p((rp.tm2 - rd.tm2) * e / (1.0 - rp.tm2 * e));
        const double te = std::log1p((rp.te2 - rd.te2) * e / (1.0 - rp.te2 * e));
        return y * (tm + te);
      },
      breaks, gauss_legendre(s.gauss_points));
}

ModeSpec mode_at(const MaterialModel& model, const DimensionlessState& state, long l) {
  const double zeta = state.zeta(l);
  return {eval_eps(model, l, state.T), eval_mu(model, zeta, state.kappa_m), zeta};
}

long default_cap(double tau, const EngineSettings& s) {
  if (s.l_max_cap > 0) return s.l_max_cap;
  const double cap = std::ceil(60.0 / tau);
  return cap >= static_cast<double>(kAbsoluteCap) ? kAbsoluteCap : std::max(1L, static_cast<long>(cap));
}

struct SumOutcome {
  double sum = 0.0;
  ConvergenceReport report;
};

// Primed Matsubara sum: term(0)/2 + term(1) + ..., or l >= 1 only.
template <class TermFn>
SumOutcome matsubara_sum(TermFn&& term, const DimensionlessState& state, const EngineSettings& s,
                         bool include_zero) {
  if (!(state.tau > 0.0)) throw DomainError("Matsubara summation requires T > 0");
  SumOutcome out;
  const long cap = default_cap(state.tau, s);
  const bool fixed = s.fixed_l_count > 0;
  CompensatedSum sum;
  int negligible = 0;
  double last = 0.0;
  double prev = 0.0;
  long l = include_zero ? 0 : 1;
  for (;; ++l) {
    if (fixed) {
      if (l >= s.fixed_l_count) break;
    } else if (l >= cap) {
      out.report.hit_cap = true;
      break;
    }
    const double t = term(l);
    sum.add(l == 0 ? 0.5 * t : t);
    prev = last;
    last = t;
    if (!fixed && l >= 1) {
      negligible = std::abs(t) <= s.matsubara_rel_tol * std::abs(sum.value()) ? negligible + 1 : 0;
      if (negligible >= s.matsubara_consecutive) {
        ++l;
        break;
      }
    }
  }
  out.sum = sum.value();
  out.report.l_used = l;
  const double ratio = prev != 0.0 ? std::abs(last / prev) : 1.0;
  out.report.truncation_estimate =
      ratio < 1.0 ? std::abs(last) * ratio / (1.0 - ratio) : std::abs(last) * static_cast<double>(l);
  if (out.report.hit_cap) {
    std::ostringstream os;
    os << "Matsubara cap of " << cap << " terms reached before convergence";
    out.report.diagnostics.push_back(os.str());
  }
  if (state.tau < 1e-3) {
    out.report.diagnostics.push_back(
        "tau < 1e-3: the closed-form low-temperature expansions are the better tool here");
  }
  return out;
}

// (Y + 1) e^{-Y} bounds the energy tail beyond the cutoff up to the factor
// 1/(1 - r^2); the pressure tail carries (Y^2 + 2Y + 2).
double cutoff_tail(double cutoff, bool energy) {
  const double poly = energy ? cutoff + 1.0 : cutoff * cutoff + 2.0 * cutoff + 2.0;
  return 2.0 * poly * std::exp(-cutoff);
}

template <class Integral>
void finish_report(ConvergenceReport& report, Integral&& integral, const DimensionlessState& state,
                   const EngineSettings& s, double scale, double value, bool energy) {
  // Rule comparison on the first nonzero-frequency term.
  const long probe = report.l_used > 1 ? 1 : 0;
  const double coarse = integral(probe, s.gauss_points);
  const double fine = integral(probe, s.gauss_points + 8);
  const double weight = probe == 0 ? 0.5 : 1.0;
  report.quad_error_estimate =
      std::abs(scale) * (weight * std::abs(fine - coarse) * static_cast<double>(report.l_used) +
                         cutoff_tail(state.zeta(probe) + s.y_cutoff_offset, energy));
  report.truncation_estimate *= std::abs(scale);
  if (value != 0.0 && report.quad_error_estimate > s.quad_rel_tol * std::abs(value)) {
    report.diagnostics.push_back("quadrature error estimate exceeds quad_rel_tol");
  }
}

void require_same_base(const MaterialModel& a, const MaterialModel& b) {
  if (a.eps0() != b.eps0() || a.mu0() != b.mu0() || a.omega_m() != b.omega_m()) {
    throw ModelError("models must differ only in the dc-conductivity term");
  }
}

}  // namespace

DimensionlessState make_state(const MaterialModel& model, double a, double T) {
  return to_dimensionless(a, T, model.omega_m()).state;
}

double energy_prefactor(double a) { return hbar * c / (32.0 * pi * pi * a * a * a); }

double pressure_prefactor(double a) { return energy_prefactor(a) / a; }

double reflection_tm(double eps, double mu, double zeta, double y) {
  return reflection(eps, eps, mu, zeta, y);
}

double reflection_te(double eps, double mu, double zeta, double y) {
  return reflection(mu, eps, mu, zeta, y);
}

double matsubara_energy_term(const MaterialModel& model, const DimensionlessState& state, long l,
                             const EngineSettings& settings) {
  return energy_integral(mode_at(model, state, l), settings, settings.gauss_points);
}

double matsubara_pressure_term(const MaterialModel& model, const DimensionlessState& state, long l,
                               const EngineSettings& settings) {
  return pressure_integral(mode_at(model, state, l), settings, settings.gauss_points);
}

EngineResult free_energy(const MaterialModel& model, const DimensionlessState& state,
                         const EngineSettings& settings) {
  auto outcome = matsubara_sum(
      [&](long l) { return matsubara_energy_term(model, state, l, settings); }, state, settings, true);
  const double scale = energy_prefactor(state.a) * state.tau;
  EngineResult result{scale * outcome.sum, std::move(outcome.report)};
  finish_report(
      result.report,
      [&](long l, int points) { return energy_integral(mode_at(model, state, l), settings, points); },
      state, settings, scale, result.value, true);
  return result;
}

EngineResult pressure(const MaterialModel& model, const DimensionlessState& state,
                      const EngineSettings& settings) {
  auto outcome = matsubara_sum(
      [&](long l) { return matsubara_pressure_term(model, state, l, settings); }, state, settings, true);
  const double scale = -pressure_prefactor(state.a) * state.tau;
  EngineResult result{scale * outcome.sum, std::move(outcome.report)};
  finish_report(
      result.report,
      [&](long l, int points) { return pressure_integral(mode_at(model, state, l), settings, points); },
      state, settings, scale, result.value, false);
  return result;
}

namespace {

template <class Inner>
double zero_temperature_integral(const MaterialModel& model, double a, const EngineSettings& s,
                                 Inner&& inner) {
  if (model.conducting()) {
    throw ModelError("zero-temperature quantities are not defined for a dc-conducting model");
  }
  if (!(a > 0.0)) throw DomainError("separation must be positive");
  const double kappa = model.omega_m() ? kappa_of(a, *model.omega_m()) : 0.0;
  const auto breaks = graded_breakpoints(0.0, s.y_cutoff_offset, s.panel_width);
  return integrate_panels(
      [&](double zeta) {
        const ModeSpec m{PermittivityValue::finite(model.eps0()), eval_mu(model, zeta, kappa), zeta};
        return inner(m);
      },
      breaks, gauss_legendre(s.gauss_points));
}

}  // namespace

double zero_point_energy(const MaterialModel& model, double a, const EngineSettings& settings) {
  const double integral = zero_temperature_integral(
      model, a, settings, [&](const ModeSpec& m) { return energy_integral(m, settings, settings.gauss_points); });
  return energy_prefactor(a) * integral;
}

double zero_T_pressure(const MaterialModel& model, double a, const EngineSettings& settings) {
  const double integral = zero_temperature_integral(
      model, a, settings, [&](const ModeSpec& m) { return pressure_integral(m, settings, settings.gauss_points); });
  return -pressure_prefactor(a) * integral;
}

double free_energy_l0(const MaterialModel& model, const DimensionlessState& state) {
  const double r1 = (model.eps0() - 1.0) / (model.eps0() + 1.0);
  const double r2 = (model.mu0() - 1.0) / (model.mu0() + 1.0);
  const double tm = model.conducting() ? zeta3() : li3(r1 * r1);
  return -k_B * state.T / (16.0 * pi * state.a * state.a) * (tm + li3(r2 * r2));
}

EngineResult thermal_correction(const MaterialModel& model, const DimensionlessState& state,
                                const EngineSettings& settings) {
  if (model.conducting()) {
    throw ModelError("thermal correction is not defined for a dc-conducting model");
  }
  auto tight = settings;
  tight.matsubara_rel_tol = std::min(tight.matsubara_rel_tol, kSubtractionMatsubaraTol);
  auto result = free_energy(model, state, tight);
  result.value -= zero_point_energy(model, state.a, settings);
  return result;
}

EngineResult thermal_pressure(const MaterialModel& model, const DimensionlessState& state,
                              const EngineSettings& settings) {
  if (model.conducting()) {
    throw ModelError("thermal pressure correction is not defined for a dc-conducting model");
  }
  auto tight = settings;
  tight.matsubara_rel_tol = std::min(tight.matsubara_rel_tol, kSubtractionMatsubaraTol);
  auto result = pressure(model, state, tight);
  result.value -= zero_T_pressure(model, state.a, settings);
  return result;
}

EngineResult q_difference(const MaterialModel& model_dc, const MaterialModel& model_plain,
                          const DimensionlessState& state, const EngineSettings& settings) {
  require_same_base(model_dc, model_plain);
  if (model_plain.conducting()) throw ModelError("plain model must not carry a dc term");
  auto outcome = matsubara_sum(
      [&](long l) {
        return energy_difference_integral(mode_at(model_dc, state, l), mode_at(model_plain, state, l),
                                          settings);
      },
      state, settings, false);
  const double scale = energy_prefactor(state.a) * state.tau;
  outcome.report.truncation_estimate *= scale;
  return {scale * outcome.sum, std::move(outcome.report)};
}

}  // namespace casimir
