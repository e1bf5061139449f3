#include "casimir/thermodynamics.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/richardson.hpp"
#include "casimir/special_functions.hpp"

namespace casimir {
namespace {

double base_step(double x, const DiffSettings& diff) {
  if (!(diff.rel_step > 0.0)) throw DomainError("rel_step must be positive");
  if (diff.richardson_levels < 0) throw DomainError("richardson_levels must be >= 0");
  const double h = std::max(diff.rel_step * x, std::ldexp(diff.min_abs_step, diff.richardson_levels));
  if (!(x - h > 0.0)) throw StepUnderflow("finite-difference stencil reaches below zero");
  return h;
}

// Settings with the Matsubara count fixed by an adaptive run at the
// stencil point with the smallest tau.
EngineSettings frozen_settings(const MaterialModel& model, double a, double T, EngineSettings s,
                               ConvergenceReport* report) {
  s.matsubara_rel_tol = std::min(s.matsubara_rel_tol, kDerivativeMatsubaraTol);
  if (s.fixed_l_count == 0) {
    auto probe = free_energy(model, make_state(model, a, T), s);
    s.fixed_l_count = probe.report.l_used;
    if (report) *report = std::move(probe.report);
  }
  return s;
}

}  // namespace

EntropyResult entropy(const MaterialModel& model, double a, double T, const EngineSettings& settings,
                      const DiffSettings& diff) {
  if (!(T > 0.0)) throw DomainError("entropy requires T > 0");
  const double h = base_step(T, diff);
  EntropyResult out;
  const auto frozen = frozen_settings(model, a, T - h, settings, &out.report);
  const auto d = central_richardson(
      [&](double t) { return free_energy(model, make_state(model, a, t), frozen).value; }, T, h,
      diff.richardson_levels);
  out.value = -d.value;
  out.error_estimate = d.error;
  return out;
}

DerivativeEstimate free_energy_separation_derivative(const MaterialModel& model, double a, double T,
                                                     const EngineSettings& settings,
                                                     const DiffSettings& diff) {
  if (!(a > 0.0)) throw DomainError("separation must be positive");
  DiffSettings in_a = diff;
  in_a.min_abs_step = 0.0;
  const double h = base_step(a, in_a);
  const auto frozen = frozen_settings(model, a - h, T, settings, nullptr);
  return central_richardson(
      [&](double x) { return free_energy(model, make_state(model, x, T), frozen).value; }, a, h,
      diff.richardson_levels);
}

double pressure_consistency(const MaterialModel& model, double a, double T, const EngineSettings& settings,
                            const DiffSettings& diff) {
  const double P = pressure(model, make_state(model, a, T), settings).value;
  const double dFda = free_energy_separation_derivative(model, a, T, settings, diff).value;
  const double num = std::abs(P + dFda);
  if (P == 0.0) return num == 0.0 ? 0.0 : INFINITY;
  return num / std::abs(P);
}

double nernst_limit_dc(double a, double eps0) {
  if (!(a > 0.0)) throw DomainError("separation must be positive");
  if (!(eps0 >= 1.0)) throw DomainError("eps0 must be >= 1");
  const double r = (eps0 - 1.0) / (eps0 + 1.0);
  return constants::k_B / (16.0 * constants::pi * a * a) * (zeta3() - li3(r * r));
}

DcEntropyDecomposition entropy_dc_decomposition(const MaterialModel& model_dc, const MaterialModel& model_plain,
                                                double a, double T, const EngineSettings& settings,
                                                const DiffSettings& diff) {
  DcEntropyDecomposition out;
  const auto plain = entropy(model_plain, a, T, settings, diff);
  out.S_plain = plain.value;
  out.S_plain_error = plain.error_estimate;
  out.jump_term = nernst_limit_dc(a, model_dc.eps0());

  const double h = base_step(T, diff);
  auto frozen = settings;
  frozen.matsubara_rel_tol = std::min(frozen.matsubara_rel_tol, kDerivativeMatsubaraTol);
  if (frozen.fixed_l_count == 0) {
    frozen.fixed_l_count =
        q_difference(model_dc, model_plain, make_state(model_plain, a, T - h), frozen).report.l_used;
  }
  const auto dq = central_richardson(
      [&](double t) { return q_difference(model_dc, model_plain, make_state(model_plain, a, t), frozen).value; },
      T, h, diff.richardson_levels);
  out.dQ_dT = dq.value;
  out.dQ_dT_error = dq.error;
  out.total = model_dc.conducting() ? out.S_plain + out.jump_term - out.dQ_dT : out.S_plain;
  return out;
}

}  // namespace casimir
