// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ...]   (no arguments runs all ten)

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "casimir/asymptotics.hpp"
#include "casimir/fit.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/special_functions.hpp"
#include "casimir/thermodynamics.hpp"
#include "support/oracles.hpp"

using namespace casimir;
namespace as = casimir::asymptotics;

namespace {

constexpr double kA = 1e-6;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<double> temperatures(const std::vector<double>& taus) {
  std::vector<double> T;
  for (double t : taus) T.push_back(temperature_of(kA, t));
  return T;
}

as::AsymptoticInput input(double eps0, double mu0, double tau, double kappa = 0.0) {
  return {eps0, mu0, tau, kA, kappa, as::UnitMode::SI};
}

// Entropy of the eps0 = 2, mu0 = 4 sweep, shared by criteria 1 and 3.
struct Sweep {
  std::vector<double> tau, T, S;
};
const Sweep& magnetodielectric_sweep() {
  static const Sweep sweep = [] {
    Sweep s;
    s.tau = geometric_grid(0.05, 0.005, 7);
    s.T = temperatures(s.tau);
    const auto m = MaterialModel::constant(2.0, 4.0);
    for (double T : s.T) s.S.push_back(entropy(m, kA, T).value);
    return s;
  }();
  return sweep;
}

Outcome leading_entropy() {
  const auto& s = magnetodielectric_sweep();
  const double fitted = fit_leading_coefficient(s.T, s.S, 2, 1).coefficient;
  const double target = as::entropy_leading_coefficient(2.0, 4.0);
  const double err = oracle::rel(fitted, target);
  return {err < 0.02, fmt("S/T^2 fit %.6e vs %.6e, rel err %.3e (tol 2e-2)", fitted, target, err)};
}

Outcome pressure_correction() {
  const auto m = MaterialModel::constant(2.0, 4.0);
  bool ok = true;
  std::string detail;
  for (auto [tau, tol] : {std::pair{0.05, 0.05}, std::pair{0.02, 0.01}}) {
    const double dP = thermal_pressure(m, make_state(m, kA, temperature_of(kA, tau))).value;
    const double ref = as::delta_p_leading(input(2.0, 4.0, tau));
    const double err = oracle::rel(dP, ref);
    ok = ok && err < tol;
    detail += fmt("tau=%.3g: dP/lead=%.6f err %.3e (tol %.0e); ", tau, dP / ref, err, tol);
  }
  return {ok, detail};
}

Outcome next_order() {
  const auto& s = magnetodielectric_sweep();
  std::vector<double> residual;
  for (std::size_t i = 0; i < s.T.size(); ++i) {
    residual.push_back(s.S[i] - as::entropy_leading(input(2.0, 4.0, s.tau[i])));
  }
  const double slope = log_log_slope(s.T, residual);
  const double fitted = fit_leading_coefficient(s.T, residual, 3, 1).coefficient;
  const double target = as::entropy_nlo_coefficient(2.0, 4.0, kA);
  const double err = oracle::rel(fitted, target);
  return {std::abs(slope - 3.0) <= 0.1 && err < 0.1,
          fmt("slope %.4f (3 +- 0.1), T^3 coefficient %.6e vs %.6e, rel err %.3e (tol 0.1)", slope, fitted, target,
              err)};
}

Outcome debye_entropy() {
  const double kappa = 5.0;
  const double omega = constants::c / (2.0 * kA * kappa);
  const auto m = MaterialModel::debye(2.0, 3.0, omega);
  const auto T = temperatures(geometric_grid(0.05, 0.005, 7));
  std::vector<double> S;
  for (double t : T) S.push_back(entropy(m, kA, t).value);
  const double fitted = fit_leading_coefficient(T, S, 1, 1).coefficient;
  const double target = as::entropy_debye_coefficient(3.0, omega, kA);
  const double err = oracle::rel(fitted, target);
  return {err < 0.03, fmt("eps0=2, mu0=3, kappa_m=5: S/T fit %.6e vs %.6e, rel err %.3e (tol 3e-2)", fitted, target,
                          err)};
}

MaterialModel dc_material(double mu0) {
  const double b = 500.0;
  return MaterialModel::constant(4.0, mu0).with_dc({sigma_ref_for_beta(1e-12, 300.0, b), b});
}

Outcome nernst_violation() {
  const double limit = nernst_limit_dc(kA, 4.0);
  const auto taus = geometric_grid(0.02, 0.0025, 5);
  const auto T = temperatures(taus);
  const double activation = std::exp(-500.0 / T.front());
  bool ok = activation < 1e-20;
  std::string detail = fmt("exp(-b/T_max)=%.2e; ", activation);
  std::vector<double> converged;
  for (double mu0 : {1.0, 5.0}) {
    const auto m = dc_material(mu0);
    const double at = entropy(m, kA, temperature_of(kA, 0.01)).value;
    const double err = oracle::rel(at, limit);
    ok = ok && err < 0.01;
    std::vector<double> S;
    for (double t : T) S.push_back(entropy(m, kA, t).value);
    const int powers[] = {2, 3, 4};
    converged.push_back(extrapolate_to_zero(T, S, powers).limit);
    detail += fmt("mu0=%g: S(tau=0.01)/limit-1=%.3e, S(T->0)/limit-1=%.3e; ", mu0, at / limit - 1.0,
                  converged.back() / limit - 1.0);
  }
  const double agree = oracle::rel(converged[0], converged[1]);
  ok = ok && agree < 1e-6;
  detail += fmt("mu0 1 vs 5 converged rel diff %.3e (tol 1e-6)", agree);
  return {ok, detail};
}

Outcome nernst_satisfied() {
  const double limit = nernst_limit_dc(kA, 4.0);
  bool ok = true;
  std::string detail;
  for (double mu0 : {1.0, 5.0}) {
    const double S = entropy(dc_material(mu0).without_dc(), kA, temperature_of(kA, 0.005)).value;
    ok = ok && std::abs(S) < 1e-3 * limit;
    detail += fmt("mu0=%g: |S|/limit=%.3e (tol 1e-3); ", mu0, std::abs(S) / limit);
  }
  return {ok, detail};
}

Outcome consistency() {
  const auto m = MaterialModel::constant(2.0, 4.0);
  bool ok = true;
  std::string detail;
  for (double tau : {0.1, 0.5, 1.0}) {
    const double r = pressure_consistency(m, kA, temperature_of(kA, tau));
    ok = ok && r < 1e-6;
    detail += fmt("tau=%g: %.3e; ", tau, r);
  }
  return {ok, detail + "(tol 1e-6)"};
}

Outcome zero_frequency() {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto plain = MaterialModel::constant(oracle::uniform(1.0, 30.0), oracle::uniform(1.0, 30.0));
    const double T = temperature_of(kA, oracle::uniform(0.01, 2.0));
    for (const auto& m : {plain, plain.with_dc({sigma_ref_for_beta(1e-3, T, 50.0), 50.0})}) {
      const auto s = make_state(m, kA, T);
      const double engine = 0.5 * s.tau * energy_prefactor(kA) * matsubara_energy_term(m, s, 0);
      worst = std::max(worst, oracle::rel(engine, free_energy_l0(m, s)));
    }
  }
  return {worst < 1e-10, fmt("40 cases, worst rel diff %.3e (tol 1e-10)", worst)};
}

Outcome symmetry() {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto m = MaterialModel::constant(oracle::uniform(1.0, 20.0), oracle::uniform(1.0, 20.0));
    const auto w = m.swapped();
    const double a = kA * oracle::uniform(0.2, 5.0);
    const auto s = make_state(m, a, temperature_of(a, oracle::uniform(0.05, 2.0)));
    worst = std::max(worst, oracle::rel(free_energy(w, s).value, free_energy(m, s).value));
    worst = std::max(worst, oracle::rel(pressure(w, s).value, pressure(m, s).value));
    worst = std::max(worst, oracle::rel(zero_point_energy(w, a), zero_point_energy(m, a)));
  }
  return {worst < 1e-12, fmt("50 configurations, worst rel diff %.3e (tol 1e-12)", worst)};
}

Outcome special_functions() {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double z = oracle::uniform(0.0, 0.999);
    for (int n : {2, 3}) {
      const double ref = static_cast<double>(oracle::polylog_series(n, z));
      const double got = polylog(static_cast<PolyOrder>(n), z);
      worst = std::max(worst, std::abs(got - ref) / std::max(std::abs(ref), 1e-300));
    }
  }
  const double e2 = oracle::rel(li2(1.0), static_cast<double>(std::acos(-1.0L) * std::acos(-1.0L) / 6.0L));
  const double e3 = oracle::rel(li3(1.0), static_cast<double>(oracle::zeta3_euler_maclaurin()));
  return {worst < 1e-12 && e2 < 1e-13 && e3 < 1e-13,
          fmt("series worst %.3e (tol 1e-12); Li2(1) %.3e, Li3(1) %.3e (tol 1e-13)", worst, e2, e3)};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"leading entropy coefficient (eps0=2, mu0=4)", leading_entropy},
      {"leading pressure correction", pressure_correction},
      {"next-order entropy term", next_order},
      {"Debye permeability entropy", debye_entropy},
      {"Nernst violation with dc conductivity", nernst_violation},
      {"Nernst theorem without dc conductivity", nernst_satisfied},
      {"pressure = -dF/da", consistency},
      {"zero-frequency closed form", zero_frequency},
      {"eps0 <-> mu0 symmetry", symmetry},
      {"polylogarithm oracle", special_functions},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);
  }
  int failures = 0;
  for (int n : selected) {
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "unknown criterion %d\n", n);
      return 2;
    }
    const auto& c = criteria[static_cast<std::size_t>(n - 1)];
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d: %s | %s\n", o.pass ? "PASS" : "FAIL", n, c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
