#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "casimir/asymptotics.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/special_functions.hpp"
#include "support/oracles.hpp"

using namespace casimir;

namespace {
constexpr double kA = 1e-6;

DimensionlessState at_tau(const MaterialModel& m, double tau, double a = kA) {
  return make_state(m, a, temperature_of(a, tau));
}

MaterialModel random_constant() {
  return MaterialModel::constant(oracle::uniform(1.0, 12.0), oracle::uniform(1.0, 12.0));
}
}  // namespace

TEST_CASE("reflection coefficients") {
  CHECK(reflection_tm(4.0, 1.0, 1.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(reflection_te(1.0, 4.0, 1.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  for (double y : {0.0, 1e-9, 0.5, 3.0, 70.0}) {
    CHECK(reflection_tm(3.0, 7.0, 0.0, y) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(reflection_te(3.0, 7.0, 0.0, y) == doctest::Approx(0.75).epsilon(1e-15));
  }
  for (double z : {0.0, 0.3, 4.0}) {
    CHECK(reflection_tm(1.0, 1.0, z, z + 1.0) == 0.0);
    CHECK(reflection_te(1.0, 1.0, z, z + 1.0) == 0.0);
  }
}

TEST_CASE("reflection bounds and swap symmetry") {
  for (int i = 0; i < 2000; ++i) {
    const double eps = oracle::uniform(1.0, 1e3);
    const double mu = oracle::uniform(1.0, 50.0);
    const double zeta = oracle::uniform(0.0, 20.0);
    const double y = zeta + oracle::uniform(0.0, 80.0);
    const double tm = reflection_tm(eps, mu, zeta, y);
    const double te = reflection_te(eps, mu, zeta, y);
    CHECK(std::abs(tm) < 1.0);
    CHECK(std::abs(te) < 1.0);
    // r_TM is negative only when mu exceeds eps at large zeta / y.
    if (mu <= eps) CHECK(tm >= 0.0);
    if (eps <= mu) CHECK(te >= 0.0);
    CHECK(tm == doctest::Approx(reflection_te(mu, eps, zeta, y)).epsilon(1e-14));
    CHECK(te == doctest::Approx(reflection_tm(mu, eps, zeta, y)).epsilon(1e-14));
    if (eps == mu) CHECK(tm == te);
  }
  for (int i = 0; i < 200; ++i) {
    const double v = oracle::uniform(1.0, 30.0);
    const double zeta = oracle::uniform(0.0, 5.0);
    const double y = zeta + oracle::uniform(0.0, 10.0);
    CHECK(reflection_tm(v, v, zeta, y) == doctest::Approx(reflection_te(v, v, zeta, y)).epsilon(1e-15));
  }
}

TEST_CASE("vacuum gives exact zeros") {
  const auto vac = MaterialModel::constant(1.0, 1.0);
  const auto s = at_tau(vac, 0.3);
  CHECK(free_energy(vac, s).value == 0.0);
  CHECK(pressure(vac, s).value == 0.0);
  CHECK(zero_point_energy(vac, kA) == 0.0);
  CHECK(zero_T_pressure(vac, kA) == 0.0);
  CHECK(free_energy_l0(vac, s) == 0.0);
  CHECK(thermal_correction(vac, s).value == 0.0);
}

TEST_CASE("signs and swap invariance") {
  for (int i = 0; i < 6; ++i) {
    const auto m = random_constant();
    const double tau = oracle::uniform(0.1, 2.0);
    const auto s = at_tau(m, tau);
    const double F = free_energy(m, s).value;
    const double P = pressure(m, s).value;
    const double E = zero_point_energy(m, kA);
    CHECK(F < 0.0);
    CHECK(P < 0.0);
    CHECK(E < 0.0);
    const auto w = m.swapped();
    CHECK(oracle::rel(free_energy(w, s).value, F) < 1e-13);
    CHECK(oracle::rel(pressure(w, s).value, P) < 1e-13);
    CHECK(oracle::rel(zero_point_energy(w, kA), E) < 1e-13);
  }
  const auto p = MaterialModel::constant(2.0, 4.0);
  const auto q = MaterialModel::constant(4.0, 2.0);
  const auto s = at_tau(p, 0.5);
  CHECK(oracle::rel(free_energy(p, s).value, free_energy(q, s).value) < 1e-13);
}

TEST_CASE("zero-frequency term against its closed form") {
  for (int i = 0; i < 10; ++i) {
    const auto plain = random_constant();
    const auto dc = plain.with_dc({1e10, 5.0});
    for (const auto& m : {plain, dc}) {
      const auto s = at_tau(m, oracle::uniform(0.01, 3.0));
      const double l0 = 0.5 * s.tau * energy_prefactor(kA) * matsubara_energy_term(m, s, 0);
      CHECK(oracle::rel(l0, free_energy_l0(m, s)) < 1e-10);
    }
  }
  // At tau = 30 the l >= 1 terms are below e^-30 of the total.
  const auto m = MaterialModel::constant(3.0, 2.0);
  const auto s = at_tau(m, 30.0);
  CHECK(oracle::rel(free_energy(m, s).value, free_energy_l0(m, s)) < 1e-10);
}

TEST_CASE("closed form of the zero-frequency term") {
  const auto vac_dc = MaterialModel::constant(1.0, 1.0).with_dc({1e12, 10.0});
  const auto s = at_tau(vac_dc, 0.2);
  const double unit = constants::k_B * s.T / (16.0 * constants::pi * kA * kA);
  CHECK(oracle::rel(free_energy_l0(vac_dc, s), -unit * kZeta3) < 1e-15);
  for (double mu0 : {1.0, 2.0, 7.0}) {
    const auto plain = MaterialModel::constant(4.0, mu0);
    const double jump = free_energy_l0(plain.with_dc({1e12, 10.0}), s) - free_energy_l0(plain, s);
    CHECK(oracle::rel(jump, -unit * (kZeta3 - static_cast<double>(oracle::polylog_series(3, 0.36L)))) < 1e-13);
  }
}

TEST_CASE("zero-temperature energy scales as a^-3 and approaches the ideal-metal limit") {
  const auto m = MaterialModel::constant(2.0, 4.0);
  CHECK(oracle::rel(zero_point_energy(m, kA) / zero_point_energy(m, 2.0 * kA), 8.0) < 1e-12);
  CHECK(oracle::rel(zero_T_pressure(m, kA) / zero_T_pressure(m, 2.0 * kA), 16.0) < 1e-12);
  const double ideal = -constants::pi * constants::pi * constants::hbar * constants::c / (720.0 * std::pow(kA, 3));
  double prev = 1.0;
  for (double eps : {1e2, 1e4, 1e6, 1e8, 1e10}) {
    const double ratio = zero_point_energy(MaterialModel::constant(eps, 1.0), kA) / ideal;
    CHECK(ratio < 1.0);
    CHECK(ratio > 1.0 - prev);
    CHECK(1.0 - ratio < prev);
    prev = 1.0 - ratio;
  }
  // The dielectric limit is slow, roughly ln(eps) / sqrt(eps).
  CHECK(prev < 1e-3);
}

TEST_CASE("pressure is minus the separation derivative of the energy") {
  const auto m = MaterialModel::constant(2.0, 4.0);
  const double dE = oracle::derivative5([&](double a) { return zero_point_energy(m, a); }, kA, 1e-3 * kA);
  CHECK(oracle::rel(zero_T_pressure(m, kA), -dE) < 1e-8);

  const double T = temperature_of(kA, 0.3);
  EngineSettings fixed;
  fixed.fixed_l_count = free_energy(m, make_state(m, kA, T)).report.l_used + 5;
  const double dF = oracle::derivative5(
      [&](double a) { return free_energy(m, make_state(m, a, T), fixed).value; }, kA, 1e-3 * kA);
  CHECK(oracle::rel(pressure(m, make_state(m, kA, T)).value, -dF) < 1e-8);
}

TEST_CASE("thermal correction") {
  const auto m = MaterialModel::constant(2.0, 4.0);
  double prev = INFINITY;
  for (double tau : {0.04, 0.02, 0.01}) {
    const auto s = at_tau(m, tau);
    const double dF = thermal_correction(m, s).value;
    CHECK(dF < 0.0);
    CHECK(std::abs(dF) < prev);
    prev = std::abs(dF);
  }
  asymptotics::AsymptoticInput in{2.0, 4.0, 0.01, kA, 0.0, asymptotics::UnitMode::SI};
  CHECK(oracle::rel(prev, std::abs(asymptotics::delta_f_leading(in))) < 0.05);

  const auto dc = m.with_dc({1.0, 10.0});
  CHECK_THROWS_AS((void)thermal_correction(dc, at_tau(dc, 0.1)), ModelError);
  CHECK_THROWS_AS((void)zero_point_energy(dc, kA), ModelError);
  CHECK_THROWS_AS((void)zero_T_pressure(dc, kA), ModelError);
}

TEST_CASE("convergence report") {
  const auto m = MaterialModel::constant(3.0, 2.0);
  const auto r = free_energy(m, at_tau(m, 0.2));
  CHECK(r.report.truncation_estimate >= 0.0);
  CHECK(r.report.truncation_estimate < 1e-10 * std::abs(r.value));
  CHECK(r.report.quad_error_estimate >= 0.0);
  CHECK_FALSE(r.report.hit_cap);

  EngineSettings capped;
  capped.l_max_cap = 5;
  const auto c = free_energy(m, at_tau(m, 0.2), capped);
  CHECK(c.report.hit_cap);
  CHECK(c.report.l_used == 5);
  CHECK_FALSE(c.report.diagnostics.empty());

  EngineSettings fixed;
  fixed.fixed_l_count = 3;
  const auto s = at_tau(m, 0.2);
  const double expect = energy_prefactor(kA) * s.tau *
                        (0.5 * matsubara_energy_term(m, s, 0) + matsubara_energy_term(m, s, 1) +
                         matsubara_energy_term(m, s, 2));
  CHECK(oracle::rel(free_energy(m, s, fixed).value, expect) < 1e-14);

  const auto tiny = free_energy(m, at_tau(m, 5e-4));
  CHECK_FALSE(tiny.report.diagnostics.empty());

  CHECK_THROWS_AS((void)free_energy(m, make_state(m, kA, 0.0)), DomainError);
}

TEST_CASE("the truncation estimate bounds the discarded tail") {
  const auto m = MaterialModel::constant(5.0, 1.0);
  const auto s = at_tau(m, 0.1);
  EngineSettings loose;
  loose.matsubara_rel_tol = 1e-6;
  const auto coarse = free_energy(m, s, loose);
  EngineSettings tight;
  tight.matsubara_rel_tol = 1e-15;
  const auto fine = free_energy(m, s, tight);
  CHECK(std::abs(fine.value - coarse.value) <= coarse.report.truncation_estimate);
}

TEST_CASE("dc difference Q") {
  const auto plain = MaterialModel::constant(4.0, 1.0);
  const auto zero_dc = plain.with_dc({0.0, 10.0});
  CHECK(q_difference(zero_dc, plain, at_tau(plain, 0.1)).value == 0.0);

  // Q ~ exp(-b/T) whatever the permeability: fit ln|Q| = c - b'/T + p ln T.
  const double b = 400.0;
  for (double mu0 : {1.0, 5.0}) {
    const auto base = MaterialModel::constant(4.0, mu0);
    const auto dc = base.with_dc({sigma_ref_for_beta(1e-2, 20.0, b), b});
    const std::vector<double> Ts{20.0, 17.0, 14.5, 12.5, 11.0};
    Eigen::MatrixXd A(Ts.size(), 3);
    Eigen::VectorXd rhs(Ts.size());
    double prev = INFINITY;
    for (std::size_t i = 0; i < Ts.size(); ++i) {
      const double Q = q_difference(dc, base, make_state(base, kA, Ts[i])).value;
      CHECK(Q < 0.0);
      CHECK(std::abs(Q) < prev);
      prev = std::abs(Q);
      A(i, 0) = 1.0;
      A(i, 1) = -1.0 / Ts[i];
      A(i, 2) = std::log(Ts[i]);
      rhs(i) = std::log(std::abs(Q));
    }
    const Eigen::VectorXd coef = A.colPivHouseholderQr().solve(rhs);
    CHECK(oracle::rel(coef(1), b) < 0.03);
  }
  CHECK_THROWS_AS((void)q_difference(plain, plain.with_dc({1.0, 1.0}), at_tau(plain, 0.1)), ModelError);
  CHECK_THROWS_AS((void)q_difference(MaterialModel::constant(3.0, 1.0).with_dc({1.0, 1.0}), plain,
                                     at_tau(plain, 0.1)),
                  ModelError);
}

TEST_CASE("thermal pressure") {
  const auto vac = MaterialModel::constant(1.0, 1.0);
  CHECK(thermal_pressure(vac, at_tau(vac, 0.1)).value == 0.0);
  const auto m = MaterialModel::constant(2.0, 4.0);
  double prev_ratio = 0.0;
  for (double tau : {0.02, 0.01, 0.005}) {
    const double dP = thermal_pressure(m, at_tau(m, tau)).value;
    asymptotics::AsymptoticInput in{2.0, 4.0, tau, kA, 0.0, asymptotics::UnitMode::SI};
    const double ratio = dP / asymptotics::delta_p_leading(in);
    CHECK(dP < 0.0);
    CHECK(ratio > prev_ratio);
    CHECK(ratio < 1.0);
    prev_ratio = ratio;
  }
  CHECK(prev_ratio > 0.98);
  const auto dc = m.with_dc({1.0, 10.0});
  CHECK_THROWS_AS((void)thermal_pressure(dc, at_tau(dc, 0.1)), ModelError);
}
