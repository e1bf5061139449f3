#pragma once

#include <optional>
#include <string>

namespace casimir::asymptotics {

enum class UnitMode { dimensionless, SI };

/// Inputs of the low-temperature closed forms.
///
/// In dimensionless mode the free-energy and pressure functions return the
/// bracket D(tau) of Delta F = -hbar c/(32 pi^2 a^3) D, Delta P =
/// -hbar c/(32 pi^2 a^4) D; entropies return dD/dtau, the entropy in units
/// of k_B/(8 pi a^2). kappa_m = 0 selects the constant-mu formulas.
struct AsymptoticInput {
  double eps0 = 1.0;
  double mu0 = 1.0;
  double tau = 0.0;
  double a = 1e-6;       // m
  double kappa_m = 0.0;  // c/(2 a omega_m)
  UnitMode unit_mode = UnitMode::SI;
};

/// Warning text when tau is outside the small-tau regime (> 0.3).
[[nodiscard]] std::optional<std::string> regime_warning(const AsymptoticInput& in);

/// (eps0 mu0 - 1)^2 / ((eps0 + 1)(mu0 + 1))
[[nodiscard]] double magnetodielectric_factor(double eps0, double mu0);
/// (eps0 + mu0)(eps0 mu0 - 2) sqrt(eps0 mu0) + 2
[[nodiscard]] double pressure_factor(double eps0, double mu0);

/// Lowest-order thermal correction to the energy, order tau^3.
[[nodiscard]] double delta_f_leading(const AsymptoticInput& in);
/// Leading entropy, order T^2.
[[nodiscard]] double entropy_leading(const AsymptoticInput& in);
/// Leading thermal correction to the pressure, order tau^4.
[[nodiscard]] double delta_p_leading(const AsymptoticInput& in);
/// Thermal correction to the energy through order tau^4.
[[nodiscard]] double delta_f_nlo(const AsymptoticInput& in);
/// Entropy through order T^3.
[[nodiscard]] double entropy_nlo(const AsymptoticInput& in);

/// Debye permeability: thermal correction to the energy, order tau^2.
[[nodiscard]] double delta_f_debye(const AsymptoticInput& in);
/// Debye permeability: thermal correction to the pressure, order tau^2.
[[nodiscard]] double delta_p_debye(const AsymptoticInput& in);
/// Debye permeability: entropy, linear in T.
[[nodiscard]] double entropy_debye(const AsymptoticInput& in);

/// Free energy with dc conductivity from the dc-free value and Q (SI).
[[nodiscard]] double free_energy_dc(const AsymptoticInput& in, double F_plain, double Q);
/// Entropy with dc conductivity from the dc-free entropy and dQ/dT (SI).
[[nodiscard]] double entropy_dc_asymptotic(const AsymptoticInput& in, double S_plain, double dQdT);

/// SI coefficient A of S = A T^2 (constant eps, mu).
[[nodiscard]] double entropy_leading_coefficient(double eps0, double mu0);
/// SI coefficient B of the T^3 term of the entropy (depends on a).
[[nodiscard]] double entropy_nlo_coefficient(double eps0, double mu0, double a);
/// SI coefficient A of S = A T (Debye permeability).
[[nodiscard]] double entropy_debye_coefficient(double mu0, double omega_m, double a);

}  // namespace casimir::asymptotics
