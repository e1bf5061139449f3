#pragma once

#include <optional>

namespace casimir {

/// Physical constants, SI-exact values (2019 redefinition) where available.
namespace constants {
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double planck_h = 6.62607015e-34;       // J s, exact
inline constexpr double hbar = planck_h / (2.0 * pi);    // J s
inline constexpr double c = 299792458.0;                 // m/s, exact
inline constexpr double k_B = 1.380649e-23;              // J/K, exact
/// Vacuum permittivity (CODATA 2018); not exact after the redefinition.
inline constexpr double epsilon_vac = 8.8541878128e-12;  // F/m
}  // namespace constants

/// Dimensionless description of a (separation, temperature) point.
///
/// `tau` is the dimensionless temperature 4 pi k_B a T / (hbar c); the
/// l-th Matsubara frequency in units of c/(2a) is `zeta(l) = l * tau`.
/// `kappa_m` is c / (2 a omega_m) for a Debye permeability, 0 otherwise.
struct DimensionlessState {
  double a = 0.0;
  double T = 0.0;
  double tau = 0.0;
  double kappa_m = 0.0;

  [[nodiscard]] double zeta(long l) const { return static_cast<double>(l) * tau; }
};

struct DimensionlessConversion {
  DimensionlessState state;
  /// 2 hbar sigma / (k_B T) when a conductivity was given.
  std::optional<double> beta;
};

/// tau = 4 pi k_B a T / (hbar c).
[[nodiscard]] double tau_of(double a, double T);
/// Inverse of tau_of at fixed separation.
[[nodiscard]] double temperature_of(double a, double tau);
/// kappa_m = c / (2 a omega_m).
[[nodiscard]] double kappa_of(double a, double omega_m);

/// Maps SI inputs onto the dimensionless variables.
///
/// `omega_m` is the Debye characteristic frequency (rad/s); `sigma_gaussian`
/// the dc conductivity at this temperature in Gaussian units (1/s).
/// Throws DomainError on non-positive separation, negative temperature or
/// frequency, or a conductivity supplied at T = 0.
[[nodiscard]] DimensionlessConversion to_dimensionless(
    double a, double T, std::optional<double> omega_m = std::nullopt,
    std::optional<double> sigma_gaussian = std::nullopt);

/// S/m -> 1/s: sigma_G = sigma_SI / (4 pi epsilon_vac).
[[nodiscard]] double si_conductivity_to_gaussian(double sigma_si);
[[nodiscard]] double gaussian_conductivity_to_si(double sigma_gaussian);

}  // namespace casimir
