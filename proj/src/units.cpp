#include "casimir/units.hpp"

#include "casimir/errors.hpp"

namespace casimir {

using constants::c;
using constants::hbar;
using constants::k_B;
using constants::pi;

double tau_of(double a, double T) { return 4.0 * pi * k_B * a * T / (hbar * c); }

double temperature_of(double a, double tau) {
  return tau * hbar * c / (4.0 * pi * k_B * a);
}

double kappa_of(double a, double omega_m) { return c / (2.0 * a * omega_m); }

DimensionlessConversion to_dimensionless(double a, double T,
                                         std::optional<double> omega_m,
                                         std::optional<double> sigma_gaussian) {
  if (!(a > 0.0)) throw DomainError("separation must be positive");
  if (!(T >= 0.0)) throw DomainError("temperature must be non-negative");
  DimensionlessConversion out;
  out.state.a = a;
  out.state.T = T;
  out.state.tau = tau_of(a, T);
  if (omega_m) {
    if (!(*omega_m > 0.0)) throw DomainError("omega_m must be positive");
    out.state.kappa_m = kappa_of(a, *omega_m);
  }
  if (sigma_gaussian) {
    if (!(*sigma_gaussian >= 0.0)) throw DomainError("conductivity must be non-negative");
    if (*sigma_gaussian == 0.0) {
      out.beta = 0.0;
    } else {
      if (T == 0.0) throw DomainError("beta is undefined at T = 0 for nonzero conductivity");
      out.beta = 2.0 * hbar * *sigma_gaussian / (k_B * T);
    }
  }
  return out;
}

double si_conductivity_to_gaussian(double sigma_si) {
  return sigma_si / (4.0 * pi * constants::epsilon_vac);
}

double gaussian_conductivity_to_si(double sigma_gaussian) {
  return sigma_gaussian * (4.0 * pi * constants::epsilon_vac);
}

}  // namespace casimir
