#include "casimir/asymptotics.hpp"

#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/special_functions.hpp"
#include "casimir/units.hpp"

namespace casimir::asymptotics {
namespace {

using constants::c;
using constants::hbar;
using constants::k_B;
using constants::pi;

double energy_scale(const AsymptoticInput& in) {
  return in.unit_mode == UnitMode::SI ? -hbar * c / (32.0 * pi * pi * std::pow(in.a, 3)) : 1.0;
}

double pressure_scale(const AsymptoticInput& in) {
  return in.unit_mode == UnitMode::SI ? -hbar * c / (32.0 * pi * pi * std::pow(in.a, 4)) : 1.0;
}

double entropy_scale(const AsymptoticInput& in) {
  return in.unit_mode == UnitMode::SI ? k_B / (8.0 * pi * in.a * in.a) : 1.0;
}

double cubic_coefficient(const AsymptoticInput& in) {
  return zeta3() * magnetodielectric_factor(in.eps0, in.mu0) / (4.0 * pi * pi);
}

double quartic_coefficient(const AsymptoticInput& in) { return pressure_factor(in.eps0, in.mu0) / 720.0; }

double r02_squared(double mu0) {
  const double r = (mu0 - 1.0) / (mu0 + 1.0);
  return r * r;
}

double r01_squared(double eps0) { return r02_squared(eps0); }

void require_debye(const AsymptoticInput& in) {
  if (!(in.kappa_m > 0.0)) throw DomainError("Debye formulas need kappa_m > 0");
}

double debye_coefficient(const AsymptoticInput& in) {
  return in.kappa_m * li2(r02_squared(in.mu0)) / (3.0 * (in.mu0 + 1.0));
}

double zero_frequency_jump(const AsymptoticInput& in) {
  return k_B / (16.0 * pi * in.a * in.a) * (zeta3() - li3(r01_squared(in.eps0)));
}

}  // namespace

std::optional<std::string> regime_warning(const AsymptoticInput& in) {
  if (in.tau <= 0.3) return std::nullopt;
  std::ostringstream os;
  os << "tau = " << in.tau << " is outside the low-temperature regime (tau <= 0.3)";
  return os.str();
}

double magnetodielectric_factor(double eps0, double mu0) {
  const double beta = eps0 * mu0 - 1.0;
  return beta * beta / ((eps0 + 1.0) * (mu0 + 1.0));
}

double pressure_factor(double eps0, double mu0) {
  const double product = eps0 * mu0;
  return (eps0 + mu0) * (product - 2.0) * std::sqrt(product) + 2.0;
}

double delta_f_leading(const AsymptoticInput& in) {
  return energy_scale(in) * cubic_coefficient(in) * std::pow(in.tau, 3);
}

double entropy_leading(const AsymptoticInput& in) {
  return entropy_scale(in) * 3.0 * cubic_coefficient(in) * in.tau * in.tau;
}

double delta_p_leading(const AsymptoticInput& in) {
  return pressure_scale(in) * quartic_coefficient(in) * std::pow(in.tau, 4);
}

double delta_f_nlo(const AsymptoticInput& in) {
  const double bracket = cubic_coefficient(in) * std::pow(in.tau, 3) - quartic_coefficient(in) * std::pow(in.tau, 4);
  return energy_scale(in) * bracket;
}

double entropy_nlo(const AsymptoticInput& in) {
  const double derivative = 3.0 * cubic_coefficient(in) * in.tau * in.tau - 4.0 * quartic_coefficient(in) * std::pow(in.tau, 3);
  return entropy_scale(in) * derivative;
}

double delta_f_debye(const AsymptoticInput& in) {
  require_debye(in);
  return energy_scale(in) * debye_coefficient(in) * in.tau * in.tau;
}

double delta_p_debye(const AsymptoticInput& in) {
  require_debye(in);
  // -d/da of the tau^2 kappa_m / a^3 form: kappa_m ~ 1/a, tau ~ a.
  return pressure_scale(in) * 2.0 * debye_coefficient(in) * in.tau * in.tau;
}

double entropy_debye(const AsymptoticInput& in) {
  require_debye(in);
  return entropy_scale(in) * 2.0 * debye_coefficient(in) * in.tau;
}

double free_energy_dc(const AsymptoticInput& in, double F_plain, double Q) {
  const double T = temperature_of(in.a, in.tau);
  return F_plain - T * zero_frequency_jump(in) + Q;
}

double entropy_dc_asymptotic(const AsymptoticInput& in, double S_plain, double dQdT) {
  return S_plain + zero_frequency_jump(in) - dQdT;
}

double entropy_leading_coefficient(double eps0, double mu0) {
  return 3.0 * zeta3() * std::pow(k_B, 3) / (2.0 * pi * std::pow(hbar * c, 2)) * magnetodielectric_factor(eps0, mu0);
}

double entropy_nlo_coefficient(double eps0, double mu0, double a) {
  return -std::pow(k_B, 3) / std::pow(hbar * c, 2) * 2.0 * pi * pi * k_B * a / (45.0 * hbar * c) *
         pressure_factor(eps0, mu0);
}

double entropy_debye_coefficient(double mu0, double omega_m, double a) {
  return k_B * k_B * li2(r02_squared(mu0)) / (6.0 * hbar * omega_m * (mu0 + 1.0) * a * a);
}

}  // namespace casimir::asymptotics
