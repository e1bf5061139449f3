#include "casimir/materials.hpp"

#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/units.hpp"

namespace casimir {

double DcConductivity::sigma(double T) const {
  if (sigma_ref == 0.0) return 0.0;
  return sigma_ref * std::exp(-activation_temperature / T);
}

MaterialModel MaterialModel::constant(double eps0, double mu0) {
  if (!(eps0 >= 1.0)) throw DomainError("eps0 must be >= 1");
  if (!(mu0 >= 1.0)) throw DomainError("mu0 must be >= 1");
  return MaterialModel(eps0, mu0);
}

MaterialModel MaterialModel::debye(double eps0, double mu0, double omega_m) {
  auto model = constant(eps0, mu0);
  if (!(omega_m > 0.0)) throw DomainError("omega_m must be positive");
  model.omega_m_ = omega_m;
  return model;
}

MaterialModel MaterialModel::with_dc(DcConductivity dc) const {
  if (!(dc.sigma_ref >= 0.0)) throw DomainError("sigma_ref must be >= 0");
  if (!(dc.activation_temperature > 0.0)) throw DomainError("activation temperature must be > 0");
  auto copy = *this;
  copy.dc_ = dc;
  return copy;
}

MaterialModel MaterialModel::without_dc() const {
  auto copy = *this;
  copy.dc_.reset();
  return copy;
}

MaterialModel MaterialModel::swapped() const {
  if (is_debye()) throw ModelError("eps/mu exchange is defined for constant permeability only");
  auto copy = *this;
  copy.eps0_ = mu0_;
  copy.mu0_ = eps0_;
  return copy;
}

std::string MaterialModel::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "eps0=" << eps0_ << " mu0=" << mu0_;
  if (omega_m_) os << " debye(omega_m=" << *omega_m_ << ")";
  if (dc_) os << " dc(sigma_ref=" << dc_->sigma_ref << ", b=" << dc_->activation_temperature << ")";
  return os.str();
}

double beta_dc(const MaterialModel& model, double T) {
  if (!model.has_dc()) throw ModelError("beta_dc requires a dc-conductivity term");
  if (!(T > 0.0)) throw DomainError("temperature must be positive");
  return 2.0 * constants::hbar * model.dc()->sigma(T) / (constants::k_B * T);
}

PermittivityValue eval_eps(const MaterialModel& model, long l, double T) {
  if (!model.conducting()) return PermittivityValue::finite(model.eps0());
  if (l == 0) return PermittivityValue::infinite();
  return PermittivityValue::finite(model.eps0() + beta_dc(model, T) / static_cast<double>(l));
}

double eval_mu(const MaterialModel& model, double zeta, double kappa_m) {
  if (!model.is_debye()) return model.mu0();
  return 1.0 + (model.mu0() - 1.0) / (1.0 + kappa_m * zeta);
}

double validity_ratio(const MaterialModel& model, long l, double T) {
  if (!model.has_dc()) return 0.0;
  return beta_dc(model, T) / (static_cast<double>(l) * model.eps0());
}

double sigma_ref_for_beta(double beta_target, double T_ref, double b) {
  const double sigma_at_ref = beta_target * constants::k_B * T_ref / (2.0 * constants::hbar);
  return sigma_at_ref * std::exp(b / T_ref);
}

}  // namespace casimir
