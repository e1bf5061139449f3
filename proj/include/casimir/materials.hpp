#pragma once

#include <optional>
#include <string>

namespace casimir {

/// Activation-law dc conductivity sigma0(T) = sigma_ref * exp(-b / T),
/// Gaussian units (1/s).
struct DcConductivity {
  double sigma_ref = 0.0;
  double activation_temperature = 1.0;  // b, kelvin

  [[nodiscard]] double sigma(double T) const;
};

/// Debye relaxation of the permeability along the imaginary axis:
/// mu(i xi) = 1 + (mu0 - 1) / (1 + xi / omega_m).
struct DebyeMagnetic {
  double mu0 = 1.0;
  double omega_m = 1.0;  // rad/s
};

/// Permittivity at a Matsubara frequency. The zero frequency of a
/// conducting model is infinite and carried as a tag, never as an IEEE
/// infinity.
struct PermittivityValue {
  enum class Kind { finite, infinite };
  Kind kind = Kind::finite;
  double value = 1.0;

  [[nodiscard]] bool is_infinite() const { return kind == Kind::infinite; }
  static PermittivityValue finite(double v) { return {Kind::finite, v}; }
  static PermittivityValue infinite() { return {Kind::infinite, 0.0}; }
};

/// Immutable magnetodielectric response: constant eps0, optionally with a
/// dc-conductivity term, and either a constant or a Debye permeability.
class MaterialModel {
 public:
  /// Throws DomainError unless eps0 >= 1 and mu0 >= 1.
  static MaterialModel constant(double eps0, double mu0);
  static MaterialModel debye(double eps0, double mu0, double omega_m);

  [[nodiscard]] MaterialModel with_dc(DcConductivity dc) const;
  [[nodiscard]] MaterialModel without_dc() const;
  /// Same model with the roles of eps0 and mu0 exchanged (constant mu only).
  [[nodiscard]] MaterialModel swapped() const;

  [[nodiscard]] double eps0() const { return eps0_; }
  [[nodiscard]] double mu0() const { return mu0_; }
  [[nodiscard]] const std::optional<double>& omega_m() const { return omega_m_; }
  [[nodiscard]] const std::optional<DcConductivity>& dc() const { return dc_; }
  [[nodiscard]] bool has_dc() const { return dc_.has_value(); }
  /// A dc term with sigma_ref > 0: the zero-frequency permittivity diverges.
  [[nodiscard]] bool conducting() const { return dc_ && dc_->sigma_ref > 0.0; }
  [[nodiscard]] bool is_debye() const { return omega_m_.has_value(); }
  [[nodiscard]] bool is_vacuum() const { return eps0_ == 1.0 && mu0_ == 1.0 && !conducting(); }

  [[nodiscard]] std::string describe() const;

 private:
  MaterialModel(double eps0, double mu0) : eps0_(eps0), mu0_(mu0) {}

  double eps0_;
  double mu0_;
  std::optional<double> omega_m_;
  std::optional<DcConductivity> dc_;
};

/// beta(T) = 2 hbar sigma0(T) / (k_B T). Throws ModelError without a dc term.
[[nodiscard]] double beta_dc(const MaterialModel& model, double T);

/// eps(i xi_l): eps0 without dc; eps0 + beta(T)/l for l >= 1 and the
/// infinite tag at l = 0 for a conducting model.
[[nodiscard]] PermittivityValue eval_eps(const MaterialModel& model, long l, double T);

/// mu at dimensionless frequency zeta: mu0, or 1 + (mu0 - 1)/(1 + kappa_m zeta).
[[nodiscard]] double eval_mu(const MaterialModel& model, double zeta, double kappa_m);

/// (4 pi sigma0 / xi_l) / eps_l = beta(T) / (l eps0); 0 without dc.
[[nodiscard]] double validity_ratio(const MaterialModel& model, long l, double T);

/// sigma_ref such that beta(T_ref) equals `beta_target` under activation
/// temperature b.
[[nodiscard]] double sigma_ref_for_beta(double beta_target, double T_ref, double b);

}  // namespace casimir
