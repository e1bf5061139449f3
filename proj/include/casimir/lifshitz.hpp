#pragma once

#include <string>
#include <vector>

#include "casimir/materials.hpp"
#include "casimir/units.hpp"

namespace casimir {

/// Numerical controls of the Matsubara/quadrature engine.
struct EngineSettings {
  /// Threshold on the reported quadrature error (relative); exceeding it
  /// adds a diagnostic.
  double quad_rel_tol = 1e-10;
  /// Maximum Gauss-Legendre panel width in y (or zeta).
  double panel_width = 8.0;
  /// Integration runs from the lower limit to lower + y_cutoff_offset.
  double y_cutoff_offset = 80.0;
  /// A Matsubara term is negligible below matsubara_rel_tol * |partial sum|.
  double matsubara_rel_tol = 1e-12;
  /// Number of successive negligible terms that ends the sum.
  int matsubara_consecutive = 3;
  /// Hard limit on the number of terms; 0 selects ceil(60 / tau), at most 1e7.
  long l_max_cap = 0;
  /// When positive, sum exactly l = 0 .. fixed_l_count - 1 (no adaptivity).
  long fixed_l_count = 0;
  /// Nodes per Gauss-Legendre panel.
  int gauss_points = 20;
};

struct ConvergenceReport {
  long l_used = 0;
  /// Bound on the discarded Matsubara tail, same units as the value.
  double truncation_estimate = 0.0;
  /// Quadrature error estimate (rule comparison plus cutoff tail), same units.
  double quad_error_estimate = 0.0;
  bool hit_cap = false;
  std::vector<std::string> diagnostics;
};

/// A value with the diagnostics of the sum that produced it.
struct EngineResult {
  double value = 0.0;
  ConvergenceReport report;
};

/// State for (a, T) with kappa_m taken from the model's Debye frequency.
[[nodiscard]] DimensionlessState make_state(const MaterialModel& model, double a, double T);

/// hbar c / (32 pi^2 a^3): free energy per area of a unit dimensionless integral.
[[nodiscard]] double energy_prefactor(double a);
/// hbar c / (32 pi^2 a^4).
[[nodiscard]] double pressure_prefactor(double a);

/// TM reflection coefficient at imaginary frequency, y >= zeta >= 0.
[[nodiscard]] double reflection_tm(double eps, double mu, double zeta, double y);
/// TE reflection coefficient at imaginary frequency, y >= zeta >= 0.
[[nodiscard]] double reflection_te(double eps, double mu, double zeta, double y);

/// Dimensionless integral int_{zeta_l}^inf y [ln(1 - r_TM^2 e^-y) + ln(1 - r_TE^2 e^-y)] dy
/// with the material evaluated at Matsubara index l (no l = 0 halving).
[[nodiscard]] double matsubara_energy_term(const MaterialModel& model, const DimensionlessState& state,
                                           long l, const EngineSettings& settings = {});
/// Dimensionless integral int_{zeta_l}^inf y^2 [r_TM^2/(e^y - r_TM^2) + r_TE^2/(e^y - r_TE^2)] dy.
[[nodiscard]] double matsubara_pressure_term(const MaterialModel& model, const DimensionlessState& state,
                                             long l, const EngineSettings& settings = {});

/// Casimir free energy per unit area (J/m^2) from the Matsubara sum.
[[nodiscard]] EngineResult free_energy(const MaterialModel& model, const DimensionlessState& state,
                                       const EngineSettings& settings = {});

/// Casimir pressure (Pa) from the Matsubara sum of the pressure kernel.
[[nodiscard]] EngineResult pressure(const MaterialModel& model, const DimensionlessState& state,
                                    const EngineSettings& settings = {});

/// Zero-temperature energy per unit area (J/m^2) by nested quadrature.
/// Throws ModelError for a conducting model.
[[nodiscard]] double zero_point_energy(const MaterialModel& model, double a,
                                       const EngineSettings& settings = {});

/// Zero-temperature pressure (Pa). Throws ModelError for a conducting model.
[[nodiscard]] double zero_T_pressure(const MaterialModel& model, double a,
                                     const EngineSettings& settings = {});

/// Closed form of the zero-frequency term: -(k_B T)/(16 pi a^2) [Li3(r01^2) + Li3(r02^2)],
/// with Li3(r01^2) replaced by zeta(3) for a conducting model.
[[nodiscard]] double free_energy_l0(const MaterialModel& model, const DimensionlessState& state);

/// Matsubara tolerance used for F - E and P - P0: at tau ~ 1e-2 the
/// thermal part is ~1e-10 of the total.
inline constexpr double kSubtractionMatsubaraTol = 1e-16;

/// Free energy minus zero-point energy. Throws ModelError for a conducting model.
[[nodiscard]] EngineResult thermal_correction(const MaterialModel& model, const DimensionlessState& state,
                                              const EngineSettings& settings = {});

/// Pressure minus zero-temperature pressure. Throws ModelError for a conducting model.
[[nodiscard]] EngineResult thermal_pressure(const MaterialModel& model, const DimensionlessState& state,
                                            const EngineSettings& settings = {});

/// Sum over l >= 1 of the change in the free-energy terms caused by the dc
/// term (J/m^2). The models must agree in everything except the dc term.
[[nodiscard]] EngineResult q_difference(const MaterialModel& model_dc, const MaterialModel& model_plain,
                                        const DimensionlessState& state,
                                        const EngineSettings& settings = {});

}  // namespace casimir
