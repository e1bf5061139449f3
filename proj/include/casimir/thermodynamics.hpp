#pragma once

#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"
#include "casimir/richardson.hpp"

namespace casimir {

/// Finite-difference controls for temperature and separation derivatives.
struct DiffSettings {
  /// Base step as a fraction of the point (T or a).
  double rel_step = 1e-3;
  /// Richardson levels; the stencil uses steps h, h/2, ..., h/2^levels.
  int richardson_levels = 2;
  /// Smallest admissible step (kelvin for temperature derivatives).
  double min_abs_step = 1e-6;
};

struct EntropyResult {
  double value = 0.0;         // J/(K m^2)
  double error_estimate = 0.0;
  ConvergenceReport report;   // of the free energy at the lowest stencil temperature
};

/// Tolerance applied to Matsubara truncation inside derivatives; the stencil
/// differences are ~1e-10 of the free energy at tau ~ 1e-2.
inline constexpr double kDerivativeMatsubaraTol = 1e-16;

/// S = -dF/dT of the full Matsubara free energy at fixed separation.
/// The number of Matsubara terms is frozen across the stencil. Throws
/// StepUnderflow when the stencil does not fit above T = 0.
[[nodiscard]] EntropyResult entropy(const MaterialModel& model, double a, double T,
                                    const EngineSettings& settings = {}, const DiffSettings& diff = {});

/// dF/da at fixed temperature.
[[nodiscard]] DerivativeEstimate free_energy_separation_derivative(const MaterialModel& model, double a,
                                                                   double T, const EngineSettings& settings = {},
                                                                   const DiffSettings& diff = {});

/// |P + dF/da| / |P|; 0 when both vanish.
[[nodiscard]] double pressure_consistency(const MaterialModel& model, double a, double T,
                                          const EngineSettings& settings = {},
                                          const DiffSettings& diff = {});

/// Zero-temperature entropy of a dc-conducting model:
/// k_B/(16 pi a^2) [zeta(3) - Li3(r01^2)], r01 = (eps0 - 1)/(eps0 + 1).
[[nodiscard]] double nernst_limit_dc(double a, double eps0);

struct DcEntropyDecomposition {
  double S_plain = 0.0;
  double jump_term = 0.0;
  double dQ_dT = 0.0;
  /// S_plain + jump_term - dQ_dT for a conducting model, S_plain otherwise.
  double total = 0.0;
  double S_plain_error = 0.0;
  double dQ_dT_error = 0.0;
};

/// Splits the entropy of a dc model into the dc-free entropy, the
/// zero-frequency jump and -dQ/dT.
[[nodiscard]] DcEntropyDecomposition entropy_dc_decomposition(const MaterialModel& model_dc,
                                                              const MaterialModel& model_plain, double a,
                                                              double T, const EngineSettings& settings = {},
                                                              const DiffSettings& diff = {});

}  // namespace casimir
