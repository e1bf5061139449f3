"""Casimir free energy, pressure and entropy between magnetodielectric plates."""

from ._core import (
    C,
    HBAR,
    K_B,
    ConvergenceReport,
    DcEntropyDecomposition,
    DegenerateGrid,
    DiffSettings,
    DomainError,
    EngineResult,
    EngineSettings,
    EntropyResult,
    MaterialModel,
    ModelError,
    StepUnderflow,
    asymptotics,
    beta_dc,
    entropy,
    entropy_dc_decomposition,
    fit_leading_coefficient,
    free_energy,
    free_energy_l0,
    gaussian_conductivity_to_si,
    kappa_of,
    li2,
    li3,
    nernst_limit_dc,
    polylog,
    pressure,
    pressure_consistency,
    q_difference,
    reflection_te,
    reflection_tm,
    si_conductivity_to_gaussian,
    sigma_ref_for_beta,
    tau_of,
    temperature_of,
    thermal_correction,
    validity_ratio,
    zero_point_energy,
    zero_T_pressure,
    zeta3,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
