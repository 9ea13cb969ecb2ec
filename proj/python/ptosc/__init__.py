"""Poschl-Teller oscillator spectra, pressures and checks, backed by the C++ core."""

from ._core import (
    ConvergenceError,
    DerivedScales,
    DomainError,
    EnergyLevel,
    Error,
    GridSpec,
    InvalidParameter,
    LimitExpansion,
    PerturbedEnergy,
    PressureLevel,
    PTParameters,
    ResourceError,
    action,
    action_closed,
    classical_momentum,
    derive_scales,
    effective_exponent,
    energy_level,
    fp_limit_expansion,
    ho_limit_expansion,
    numerical_pressure,
    perturbed_energy,
    pressure_level,
    qc_energy_closed,
    qc_energy_numeric,
    regime_ratio,
    solve_eigenvalues,
    spectrum_table,
    turning_point,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
