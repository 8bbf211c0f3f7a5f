"""Conditional success probabilities for repeated binary quantum measurements.

Thin wrapper over the compiled core: exact evaluators for the classical,
flat, and Bures families, finite design certification, the seeded
acquisition-and-estimation pipeline, and two-qubit discord tools.
"""

from ._qlls import (
    bell_diagonal_discord_bits,
    design_order,
    design_size,
    discrete_weights,
    frame_potential,
    haar_frame_potential,
    loglog_slope,
    measurement_discord,
    normalization_integral,
    p_classical,
    p_classical_beta,
    p_design_exact,
    p_discretized,
    p_qlls,
    pauli_correlations,
    run_experiment,
    two_copy_average,
    verify_design,
)

__all__ = [
    "bell_diagonal_discord_bits",
    "design_order",
    "design_size",
    "discrete_weights",
    "frame_potential",
    "haar_frame_potential",
    "loglog_slope",
    "measurement_discord",
    "normalization_integral",
    "p_classical",
    "p_classical_beta",
    "p_design_exact",
    "p_discretized",
    "p_qlls",
    "pauli_correlations",
    "run_experiment",
    "two_copy_average",
    "verify_design",
]

__version__ = "0.1.0"
