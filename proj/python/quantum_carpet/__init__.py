"""Quantum carpets of a Gaussian packet in an infinite well and a tight-binding chain."""

from ._qcarpet import (
    DegenerateStateError,
    Error,
    Fraction,
    InternalConsistencyError,
    InvalidParameter,
    IoError,
    Modes,
    NonCoprimeError,
    NumericAccuracyError,
    Packet,
    TruncationError,
    Well,
    carpet,
    choose_nmax,
    coeffs_analytic,
    coeffs_quadrature,
    count_packets,
    discrete_carpet,
    fractional_reconstruction,
    gauss_phases,
    gauss_sum,
    map_time,
    reconstruct_density,
    reconstruction_error,
    revival_scan,
    term_field,
    wavefunction,
)

__all__ = [
    "DegenerateStateError",
    "Error",
    "Fraction",
    "InternalConsistencyError",
    "InvalidParameter",
    "IoError",
    "Modes",
    "NonCoprimeError",
    "NumericAccuracyError",
    "Packet",
    "TruncationError",
    "Well",
    "carpet",
    "choose_nmax",
    "coeffs_analytic",
    "coeffs_quadrature",
    "count_packets",
    "discrete_carpet",
    "fractional_reconstruction",
    "gauss_phases",
    "gauss_sum",
    "map_time",
    "reconstruct_density",
    "reconstruction_error",
    "revival_scan",
    "term_field",
    "wavefunction",
]
