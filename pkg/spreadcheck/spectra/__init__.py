"""
Eigensolvers, Laplacian spectra, Fiedler data and effective resistance.
"""

from .eigen import Spectrum, SymMatrix, eigen_symmetric
from .laplacian import (
    FiedlerData,
    algebraic_connectivity,
    check_complement_duality,
    edge_energy,
    fiedler_quotient_check,
    laplacian,
    laplacian_spectrum,
    laplacian_spread,
    pair_energy,
)
from .resistance import (
    ResistanceMatrix,
    check_rayleigh_monotonicity,
    conductance_lower_bound,
    resistance_from_spectrum,
    resistance_matrix,
    resistance_variational_oracle,
)

__all__ = [
    "FiedlerData",
    "ResistanceMatrix",
    "Spectrum",
    "SymMatrix",
    "algebraic_connectivity",
    "check_complement_duality",
    "check_rayleigh_monotonicity",
    "conductance_lower_bound",
    "edge_energy",
    "eigen_symmetric",
    "fiedler_quotient_check",
    "laplacian",
    "laplacian_spectrum",
    "laplacian_spread",
    "pair_energy",
    "resistance_from_spectrum",
    "resistance_matrix",
    "resistance_variational_oracle",
]
