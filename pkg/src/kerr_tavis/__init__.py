"""Exact dynamics of two atoms in a Kerr cavity seeded by a binomial field.

Closed-form block solution for the amplitudes, reduced density matrices,
spin squeezing, von Neumann entropy and Husimi Q-function, together with a
brute-force propagator used to check all of it.
"""
from .amplitudes import AmplitudeTable, Dynamics, excited_group, ground_group, state_vector
from .density import atomic_density, field_density
from .entropy import atomic_entropy, eigenvalues_numeric, von_neumann_entropy
from .husimi import QGrid, QMode, blob_count, q_grid, q_value
from .observables import collective_expectations, inversion, squeezing_parameters
from .states import BellState, BinomialField, ModelConfig, binomial_coefficients, choose_cutoff

__all__ = [
    "AmplitudeTable", "BellState", "BinomialField", "Dynamics", "ModelConfig", "QGrid", "QMode",
    "atomic_density", "atomic_entropy", "binomial_coefficients", "blob_count", "choose_cutoff",
    "collective_expectations", "eigenvalues_numeric", "excited_group", "field_density",
    "ground_group", "inversion", "q_grid", "q_value", "squeezing_parameters", "state_vector",
    "von_neumann_entropy",
]
