"""Scaled-integer lattices, reduction and enumeration."""
from .core import (GramLattice, NeighborPair, ScaledLattice, as_gram_lattice,
                   characteristic_coords, construction_a, contains, coordinates, dual,
                   even_neighbors, even_sublattice, find_frame, gram, gram_det,
                   integer_lattice, intersection, is_even, is_sublattice, is_integral, is_unimodular, lll_reduce,
                   rational_gram, sublattice_index)
from .enum import (DEFAULT_BUDGET, MinNormResult, ShortVectorReport, min_norm,
                   short_vectors, theta_coefficients)
from .lll import lll_basis, lll_gram

__all__ = [
    "DEFAULT_BUDGET", "GramLattice", "MinNormResult", "NeighborPair", "ScaledLattice",
    "ShortVectorReport", "as_gram_lattice", "characteristic_coords", "construction_a",
    "contains", "coordinates", "dual", "even_neighbors", "even_sublattice", "find_frame",
    "gram", "gram_det", "integer_lattice", "intersection", "is_even", "is_sublattice", "is_integral", "is_unimodular",
    "lll_basis", "lll_gram", "lll_reduce", "min_norm", "rational_gram", "short_vectors", "sublattice_index",
    "theta_coefficients",
]
