"""Potts model with a reflecting wall: enumeration, deletion-contraction and blob-algebra trace."""

from .braid import lattice_z, potts_bracket_lattice
from .coefficients import QfScalar
from .graph import BoundaryGraph, lattice_graph
from .model import ModelParams, make_model
from .partition import brute_force_z, deletion_contraction_z

__all__ = [
    "BoundaryGraph",
    "ModelParams",
    "QfScalar",
    "brute_force_z",
    "deletion_contraction_z",
    "lattice_graph",
    "lattice_z",
    "make_model",
    "potts_bracket_lattice",
]
