"""Finite-dimensional toolkit for reflexive masa bimodules.

A masa bimodule in finite dimension is a pattern subspace: all matrices whose
support lies inside a fixed set of (row, col) positions.  This package
computes the semilattices, diagonal, radical-like part ``U0``, atoms and
block projector of such a pattern and checks the decomposition identities
both combinatorially and with dense linear algebra.
"""

from masabimod.errors import InputError, InvariantViolation
from masabimod.pattern_core import (
    Atom,
    BimoduleAnalysis,
    DiagonalSummary,
    IndexSet,
    Partition,
    Pattern,
    ProjectionFamily,
    analyze,
    atoms,
    bicommutant_projections,
    delta_pattern,
    diagonal_summary,
    map_phi,
    map_phi_star,
    module_families,
    ref_check,
    semilattices,
    tro_block_decomposition,
    tro_check,
    tro_ideal_split,
    u0_pattern,
)

__all__ = [
    "Atom",
    "BimoduleAnalysis",
    "DiagonalSummary",
    "IndexSet",
    "InputError",
    "InvariantViolation",
    "Partition",
    "Pattern",
    "ProjectionFamily",
    "analyze",
    "atoms",
    "bicommutant_projections",
    "delta_pattern",
    "diagonal_summary",
    "map_phi",
    "map_phi_star",
    "module_families",
    "ref_check",
    "semilattices",
    "tro_block_decomposition",
    "tro_check",
    "tro_ideal_split",
    "u0_pattern",
]

__version__ = "0.1.0"
