"""Dense complex linear algebra over pattern spaces.

Matrices are plain ``numpy.ndarray`` values of dtype ``complex128``.  The
compressions ``T -> phi(P) T P + phi(P)^perp T P^perp`` and the block
projector are 0/1 Schur (entrywise) multipliers, so they are represented by
boolean masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

from masabimod.errors import InputError
from masabimod.pattern_core import (
    IndexSet,
    Partition,
    Pattern,
    _context,
    bits_of,
    delta_pattern,
    diagonal_summary,
    map_phi,
    tro_block_decomposition,
    u0_pattern,
)

SUPPORT_TOL = 1e-12
RANK_TOL = 1e-8
NORM_TOL = 1e-9


def as_matrix(t, rows: int | None = None, cols: int | None = None) -> np.ndarray:
    """Coerce ``t`` to a finite 2-D complex array, optionally checking its shape."""
    a = np.asarray(t, dtype=np.complex128)
    if a.ndim != 2:
        raise InputError(f"expected a 2-D matrix, got shape {a.shape}")
    if rows is not None and a.shape != (rows, cols):
        raise InputError(f"matrix shape {a.shape} does not match pattern {rows}x{cols}")
    if not np.all(np.isfinite(a)):
        raise InputError("matrix has non-finite entries")
    return a


@dataclass(frozen=True)
class SchurMask:
    entries: np.ndarray  # bool, shape (rows, cols)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @classmethod
    def from_pattern(cls, p: Pattern) -> SchurMask:
        return cls(p.to_array())

    def to_pattern(self) -> Pattern:
        return Pattern.from_array(self.entries)

    def __eq__(self, other):
        return isinstance(other, SchurMask) and np.array_equal(self.entries, other.entries)

    __hash__ = None


@dataclass(frozen=True)
class DecompositionResult:
    l: np.ndarray  # diagonal part
    m: np.ndarray  # U0 part
    iterations: int  # block compressions summed into l
    residual: float


def mask_for(p: Pattern, pset: IndexSet) -> SchurMask:
    """Mask of ``T -> phi(P) T P + phi(P)^perp T P^perp``."""
    if pset.universe != p.cols:
        raise InputError(f"column set over {pset.universe} indices, pattern has {p.cols} columns")
    rows_in = np.zeros(p.rows, dtype=bool)
    rows_in[map_phi(p, pset).sorted()] = True
    cols_in = np.zeros(p.cols, dtype=bool)
    cols_in[pset.sorted()] = True
    return SchurMask(rows_in[:, None] == cols_in[None, :])


def schur_apply(mask: SchurMask, t) -> np.ndarray:
    a = as_matrix(t)
    if a.shape != mask.entries.shape:
        raise InputError(f"mask shape {mask.entries.shape} vs matrix shape {a.shape}")
    return np.where(mask.entries, a, 0)


def u_iteration(
    p: Pattern, t, order: Sequence[int] | None = None
) -> tuple[list[np.ndarray], np.ndarray]:
    """Apply the compression for every member of s1 in turn.

    ``order`` optionally permutes s1 (indices into its canonical order).
    Returns the list of iterates ``[U_1(t), U_2(t), ...]`` and the last one;
    for an s1 with a single member the list has one element.
    """
    a = as_matrix(t, p.rows, p.cols)
    s1 = _context(p).s1
    idx = range(len(s1)) if order is None else order
    if sorted(idx) != list(range(len(s1))):
        raise InputError("order must be a permutation of s1 indices")
    trace = []
    cur = a
    for k in idx:
        cur = schur_apply(mask_for(p, IndexSet.from_mask(p.cols, s1[k])), cur)
        trace.append(cur)
    return trace, cur


def block_mask(p: Pattern) -> SchurMask:
    summary = diagonal_summary(p)
    return SchurMask.from_pattern(summary.block_pattern())


def block_projector_d(p: Pattern, t) -> np.ndarray:
    """``D(t) = sum_n E_n t F_n`` over the atomic blocks of the diagonal."""
    a = as_matrix(t, p.rows, p.cols)
    out = np.zeros_like(a)
    for e, f in diagonal_summary(p).blocks:
        r, c = np.ix_(e.sorted(), f.sorted())
        out[r, c] += a[r, c]
    return out


def support_violations(p: Pattern, t, tol: float = SUPPORT_TOL) -> list[tuple[int, int]]:
    a = as_matrix(t, p.rows, p.cols)
    outside = ~p.to_array() & (np.abs(a) > tol)
    return [tuple(x) for x in np.argwhere(outside).tolist()]


def decompose(p: Pattern, t) -> DecompositionResult:
    """Split ``t`` (supported on ``p``) into its diagonal and ``U0`` parts."""
    a = as_matrix(t, p.rows, p.cols)
    bad = support_violations(p, a)
    if bad:
        raise InputError(f"matrix has entries outside the pattern at {bad}")
    a = np.where(p.to_array(), a, 0)
    l = block_projector_d(p, a)
    m = a - l
    residual = float(np.max(np.abs(a - (l + m)))) if a.size else 0.0
    return DecompositionResult(l=l, m=m, iterations=len(diagonal_summary(p).blocks), residual=residual)


def singular_values(t) -> np.ndarray:
    a = as_matrix(t)
    if a.size == 0:
        return np.zeros(0)
    return scipy.linalg.svdvals(a)


def operator_norm(t) -> float:
    s = singular_values(t)
    return float(s[0]) if s.size else 0.0


def schatten_norm(t, pexp: float) -> float:
    if pexp < 1:
        raise InputError(f"Schatten exponent must be >= 1, got {pexp}")
    s = singular_values(t)
    if s.size == 0:
        return 0.0
    return float(np.sum(s**pexp) ** (1.0 / pexp))


def numeric_rank(t, tol: float = RANK_TOL) -> int:
    if tol <= 0:
        raise InputError("rank tolerance must be positive")
    s = singular_values(t)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > tol * s[0]))


def trace_pair(a, b) -> complex:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0] or b.shape[1] != a.shape[0]:
        raise InputError(f"cannot pair shapes {a.shape} and {b.shape}")
    return complex(np.trace(a @ b))


def _unit(rows: int, cols: int, i: int, j: int) -> np.ndarray:
    e = np.zeros((rows, cols), dtype=np.complex128)
    e[i, j] = 1.0
    return e


def annihilator_basis(space: Pattern, rank_ones: Pattern) -> np.ndarray:
    """Orthonormal basis (columns, in matrix-unit coordinates of ``space``) of the annihilator.

    The annihilator is ``{T in span(space) : tr(T R^*) = 0 for all units R in rank_ones}``.
    """
    basis = space.sorted_entries()
    constraints = rank_ones.sorted_entries()
    if not basis:
        return np.zeros((0, 0), dtype=np.complex128)
    if not constraints:
        return np.eye(len(basis), dtype=np.complex128)
    units = np.array([_unit(space.rows, space.cols, x, y) for x, y in basis])
    r_star = np.array([_unit(space.rows, space.cols, i, j).conj().T for i, j in constraints])
    # a[r, c] = tr(units[c] @ r_star[r])
    a = np.einsum("cij,rji->rc", units, r_star)
    return scipy.linalg.null_space(a, rcond=RANK_TOL)


def annihilator_intersection(space: Pattern, rank_ones: Pattern) -> int:
    """Dimension of the part of ``span(space)`` annihilated by the units of ``rank_ones``."""
    return int(annihilator_basis(space, rank_ones).shape[1])


def annihilator_support(space: Pattern, rank_ones: Pattern) -> Pattern:
    """Entries of ``space`` whose matrix unit lies in the annihilator (numerically)."""
    basis = space.sorted_entries()
    n = annihilator_basis(space, rank_ones)
    keep = set()
    for c, e in enumerate(basis):
        # unit vector e_c lies in range(n) iff its projection has norm 1
        if n.shape[1] and abs(np.linalg.norm(n[c, :]) - 1.0) < 1e-9:
            keep.add(e)
    return Pattern(space.rows, space.cols, frozenset(keep))


def construct_partial_isometry(p: Pattern, mode: str = "delta") -> np.ndarray:
    """0/1 partial isometry saturating every block of the diagonal (or of ``p`` itself).

    ``mode="delta"`` uses the atomic blocks of the diagonal of ``p``;
    ``mode="tro"`` requires ``p`` to be a TRO and uses its own rectangles.
    Inside each block the k-th smallest row is paired with the k-th smallest column.
    """
    if mode == "delta":
        blocks = diagonal_summary(p).blocks
    elif mode == "tro":
        blocks = tro_block_decomposition(p)
    else:
        raise InputError(f"unknown mode {mode!r}")
    v = np.zeros((p.rows, p.cols), dtype=np.complex128)
    for e, f in blocks:
        for i, j in zip(e.sorted(), f.sorted()):
            v[i, j] = 1.0
    return v


def span_dimension_generated(v, a1: Partition, a2: Partition, tol: float = RANK_TOL) -> int:
    """Dimension of ``span{B2 v B1}`` with B1, B2 block diagonal over ``a1``, ``a2``."""
    v = as_matrix(v)
    if v.shape != (a2.universe, a1.universe):
        raise InputError(f"matrix shape {v.shape} vs partitions {a2.universe}x{a1.universe}")
    vecs = []
    for c2 in a2.cells:
        for a in c2.sorted():
            for b in c2.sorted():
                for c1 in a1.cells:
                    for c in c1.sorted():
                        for d in c1.sorted():
                            # e_a e_b^* v e_c e_d^* = v[b, c] e_a e_d^*
                            if v[b, c] != 0:
                                w = np.zeros(v.shape, dtype=np.complex128)
                                w[a, d] = v[b, c]
                                vecs.append(w.ravel())
    if not vecs:
        return 0
    return numeric_rank(np.array(vecs), tol)


def delta_mask(p: Pattern) -> SchurMask:
    return SchurMask.from_pattern(delta_pattern(p))


def u0_mask(p: Pattern) -> SchurMask:
    return SchurMask.from_pattern(u0_pattern(p))


def random_matrix_on(p: Pattern, rng: np.random.Generator, complex_entries: bool = True) -> np.ndarray:
    """Standard Gaussian entries on the pattern, zero elsewhere."""
    shape = (p.rows, p.cols)
    a = rng.standard_normal(shape)
    if complex_entries:
        a = a + 1j * rng.standard_normal(shape)
    return np.where(p.to_array(), a, 0).astype(np.complex128)


def s1_size(p: Pattern) -> int:
    return len(_context(p).s1)


def s1_member(p: Pattern, k: int) -> IndexSet:
    return IndexSet.from_mask(p.cols, _context(p).s1[k])


__all__ = [
    "DecompositionResult",
    "SchurMask",
    "annihilator_basis",
    "annihilator_intersection",
    "annihilator_support",
    "as_matrix",
    "bits_of",
    "block_mask",
    "block_projector_d",
    "construct_partial_isometry",
    "decompose",
    "delta_mask",
    "mask_for",
    "numeric_rank",
    "operator_norm",
    "random_matrix_on",
    "schatten_norm",
    "schur_apply",
    "singular_values",
    "span_dimension_generated",
    "support_violations",
    "trace_pair",
    "u0_mask",
    "u_iteration",
]
