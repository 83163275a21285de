"""Exact combinatorics of support patterns.

A :class:`Pattern` is a bipartite relation between row indices and column
indices; it stands for the masa bimodule of all matrices supported on it.
Diagonal projections are :class:`IndexSet` values.  Everything here is exact
set arithmetic; internally sets are packed into Python ints (bit ``k`` set
means index ``k`` is a member) so that closures over a few hundred sets stay
cheap.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from masabimod.errors import InputError, InvariantViolation

JOIN_WITH_ZERO = "join-closed-with-zero"
MEET_WITH_IDENTITY = "meet-closed-with-identity"
LATTICE = "lattice"
_KINDS = (JOIN_WITH_ZERO, MEET_WITH_IDENTITY, LATTICE)

DEFAULT_CELL_CAP = 20


# --------------------------------------------------------------------------
# bitmask helpers


def bits_of(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for k in members:
        m |= 1 << k
    return m


def _full(n: int) -> int:
    return (1 << n) - 1


def _mask_key(mask: int) -> tuple[int, tuple[int, ...]]:
    b = bits_of(mask)
    return (len(b), tuple(b))


def _canonical(masks: Iterable[int]) -> list[int]:
    return sorted(set(masks), key=_mask_key)


def _union_closure(generators: Iterable[int]) -> set[int]:
    """Union closure of ``generators`` together with the empty set."""
    closed = {0}
    for g in generators:
        if g in closed:
            continue
        closed |= {x | g for x in closed}
    return closed


def _meet_join_closure(generators: Iterable[int], universe: int, cap: int) -> set[int]:
    closed = {0, _full(universe)} | set(generators)
    frontier = list(closed)
    while frontier:
        new = set()
        for a in frontier:
            for b in closed:
                for c in (a & b, a | b):
                    if c not in closed:
                        new.add(c)
        if len(closed) + len(new) > cap:
            raise InputError(f"lattice closure exceeds cap of {cap} members")
        closed |= new
        frontier = list(new)
    return closed


# --------------------------------------------------------------------------
# value types


@dataclass(frozen=True)
class IndexSet:
    """A subset of ``range(universe)``; the support of a diagonal projection."""

    universe: int
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.universe < 0:
            raise InputError(f"negative universe {self.universe}")
        members = frozenset(int(k) for k in self.members)
        bad = [k for k in members if not 0 <= k < self.universe]
        if bad:
            raise InputError(f"indices {sorted(bad)} outside [0, {self.universe})")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, universe: int, members: Iterable[int] = ()) -> IndexSet:
        return cls(universe, frozenset(members))

    @classmethod
    def from_mask(cls, universe: int, mask: int) -> IndexSet:
        return cls(universe, frozenset(bits_of(mask)))

    @classmethod
    def full(cls, universe: int) -> IndexSet:
        return cls(universe, frozenset(range(universe)))

    @cached_property
    def mask(self) -> int:
        return mask_of(self.members)

    def complement(self) -> IndexSet:
        return IndexSet(self.universe, frozenset(range(self.universe)) - self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def sort_key(self):
        return (len(self.members), tuple(self.sorted()))

    def __len__(self):
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted())

    def __contains__(self, k):
        return k in self.members

    def __repr__(self):
        return f"IndexSet({self.universe}, {self.sorted()})"


@dataclass(frozen=True)
class Pattern:
    """Support set of a masa bimodule: ``entries`` is a set of (row, col) pairs."""

    rows: int
    cols: int
    entries: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InputError(f"negative dimensions {self.rows}x{self.cols}")
        entries = frozenset((int(i), int(j)) for i, j in self.entries)
        bad = [e for e in entries if not (0 <= e[0] < self.rows and 0 <= e[1] < self.cols)]
        if bad:
            raise InputError(f"entries {sorted(bad)} outside {self.rows}x{self.cols}")
        object.__setattr__(self, "entries", entries)

    # construction ---------------------------------------------------------

    @classmethod
    def of(cls, rows: int, cols: int, entries: Iterable[tuple[int, int]] = ()) -> Pattern:
        return cls(rows, cols, frozenset(map(tuple, entries)))

    @classmethod
    def empty(cls, rows: int, cols: int) -> Pattern:
        return cls(rows, cols, frozenset())

    @classmethod
    def full(cls, rows: int, cols: int) -> Pattern:
        return cls(rows, cols, frozenset((i, j) for i in range(rows) for j in range(cols)))

    @classmethod
    def from_array(cls, arr) -> Pattern:
        a = np.asarray(arr, dtype=bool)
        if a.ndim != 2:
            raise InputError("pattern array must be two-dimensional")
        return cls(a.shape[0], a.shape[1], frozenset(map(tuple, np.argwhere(a).tolist())))

    @classmethod
    def from_grid(cls, grid: Sequence[str]) -> Pattern:
        if not grid:
            return cls(0, 0)
        width = len(grid[0])
        entries = set()
        for i, line in enumerate(grid):
            if len(line) != width:
                raise InputError(f"grid row {i} has length {len(line)}, expected {width}")
            for j, ch in enumerate(line):
                if ch == "1":
                    entries.add((i, j))
                elif ch != "0":
                    raise InputError(f"grid row {i} has invalid character {ch!r}")
        return cls(len(grid), width, frozenset(entries))

    # views ----------------------------------------------------------------

    def to_array(self) -> np.ndarray:
        a = np.zeros((self.rows, self.cols), dtype=bool)
        for i, j in self.entries:
            a[i, j] = True
        return a

    def to_grid(self) -> list[str]:
        a = self.to_array()
        return ["".join("1" if x else "0" for x in row) for row in a]

    def sorted_entries(self) -> list[tuple[int, int]]:
        return sorted(self.entries)

    def transpose(self) -> Pattern:
        return Pattern(self.cols, self.rows, frozenset((j, i) for i, j in self.entries))

    @property
    def T(self) -> Pattern:
        return self.transpose()

    @cached_property
    def col_masks(self) -> tuple[int, ...]:
        """For each column, the bitmask of rows it meets."""
        out = [0] * self.cols
        for i, j in self.entries:
            out[j] |= 1 << i
        return tuple(out)

    @cached_property
    def row_masks(self) -> tuple[int, ...]:
        """For each row, the bitmask of columns it meets."""
        out = [0] * self.rows
        for i, j in self.entries:
            out[i] |= 1 << j
        return tuple(out)

    def row_support(self) -> IndexSet:
        return IndexSet(self.rows, frozenset(i for i, _ in self.entries))

    def col_support(self) -> IndexSet:
        return IndexSet(self.cols, frozenset(j for _, j in self.entries))

    def digest(self) -> str:
        h = hashlib.sha256(repr(self.sorted_entries()).encode()).hexdigest()[:16]
        return f"{self.rows}x{self.cols}:{h}"

    def restrict(self, rows: IndexSet | None = None, cols: IndexSet | None = None) -> Pattern:
        """Entries whose row lies in ``rows`` and column in ``cols`` (None = no restriction)."""
        return Pattern(
            self.rows,
            self.cols,
            frozenset(
                (i, j)
                for i, j in self.entries
                if (rows is None or i in rows) and (cols is None or j in cols)
            ),
        )

    # set algebra ----------------------------------------------------------

    def _same_shape(self, other: Pattern):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError(
                f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __or__(self, other: Pattern) -> Pattern:
        self._same_shape(other)
        return Pattern(self.rows, self.cols, self.entries | other.entries)

    def __and__(self, other: Pattern) -> Pattern:
        self._same_shape(other)
        return Pattern(self.rows, self.cols, self.entries & other.entries)

    def __sub__(self, other: Pattern) -> Pattern:
        self._same_shape(other)
        return Pattern(self.rows, self.cols, self.entries - other.entries)

    def __le__(self, other: Pattern) -> bool:
        self._same_shape(other)
        return self.entries <= other.entries

    def __len__(self):
        return len(self.entries)

    def __contains__(self, e):
        return tuple(e) in self.entries

    def __repr__(self):
        return f"Pattern({self.rows}, {self.cols}, {self.sorted_entries()})"


@dataclass(frozen=True)
class ProjectionFamily:
    """A finite family of index sets, stored deduplicated in canonical order."""

    universe: int
    sets: tuple = ()
    kind: str = LATTICE

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise InputError(f"unknown family kind {self.kind!r}")
        for s in self.sets:
            if s.universe != self.universe:
                raise InputError("family member has wrong universe")
        uniq = sorted(set(self.sets), key=IndexSet.sort_key)
        object.__setattr__(self, "sets", tuple(uniq))

    @classmethod
    def from_masks(cls, universe: int, masks: Iterable[int], kind: str) -> ProjectionFamily:
        return cls(universe, tuple(IndexSet.from_mask(universe, m) for m in set(masks)), kind)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(s.mask for s in self.sets)

    def is_closed(self) -> bool:
        """Whether the family satisfies the closure law and unit for its kind."""
        ms = set(self.masks)
        full = _full(self.universe)
        if self.kind in (JOIN_WITH_ZERO, LATTICE):
            if 0 not in ms or any(a | b not in ms for a in ms for b in ms):
                return False
        if self.kind in (MEET_WITH_IDENTITY, LATTICE):
            if full not in ms or any(a & b not in ms for a in ms for b in ms):
                return False
        return True

    def __len__(self):
        return len(self.sets)

    def __iter__(self) -> Iterator[IndexSet]:
        return iter(self.sets)

    def __contains__(self, s):
        return s in self.sets


@dataclass(frozen=True)
class Partition:
    universe: int
    cells: tuple = ()

    def __post_init__(self):
        cells = tuple(sorted(self.cells, key=lambda c: c.sorted()))
        seen: set[int] = set()
        for c in cells:
            if c.universe != self.universe:
                raise InputError("partition cell has wrong universe")
            if not c.members:
                raise InputError("partition cells must be nonempty")
            if seen & c.members:
                raise InputError("partition cells overlap")
            seen |= c.members
        if seen != set(range(self.universe)):
            raise InputError("partition cells do not cover the universe")
        object.__setattr__(self, "cells", cells)

    def pattern(self) -> Pattern:
        """The square pattern of block-diagonal matrices over the cells."""
        return Pattern(
            self.universe,
            self.universe,
            frozenset((a, b) for c in self.cells for a in c.members for b in c.members),
        )

    def cell_of(self, k: int) -> IndexSet:
        for c in self.cells:
            if k in c:
                return c
        raise InputError(f"index {k} outside partition universe {self.universe}")

    def __len__(self):
        return len(self.cells)


@dataclass(frozen=True)
class Atom:
    """An atom ``f = P \\ P0`` of the column semilattice and its row image ``delta_f``."""

    f: IndexSet
    delta_f: IndexSet
    generator_p: IndexSet
    generator_p0: IndexSet
    witnesses: tuple = ()


@dataclass(frozen=True)
class DiagonalSummary:
    delta: Pattern
    atoms: tuple
    blocks: tuple  # ((row IndexSet, col IndexSet), ...)
    chi_i: IndexSet
    chi_star_i: IndexSet

    def block_pattern(self) -> Pattern:
        return Pattern(
            self.delta.rows,
            self.delta.cols,
            frozenset((i, j) for e, f in self.blocks for i in e.members for j in f.members),
        )


class ModuleFamilies(NamedTuple):
    n1: Pattern
    n2: Pattern
    l1: Pattern
    l2: Pattern
    a1: Partition
    a2: Partition


@dataclass(frozen=True)
class BimoduleAnalysis:
    pattern: Pattern
    s1: ProjectionFamily
    s2: ProjectionFamily
    delta: Pattern
    u0: Pattern
    atoms: tuple
    blocks: tuple
    chi_i: IndexSet
    chi_star_i: IndexSet
    n1: Pattern
    n2: Pattern
    l1: Pattern
    l2: Pattern
    a1: Partition
    a2: Partition
    psi_note: str = "psi = Map(U0) is map_phi applied to the u0 pattern"

    def psi(self, c: IndexSet) -> IndexSet:
        return map_phi(self.u0, c)


# --------------------------------------------------------------------------
# relational algebra


def compose(*patterns: Pattern) -> Pattern:
    """Boolean relational product ``p1 ∘ p2 ∘ ...`` (matrix-product order)."""
    if not patterns:
        raise InputError("compose needs at least one pattern")
    acc = patterns[0].to_array().astype(np.int64)
    for q in patterns[1:]:
        if acc.shape[1] != q.rows:
            raise InputError(f"cannot compose {acc.shape[1]} columns with {q.rows} rows")
        acc = ((acc @ q.to_array().astype(np.int64)) > 0).astype(np.int64)
    return Pattern.from_array(acc > 0)


def _phi_mask(col_masks: Sequence[int], cmask: int) -> int:
    out = 0
    j = 0
    while cmask:
        if cmask & 1:
            out |= col_masks[j]
        cmask >>= 1
        j += 1
    return out


def map_phi(p: Pattern, c: IndexSet) -> IndexSet:
    """Rows reached from the columns in ``c``: the range projection of ``U c``."""
    if c.universe != p.cols:
        raise InputError(f"column set over {c.universe} indices, pattern has {p.cols} columns")
    return IndexSet.from_mask(p.rows, _phi_mask(p.col_masks, c.mask))


def map_phi_star(p: Pattern, r: IndexSet) -> IndexSet:
    """Columns reached from the rows in ``r``; ``map_phi`` of the transpose."""
    if r.universe != p.rows:
        raise InputError(f"row set over {r.universe} indices, pattern has {p.rows} rows")
    return IndexSet.from_mask(p.cols, _phi_mask(p.row_masks, r.mask))


# --------------------------------------------------------------------------
# cached per-pattern context


class _Context(NamedTuple):
    s1: list[int]  # canonical order
    phi_s1: list[int]  # phi of each s1 member
    s2: list[int]
    col_profile: list[int]  # bit k set iff column in s1[k]
    row_profile: list[int]  # bit k set iff row in phi(s1[k])
    s2_profile: list[int]  # bit k set iff row in s2[k]


@lru_cache(maxsize=512)
def _context(p: Pattern) -> _Context:
    full_cols = _full(p.cols)
    s2 = _canonical(_union_closure(p.col_masks))
    s1 = _canonical(full_cols & ~x for x in _union_closure(p.row_masks))
    phi_s1 = [_phi_mask(p.col_masks, m) for m in s1]
    col_profile = [0] * p.cols
    row_profile = [0] * p.rows
    for k, (m, fm) in enumerate(zip(s1, phi_s1)):
        for j in bits_of(m):
            col_profile[j] |= 1 << k
        for i in bits_of(fm):
            row_profile[i] |= 1 << k
    s2_profile = [0] * p.rows
    for k, m in enumerate(s2):
        for i in bits_of(m):
            s2_profile[i] |= 1 << k
    return _Context(s1, phi_s1, s2, col_profile, row_profile, s2_profile)


def _inverse_phi(p: Pattern, q: int) -> int:
    """Member of s1 mapped onto ``q`` by phi: complement of phi*(complement of q)."""
    return _full(p.cols) & ~_phi_mask(p.row_masks, _full(p.rows) & ~q)


# --------------------------------------------------------------------------
# operations


def semilattices(p: Pattern) -> tuple[ProjectionFamily, ProjectionFamily]:
    """Column semilattice ``s1`` (meet-closed, has the identity) and row semilattice ``s2``.

    ``s2`` is every range ``map_phi(p, C)``; ``s1`` is every complement of a
    ``map_phi_star`` range.  Raises :class:`InvariantViolation` if phi fails
    to be a bijection ``s1 -> s2`` with the expected inverse.
    """
    ctx = _context(p)
    if sorted(ctx.phi_s1) != sorted(ctx.s2):
        raise InvariantViolation("phi does not map s1 onto s2")
    for m, fm in zip(ctx.s1, ctx.phi_s1):
        if _inverse_phi(p, fm) != m:
            raise InvariantViolation(f"inverse formula fails at {bits_of(m)}")
    s1 = ProjectionFamily.from_masks(p.cols, ctx.s1, MEET_WITH_IDENTITY)
    s2 = ProjectionFamily.from_masks(p.rows, ctx.s2, JOIN_WITH_ZERO)
    return s1, s2


def delta_pattern(p: Pattern) -> Pattern:
    """The diagonal: positions (i, j) with ``j in P <=> i in phi(P)`` for every P in s1.

    This is the support of ``{T : TP = phi(P)T for all P in s1}``.
    """
    ctx = _context(p)
    return Pattern(
        p.rows,
        p.cols,
        frozenset(
            (i, j)
            for i in range(p.rows)
            for j in range(p.cols)
            if ctx.row_profile[i] == ctx.col_profile[j]
        ),
    )


def u0_pattern(p: Pattern) -> Pattern:
    """Entries of ``p`` reached by some ``phi(P) T P^perp`` with P in s1."""
    ctx = _context(p)
    return Pattern(
        p.rows,
        p.cols,
        frozenset(
            (i, j) for i, j in p.entries if ctx.row_profile[i] & ~ctx.col_profile[j]
        ),
    )


def atoms(p: Pattern) -> list[Atom]:
    """Atoms ``P \\ P0`` of s1, where ``phi(P0)`` is the join of strictly smaller phi-images.

    Atoms with the same ``(f, delta_f)`` pair are merged; every generating
    pair (P, P0) is kept in ``witnesses``.
    """
    ctx = _context(p)
    s1_set = set(ctx.s1)
    found: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for pm, fpm in zip(ctx.s1, ctx.phi_s1):
        below = 0
        for fl in ctx.phi_s1:
            if fl != fpm and fl & ~fpm == 0:
                below |= fl
        if below == fpm:
            continue
        p0 = _inverse_phi(p, below)
        if p0 not in s1_set or _phi_mask(p.col_masks, p0) != below or p0 & ~pm:
            raise InvariantViolation(f"atom generator P0 invalid below P={bits_of(pm)}")
        key = (pm & ~p0, fpm & ~below)
        found.setdefault(key, []).append((pm, p0))
    out = []
    for (fm, dm), wit in found.items():
        wit = sorted(wit, key=lambda w: (_mask_key(w[0]), _mask_key(w[1])))
        out.append(
            Atom(
                f=IndexSet.from_mask(p.cols, fm),
                delta_f=IndexSet.from_mask(p.rows, dm),
                generator_p=IndexSet.from_mask(p.cols, wit[0][0]),
                generator_p0=IndexSet.from_mask(p.cols, wit[0][1]),
                witnesses=tuple(
                    (IndexSet.from_mask(p.cols, a), IndexSet.from_mask(p.cols, b)) for a, b in wit
                ),
            )
        )
    out.sort(key=lambda a: (a.f.sort_key(), a.delta_f.sort_key()))
    return out


def diagonal_summary(p: Pattern) -> DiagonalSummary:
    """Diagonal together with its atomic block structure.

    Blocks are ``(chi(I) ∩ delta(F), F)`` over atoms F.  The union of the
    blocks must reproduce the diagonal with pairwise disjoint row sets and
    column sets; anything else raises :class:`InvariantViolation`.
    """
    delta = delta_pattern(p)
    ats = atoms(p)
    chi = delta.row_support()
    chi_star = delta.col_support()
    blocks = []
    for a in ats:
        e = IndexSet(p.rows, chi.members & a.delta_f.members)
        if e.members:
            blocks.append((e, a.f))
    for k, (e1, f1) in enumerate(blocks):
        for e2, f2 in blocks[k + 1 :]:
            if e1.members & e2.members or f1.members & f2.members:
                raise InvariantViolation(
                    f"blocks {e1.sorted()}x{f1.sorted()} and {e2.sorted()}x{f2.sorted()} overlap"
                )
    summary = DiagonalSummary(delta, tuple(ats), tuple(blocks), chi, chi_star)
    if summary.block_pattern() != delta:
        diff = sorted(summary.block_pattern().entries ^ delta.entries)
        raise InvariantViolation(f"block union differs from diagonal at {diff}")
    return summary


def _profile_partition(universe: int, profile: Sequence[int]) -> Partition:
    groups: dict[int, list[int]] = {}
    for k in range(universe):
        groups.setdefault(profile[k], []).append(k)
    return Partition(universe, tuple(IndexSet.of(universe, g) for g in groups.values()))


def profile_partition(f: ProjectionFamily) -> Partition:
    """Partition of the universe by membership profile across ``f``."""
    profile = [0] * f.universe
    for k, m in enumerate(f.masks):
        for x in bits_of(m):
            profile[x] |= 1 << k
    return _profile_partition(f.universe, profile)


def _order_pattern(universe: int, profile: Sequence[int]) -> tuple[Pattern, Pattern]:
    n = set()
    l = set()
    for a in range(universe):
        for b in range(universe):
            if profile[b] & ~profile[a] == 0:
                n.add((a, b))
                if profile[a] & ~profile[b]:
                    l.add((a, b))
    return Pattern(universe, universe, frozenset(n)), Pattern(universe, universe, frozenset(l))


def module_families(p: Pattern) -> ModuleFamilies:
    """``Alg`` of each semilattice (n1, n2), their radical-type parts (l1, l2), and commutant partitions."""
    ctx = _context(p)
    n1, l1 = _order_pattern(p.cols, ctx.col_profile)
    n2, l2 = _order_pattern(p.rows, ctx.s2_profile)
    a1 = _profile_partition(p.cols, ctx.col_profile)
    a2 = _profile_partition(p.rows, ctx.s2_profile)
    return ModuleFamilies(n1, n2, l1, l2, a1, a2)


def tro_check(p: Pattern) -> bool:
    """Whether ``p p^T p ⊆ p``, i.e. the pattern space is a ternary ring of operators."""
    return compose(p, p.transpose(), p) <= p


def tro_ideal_split(m: Pattern, m0: Pattern) -> tuple[IndexSet, IndexSet]:
    """Central supports (column set, row set) cutting the TRO ideal ``m0`` out of ``m``."""
    if not tro_check(m):
        raise InputError("m is not a TRO: m m^T m ⊄ m")
    if not m0 <= m:
        raise InputError(f"m0 ⊄ m: extra entries {sorted(m0.entries - m.entries)}")
    if not compose(m0, m.transpose(), m) <= m0:
        raise InputError("m0 is not a TRO ideal: m0 m^T m ⊄ m0")
    if not compose(m, m.transpose(), m0) <= m0:
        raise InputError("m0 is not a TRO ideal: m m^T m0 ⊄ m0")
    q1 = m0.col_support()
    q2 = m0.row_support()
    if m.restrict(cols=q1) != m0 or m.restrict(rows=q2) != m0:
        raise InvariantViolation("ideal is not cut out by its central supports")
    return q1, q2


def tro_block_decomposition(m: Pattern) -> list[tuple[IndexSet, IndexSet]]:
    """Connected components of the bipartite graph of ``m``, each a full rectangle."""
    if not tro_check(m):
        raise InputError("tro_block_decomposition needs a TRO pattern")
    seen_rows: set[int] = set()
    blocks = []
    for start in sorted(m.row_support().members):
        if start in seen_rows:
            continue
        rows, cols = {start}, set()
        queue = deque([("r", start)])
        while queue:
            side, k = queue.popleft()
            if side == "r":
                for j in bits_of(m.row_masks[k]):
                    if j not in cols:
                        cols.add(j)
                        queue.append(("c", j))
            else:
                for i in bits_of(m.col_masks[k]):
                    if i not in rows:
                        rows.add(i)
                        queue.append(("r", i))
        seen_rows |= rows
        e, f = IndexSet.of(m.rows, rows), IndexSet.of(m.cols, cols)
        missing = [(i, j) for i in rows for j in cols if (i, j) not in m.entries]
        if missing:
            raise InvariantViolation(f"component {e.sorted()}x{f.sorted()} misses {sorted(missing)}")
        blocks.append((e, f))
    blocks.sort(key=lambda b: (b[0].sorted(), b[1].sorted()))
    return blocks


def ref_check(p: Pattern) -> bool:
    """Compare the pattern with its reflexive hull computed from single-index compressions.

    ``(i, j)`` lies in the hull unless ``E_i U F_j = 0``; the compressions are
    evaluated on the matrix-unit basis of the pattern space.
    """
    basis = np.zeros((len(p), p.rows, p.cols))
    for k, (a, b) in enumerate(p.sorted_entries()):
        basis[k, a, b] = 1.0
    # E_i T F_j != 0 for some basis element T  <=>  (i, j) in Ref
    hull = Pattern.from_array(np.any(basis != 0, axis=0)) if len(p) else Pattern.empty(p.rows, p.cols)
    return hull == p


def bicommutant_projections(f: ProjectionFamily, cap: int = DEFAULT_CELL_CAP) -> ProjectionFamily:
    """All unions of cells of the membership-profile partition of ``f``."""
    part = profile_partition(f)
    if len(part.cells) > cap:
        raise InputError(f"{len(part.cells)} cells exceeds cap {cap}")
    masks = _union_closure(c.mask for c in part.cells)
    return ProjectionFamily.from_masks(f.universe, masks, LATTICE)


def analyze(p: Pattern) -> BimoduleAnalysis:
    """Compute every structural object of the pattern in one pass."""
    s1, s2 = semilattices(p)
    summary = diagonal_summary(p)
    fam = module_families(p)
    return BimoduleAnalysis(
        pattern=p,
        s1=s1,
        s2=s2,
        delta=summary.delta,
        u0=u0_pattern(p),
        atoms=summary.atoms,
        blocks=summary.blocks,
        chi_i=summary.chi_i,
        chi_star_i=summary.chi_star_i,
        n1=fam.n1,
        n2=fam.n2,
        l1=fam.l1,
        l2=fam.l2,
        a1=fam.a1,
        a2=fam.a2,
    )
