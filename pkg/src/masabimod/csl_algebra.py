"""CSL algebras on a single finite set: Alg(S), its radical, and the ideal J.

For a finite commutative subspace lattice ``S`` (a ring of subsets of
``range(n)`` containing ∅ and the full set), ``Alg(S)`` is the pattern of
the preorder ``i <= j  iff  every P in S containing j also contains i``.
Its Jacobson radical is the strict part of that preorder.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from masabimod.errors import InputError
from masabimod.pattern_core import (
    LATTICE,
    IndexSet,
    Partition,
    Pattern,
    ProjectionFamily,
    _meet_join_closure,
    delta_pattern,
    map_phi,
    profile_partition,
    u0_pattern,
)
from masabimod.theorem_suite import VerifierReport, _eq, _report

DEFAULT_LATTICE_CAP = 4096


@dataclass(frozen=True)
class CslInput:
    universe: int
    generators: tuple = ()

    def __post_init__(self):
        if self.universe < 0:
            raise InputError("universe must be nonnegative")
        gens = tuple(
            g if isinstance(g, IndexSet) else IndexSet.of(self.universe, g) for g in self.generators
        )
        for g in gens:
            if g.universe != self.universe:
                raise InputError("generator over the wrong universe")
        object.__setattr__(self, "generators", gens)

    def digest(self) -> str:
        return f"csl{self.universe}:{sorted(g.sorted() for g in self.generators)}"


@dataclass(frozen=True)
class CslAnalysis:
    input: CslInput
    lattice: ProjectionFamily
    alg: Pattern
    j: Pattern
    rad: Pattern
    q: IndexSet
    commutant: Partition
    atoms_of_s: tuple

    def psi(self, e: IndexSet) -> IndexSet:
        return map_phi(self.j, e)

    def qs_prime(self) -> Pattern:
        """Pattern of ``Q S'``: Q on the left of the block-diagonal commutant."""
        return Pattern(
            self.input.universe,
            self.input.universe,
            frozenset((a, b) for a, b in self.commutant.pattern().entries if a in self.q),
        )


def csl_analyze(inp: CslInput, cap: int = DEFAULT_LATTICE_CAP) -> CslAnalysis:
    n = inp.universe
    lattice = ProjectionFamily.from_masks(
        n, _meet_join_closure((g.mask for g in inp.generators), n, cap), LATTICE
    )
    sets = lattice.sets
    alg = Pattern(
        n,
        n,
        frozenset(
            (i, j)
            for i in range(n)
            for j in range(n)
            if all(i in s for s in sets if j in s)
        ),
    )
    j_pat = Pattern(
        n,
        n,
        frozenset(
            (a, b) for a, b in alg.entries if any(a in s and b not in s for s in sets)
        ),
    )
    rad = Pattern(n, n, frozenset((a, b) for a, b in alg.entries if (b, a) not in alg.entries))
    q = set()
    for e in sets:
        q |= e.members - map_phi(j_pat, e).members
    commutant = profile_partition(lattice)
    return CslAnalysis(
        input=inp,
        lattice=lattice,
        alg=alg,
        j=j_pat,
        rad=rad,
        q=IndexSet.of(n, q),
        commutant=commutant,
        atoms_of_s=commutant.cells,
    )


def verify_csl_theorems(inp: CslInput) -> list[VerifierReport]:
    """Radical/ideal coincidence and the two direct-sum forms of Alg(S)."""
    digest = inp.digest()
    try:
        an = csl_analyze(inp)
    except Exception as exc:
        return [VerifierReport("csl_analyze", digest, False, f"{type(exc).__name__}: {exc}")]
    n = inp.universe
    cells = an.commutant.pattern()

    def cor_5_3():
        return _eq(an.j, an.rad, "J vs Rad"), f"J = Rad with {len(an.rad)} entries"

    def cor_5_4():
        psi = {e: an.psi(e).members for e in an.lattice.sets}
        hull = Pattern(
            n,
            n,
            frozenset(
                (a, b)
                for a in range(n)
                for b in range(n)
                if not any(b in e and a not in psi[e] for e in an.lattice.sets)
            ),
        )
        return _eq(hull, an.rad, "{T: ψ(E)^⊥TE = 0} vs Rad"), "Rad = {T: ψ(E)^⊥TE = 0, E in S}"

    def prop_5_5():
        qs = an.qs_prime()
        probs = []
        if len(an.rad & qs):
            probs.append(f"Rad ∩ QS' = {(an.rad & qs).sorted_entries()}")
        probs += _eq(an.rad | qs, an.alg, "Rad ⊕ QS' vs Alg")
        return probs, f"Q = {an.q.sorted()}, Alg = Rad ⊕ QS'"

    def cor_7_6():
        probs = []
        if len(an.rad & cells):
            probs.append(f"Rad meets ⊕A_n×A_n at {(an.rad & cells).sorted_entries()}")
        probs += _eq(an.rad | cells, an.alg, "Rad ⊕ ΣA_nB(H)A_n vs Alg")
        return probs, f"{len(an.commutant)} atoms {[c.sorted() for c in an.commutant.cells]}"

    def diagonal():
        probs = _eq(u0_pattern(an.alg), an.rad, "u0(Alg) vs Rad")
        probs += _eq(delta_pattern(an.alg), cells, "Δ(Alg) vs S'")
        return probs, "u0(Alg) = Rad and Δ(Alg) = S'"

    checks = [
        ("Cor5.3", cor_5_3),
        ("Cor5.4", cor_5_4),
        ("Prop5.5", prop_5_5),
        ("Cor7.6", cor_7_6),
        ("CSL-diagonal", diagonal),
    ]
    return [_report(tid, digest, fn) for tid, fn in checks]


def random_csl_input(rng: np.random.Generator, max_universe: int = 8, max_generators: int = 4) -> CslInput:
    n = int(rng.integers(1, max_universe + 1))
    k = int(rng.integers(0, max_generators + 1))
    gens = tuple(IndexSet.of(n, np.flatnonzero(rng.random(n) < 0.5).tolist()) for _ in range(k))
    return CslInput(n, gens)
