"""Executable checks of the decomposition identities on concrete patterns.

Every verifier returns :class:`VerifierReport` values; a failing check is
data, never an exception.  Combinatorial checks are exact set comparisons,
numeric ones use seeded random complex matrices supported on the pattern.

Randomness: all generators are ``numpy.random.default_rng`` (PCG64) seeded
with a :class:`numpy.random.SeedSequence` built from ``[seed, instance]``,
so instance ``k`` of a fuzz run is reproducible on its own.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from masabimod import matrix_engine as me
from masabimod.errors import InputError
from masabimod.pattern_core import (
    IndexSet,
    Partition,
    Pattern,
    _context,
    analyze,
    bicommutant_projections,
    bits_of,
    compose,
    diagonal_summary,
    map_phi,
    ref_check,
    semilattices,
    tro_block_decomposition,
    tro_check,
    tro_ideal_split,
)

DEFAULT_TRIALS = 5
MAX_IDEAL_SUBSETS = 256


@dataclass(frozen=True)
class VerifierReport:
    theorem_id: str
    instance_digest: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.theorem_id} [{self.instance_digest}] {self.detail}"


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 42
    instance_count: int = 100
    max_rows: int = 8
    max_cols: int = 8
    density: float = 0.3
    numeric_trials_per_instance: int = DEFAULT_TRIALS

    def __post_init__(self):
        if self.instance_count < 0:
            raise InputError("instance_count must be nonnegative")
        if self.max_rows < 1 or self.max_cols < 1:
            raise InputError("max_rows and max_cols must be positive")
        if not 0.0 <= self.density <= 1.0:
            raise InputError(f"density {self.density} outside [0, 1]")
        if self.numeric_trials_per_instance < 0:
            raise InputError("numeric_trials_per_instance must be nonnegative")


@dataclass
class FuzzSummary:
    instances: int = 0
    reports: int = 0
    failures: list = field(default_factory=list)
    tallies: dict = field(default_factory=dict)  # theorem_id -> {"passed": n, "failed": n}

    def add(self, reports: list[VerifierReport], pattern: Pattern):
        self.reports += len(reports)
        for r in reports:
            t = self.tallies.setdefault(r.theorem_id, {"passed": 0, "failed": 0})
            if r.passed:
                t["passed"] += 1
            else:
                t["failed"] += 1
                self.failures.append(
                    {
                        "theorem_id": r.theorem_id,
                        "instance_digest": r.instance_digest,
                        "detail": r.detail,
                        "pattern": {
                            "rows": pattern.rows,
                            "cols": pattern.cols,
                            "entries": [list(e) for e in pattern.sorted_entries()],
                        },
                    }
                )

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "instances": self.instances,
            "reports": self.reports,
            "failures": self.failures,
            "tallies": {k: self.tallies[k] for k in sorted(self.tallies)},
        }


# --------------------------------------------------------------------------
# helpers


def _fmt(p: Pattern) -> str:
    return str(p.sorted_entries())


def _sub(a: Pattern, b: Pattern, what: str) -> list[str]:
    """Empty if ``a ⊆ b``, else one message naming the offending entries."""
    if a <= b:
        return []
    return [f"{what}: extra {sorted(a.entries - b.entries)}"]


def _eq(a: Pattern, b: Pattern, what: str) -> list[str]:
    if a == b:
        return []
    return [f"{what}: symmetric difference {sorted(a.entries ^ b.entries)}"]


def _report(theorem_id: str, digest: str, check: Callable[[], tuple[list[str], str]]) -> VerifierReport:
    try:
        problems, ok_detail = check()
    except Exception as exc:  # a crash inside a verifier is a failed check
        return VerifierReport(theorem_id, digest, False, f"{type(exc).__name__}: {exc}")
    if problems:
        return VerifierReport(theorem_id, digest, False, "; ".join(problems))
    return VerifierReport(theorem_id, digest, True, ok_detail)


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(np.random.SeedSequence(seed))


def _close(a, b, tol: float = me.SUPPORT_TOL) -> bool:
    return a.shape == b.shape and (a.size == 0 or float(np.max(np.abs(a - b))) <= tol)


def _sets(xs) -> str:
    return str([s.sorted() for s in xs])


# --------------------------------------------------------------------------
# bimodule verifiers


def verify_all(p: Pattern, numeric_trials: int = DEFAULT_TRIALS, rng_seed=0) -> list[VerifierReport]:
    """Run one check per decomposition identity on ``p``; see module docstring."""
    digest = p.digest()
    rng = _rng(rng_seed)
    trials = [me.random_matrix_on(p, rng) for _ in range(numeric_trials)]
    perm_seed = int(rng.integers(2**63))

    try:
        an = analyze(p)
    except Exception as exc:
        return [VerifierReport("analyze", digest, False, f"{type(exc).__name__}: {exc}")]

    delta, u0 = an.delta, an.u0
    delta_t = delta.transpose()
    a1p, a2p = an.a1.pattern(), an.a2.pattern()
    chi, chi_star = an.chi_i, an.chi_star_i

    def thm_3_1():
        probs = _eq(u0 | delta, p, "u0 ∪ Δ vs U") + _sub(delta, p, "Δ ⊆ U") + _sub(u0, p, "U0 ⊆ U")
        return probs, f"|U|={len(p)} = |U0|={len(u0)} + |Δ|={len(delta)} (as union)"

    def thm_3_3():
        q1, q2 = tro_ideal_split(delta, u0 & delta)
        probs = []
        if q1.members or q2.members:
            probs.append(f"Q1={q1.sorted()}, Q2={q2.sorted()} nonempty")
        return probs, "U0 ∩ Δ is the zero ideal: Q1 = Q2 = ∅"

    def rem_3_4():
        probs = []
        for k, t in enumerate(trials):
            iterates, final = me.u_iteration(p, t)
            norms = [me.operator_norm(t)] + [me.operator_norm(x) for x in iterates]
            for n in range(1, len(norms)):
                if norms[n] > norms[n - 1] + me.NORM_TOL:
                    probs.append(f"trial {k}: ‖U_{n}‖={norms[n]:.3e} > ‖U_{n - 1}‖={norms[n - 1]:.3e}")
                    break
            d = me.block_projector_d(p, t)
            if me.operator_norm(d) > norms[0] + me.NORM_TOL:
                probs.append(f"trial {k}: ‖D(T)‖ > ‖T‖")
            if not _close(me.block_projector_d(p, d), d):
                probs.append(f"trial {k}: D not idempotent")
        return probs, f"{len(trials)} trials, {me.s1_size(p)} compressions each"

    def lem_3_5():
        probs = []
        probs += _sub(compose(a2p, delta, a1p), delta, "A2 Δ A1 ⊆ Δ")
        probs += _sub(compose(delta_t, a2p, delta), a1p, "Δ* A2 Δ ⊆ A1")
        probs += _sub(compose(delta, a1p, delta_t), a2p, "Δ A1 Δ* ⊆ A2")
        probs += _eq(compose(an.n2, p, an.n1), p, "N2 U N1 = U")
        probs += _eq(compose(an.n2, u0, an.n1), u0, "N2 U0 N1 = U0")
        probs += _sub(compose(p, an.l1), u0, "U L1 ⊆ U0")
        probs += _sub(compose(an.l2, p), u0, "L2 U ⊆ U0")
        probs += _sub(compose(delta_t, p), an.n1, "Δ* U ⊆ N1")
        probs += _sub(compose(p, delta_t), an.n2, "U Δ* ⊆ N2")
        probs += _sub(compose(delta_t, u0), an.l1, "Δ* U0 ⊆ L1")
        probs += _sub(compose(u0, delta_t), an.l2, "U0 Δ* ⊆ L2")
        probs += _sub(compose(u0, delta_t, delta), u0, "U0 Δ* Δ ⊆ U0")
        probs += _sub(compose(delta, delta_t, u0), u0, "Δ Δ* U0 ⊆ U0")
        return probs, "13 module inclusions hold"

    def prop_3_6_3_7():
        l1a1, l2a2 = an.l1 & a1p, an.l2 & a2p
        i = u0 == p
        ii = compose(delta_t, delta) <= l1a1
        iii = compose(delta, delta_t) <= l2a2
        probs = []
        if not (i == ii == iii):
            probs.append(f"3.6 equivalence broken: U=U0 {i}, Δ*Δ⊆L1∩A1 {ii}, ΔΔ*⊆L2∩A2 {iii}")
        if len(compose(delta, l1a1)):
            probs.append(f"3.7: Δ(L1∩A1) = {_fmt(compose(delta, l1a1))}")
        if len(compose(l2a2, delta)):
            probs.append(f"3.7: (L2∩A2)Δ = {_fmt(compose(l2a2, delta))}")
        return probs, f"U=U0 is {i} on all three sides; Δ(L1∩A1) = (L2∩A2)Δ = 0"

    def thm_4_1():
        v = me.construct_partial_isometry(p)
        probs = []
        if not np.array_equal(v @ v.conj().T @ v, v):
            probs.append("V V* V != V")
        outside = me.support_violations(delta, v)
        if outside:
            probs.append(f"V not in Δ at {outside}")
        dim = me.span_dimension_generated(v, an.a1, an.a2)
        if dim != len(delta):
            probs.append(f"dim span(A2 V A1) = {dim} != |Δ| = {len(delta)}")
        # B_i = span of Δ*Δ / ΔΔ*: full matrix algebras over the block column / row sets
        b1 = _block_partition(p.cols, [f for _, f in an.blocks])
        b2 = _block_partition(p.rows, [e for e, _ in an.blocks])
        dim_b = me.span_dimension_generated(v, b1, b2)
        if dim_b != len(delta):
            probs.append(f"dim span(B2 V B1) = {dim_b} != |Δ| = {len(delta)}")
        return probs, f"V V*V = V, span dims = |Δ| = {len(delta)}"

    def thm_4_3():
        s1, s2 = an.s1, an.s2
        d1, d2 = semilattices(delta)
        chi_c = chi_star.complement()
        want2 = {IndexSet(p.rows, chi.members & x.members) for x in bicommutant_projections(s2)}
        want1 = {
            IndexSet(p.cols, chi_c.members | (chi_star.members & x.members))
            for x in bicommutant_projections(s1)
        }
        probs = []
        if set(d2.sets) != want2:
            probs.append(f"S2(Δ) {_sets(d2)} != χ(I)P(S2'') {_sets(sorted(want2, key=IndexSet.sort_key))}")
        if set(d1.sets) != want1:
            probs.append(f"S1(Δ) {_sets(d1)} != formula {_sets(sorted(want1, key=IndexSet.sort_key))}")
        for q in s1:
            lhs = map_phi(delta, IndexSet(p.cols, chi_c.members | (chi_star.members & q.members)))
            rhs = IndexSet(p.rows, chi.members & map_phi(p, q).members)
            if lhs != rhs:
                probs.append(f"χ-formula fails at Q={q.sorted()}: {lhs.sorted()} != {rhs.sorted()}")
        return probs, f"|S1(Δ)|={len(d1)}, |S2(Δ)|={len(d2)}; χ-formula holds on all {len(s1)} Q"

    def prop_4_5():
        chi_m, chi_star_m = chi.mask, chi_star.mask
        ctx = _context(p)
        theta: dict[int, int] = {}
        probs = []
        for pm, fm in zip(ctx.s1, ctx.phi_s1):
            k, v = chi_star_m & pm, chi_m & fm
            if theta.setdefault(k, v) != v:
                probs.append(f"ϑ ill-defined at {bits_of(k)}")
        if len(set(theta.values())) != len(theta):
            probs.append("ϑ not injective")
        dom, cod = set(theta), set(theta.values())
        for a, b in itertools.combinations_with_replacement(sorted(dom), 2):
            for op, name in ((int.__and__, "meet"), (int.__or__, "join")):
                c = op(a, b)
                if c not in dom:
                    probs.append(f"domain not closed under {name}: {bits_of(a)}, {bits_of(b)}")
                elif theta[c] != op(theta[a], theta[b]):
                    probs.append(f"ϑ does not preserve {name} at {bits_of(a)}, {bits_of(b)}")
            if len(probs) > 5:
                break
        for a, b in itertools.combinations(sorted(cod), 2):
            if a & b not in cod or a | b not in cod:
                probs.append(f"codomain not a lattice at {bits_of(a)}, {bits_of(b)}")
                break
        return probs, f"ϑ is a lattice isomorphism on {len(dom)} elements"

    def thm_5_2():
        probs = []
        if not ref_check(u0):
            probs.append("U0 != Ref(U0)")
        if not ref_check(p):
            probs.append("U != Ref(U)")
        essential = len(chi) == p.rows and len(chi_star) == p.cols
        if essential:
            ps1, ps2 = semilattices(u0)
            if not set(ps1.sets) <= set(an.s1.sets):
                probs.append("Δ essential but S1(ψ) ⊄ S1(φ)")
            if not set(ps2.sets) <= set(an.s2.sets):
                probs.append("Δ essential but S2(ψ) ⊄ S2(φ)")
        return probs, "U0 and U reflexive" + ("; ψ-semilattices inside φ-semilattices" if essential else "")

    def prop_6_6():
        probs = []
        cells1 = {c for c in an.a1.cells}
        for a in an.atoms:
            # minimal nonzero members of P(S1'') are exactly the cells
            if a.f not in cells1:
                probs.append(f"atom {a.f.sorted()} is not a minimal projection of S1''")
            e = chi.members & a.delta_f.members
            if e and not any(e == (chi.members & c.members) for c in an.a2.cells):
                probs.append(f"χ(I)δ(F)={sorted(e)} is not minimal in χ(I)S2''")
            blk = Pattern(p.rows, p.cols, frozenset((i, j) for i in e for j in a.f.members))
            probs += _sub(blk, delta, f"χ(I)δ(F)×F ⊆ Δ for F={a.f.sorted()}")
            off = a.delta_f.members - chi.members
            blk0 = Pattern(p.rows, p.cols, frozenset((i, j) for i in off for j in a.f.members))
            probs += _sub(blk0, u0, f"χ(I)^⊥δ(F)×F ⊆ U0 for F={a.f.sorted()}")
        return probs, f"{len(an.atoms)} atoms, each minimal"

    def thm_6_8():
        summary = diagonal_summary(p)
        probs = _eq(summary.block_pattern(), delta, "⊕ blocks vs Δ")
        return probs, f"{len(summary.blocks)} disjoint blocks {[(e.sorted(), f.sorted()) for e, f in summary.blocks]}"

    def thm_6_13():
        probs = []
        prng = np.random.default_rng(perm_seed)
        m_s1 = me.s1_size(p)
        for k, t in enumerate(trials):
            res = me.decompose(p, t)
            scale = max(1.0, float(np.max(np.abs(t)))) if t.size else 1.0
            if res.residual > me.SUPPORT_TOL * scale:
                probs.append(f"trial {k}: residual {res.residual:.2e}")
            if me.support_violations(delta, res.l):
                probs.append(f"trial {k}: K2 leaves Δ")
            if me.support_violations(u0, res.m):
                probs.append(f"trial {k}: K1 leaves U0")
            _, final = me.u_iteration(p, t)
            if not _close(final, res.l):
                probs.append(f"trial {k}: lim U_n(K) != D(K)")
            _, final_perm = me.u_iteration(p, t, order=list(prng.permutation(m_s1)))
            if not np.array_equal(final_perm, final):
                probs.append(f"trial {k}: U_n limit depends on the order of S1")
            lt = me.decompose(p.transpose(), t.T).l
            if not _close(lt, res.l.T):
                probs.append(f"trial {k}: decomposition does not commute with transpose")
        for i, j in p.sorted_entries():
            r = np.zeros((p.rows, p.cols), dtype=complex)
            r[i, j] = 1.0
            res = me.decompose(p, r)
            if not (_close(res.l, r) and not res.m.any()) and not (_close(res.m, r) and not res.l.any()):
                probs.append(f"rank-one unit at {(i, j)} splits across the sum")
        if np.any(me.block_mask(p).entries != me.delta_mask(p).entries):
            probs.append("block mask != Δ mask")
        return probs, f"{len(trials)} trials: K = K1 + K2 with K2 = D(K) = lim U_n(K)"

    def cor_6_14():
        probs = []
        for k, t in enumerate(trials):
            r = me.numeric_rank(t)
            if me.numeric_rank(me.block_projector_d(p, t)) > r:
                probs.append(f"trial {k}: rank D(T) > rank T = {r}")
            iterates, _ = me.u_iteration(p, t)
            if any(me.numeric_rank(x) > r for x in iterates):
                probs.append(f"trial {k}: some rank U_n(T) > rank T")
        return probs, f"{len(trials)} trials, rank never increases"

    def cor_6_15():
        probs = []
        for k, t in enumerate(trials):
            d = me.block_projector_d(p, t)
            for q in (1, 2, 3):
                if me.schatten_norm(d, q) > me.schatten_norm(t, q) + me.RANK_TOL:
                    probs.append(f"trial {k}: ‖D(T)‖_{q} > ‖T‖_{q}")
        return probs, f"{len(trials)} trials, p in (1, 2, 3)"

    def prop_7_3():
        probs = _eq(me.annihilator_support(p, delta), u0, "U ∩ (R1(Δ)*)^0 vs U0")
        dim = me.annihilator_intersection(p, delta)
        if dim != len(u0):
            probs.append(f"annihilator dim {dim} != |U0| {len(u0)}")
        if me.annihilator_intersection(delta, delta) != 0:
            probs.append("Δ ∩ (R1(Δ)*)^0 != 0")
        return probs, f"trace-pairing null space has dim {dim} = |U0|"

    def thm_7_4():
        probs = []
        if len(u0 & delta):
            probs.append(f"U0 ∩ Δ = {_fmt(u0 & delta)}")
        if len(u0) + len(delta) != len(p):
            probs.append(f"|U0| + |Δ| = {len(u0) + len(delta)} != |U| = {len(p)}")
        return probs, f"U = U0 ⊕ Δ with dims {len(u0)} + {len(delta)}"

    def prop_7_7():
        probs = []
        basis_d = delta.sorted_entries()
        basis_0 = u0.sorted_entries()

        def units(es):
            out = np.zeros((p.rows * p.cols, len(es)), dtype=complex)
            for c, (i, j) in enumerate(es):
                out[i * p.cols + j, c] = 1.0
            return out

        a = np.hstack([units(basis_d), units(basis_0)])
        for k, t in enumerate(trials):
            if a.shape[1] == 0:
                theta = np.zeros_like(t)
            else:
                coef, *_ = np.linalg.lstsq(a, t.ravel(), rcond=None)
                theta = (units(basis_d) @ coef[: len(basis_d)]).reshape(t.shape)
            if not _close(theta, me.block_projector_d(p, t)):
                probs.append(f"trial {k}: θ(T) != D(T)")
        return probs, f"{len(trials)} trials: direct-sum projection = D on U"

    def prop_7_8():
        in_block = Pattern(
            p.rows,
            p.cols,
            frozenset(
                (i, j) for i, j in p.entries if not any(i in e and j in f for e, f in an.blocks)
            ),
        )
        return _eq(in_block, u0, "U0 vs entries outside every block"), "U0 = {T: χ(I)δ(F)TF = 0 for all atoms}"

    checks = [
        ("Thm3.1", thm_3_1),
        ("Thm3.3", thm_3_3),
        ("Rem3.4", rem_3_4),
        ("Lem3.5", lem_3_5),
        ("Prop3.6", prop_3_6_3_7),
        ("Thm4.1", thm_4_1),
        ("Thm4.3", thm_4_3),
        ("Prop4.5", prop_4_5),
        ("Thm5.2", thm_5_2),
        ("Prop6.6", prop_6_6),
        ("Thm6.8", thm_6_8),
        ("Thm6.13", thm_6_13),
        ("Cor6.14", cor_6_14),
        ("Cor6.15", cor_6_15),
        ("Prop7.3", prop_7_3),
        ("Thm7.4", thm_7_4),
        ("Prop7.7", prop_7_7),
        ("Prop7.8", prop_7_8),
    ]
    return [_report(tid, digest, fn) for tid, fn in checks]


def _block_partition(universe: int, groups) -> Partition:
    covered = set()
    cells = []
    for g in groups:
        cells.append(g)
        covered |= g.members
    cells += [IndexSet.of(universe, [k]) for k in range(universe) if k not in covered]
    return Partition(universe, tuple(cells))


# --------------------------------------------------------------------------
# TRO verifiers


def verify_tro_theorems(m: Pattern, rng_seed=0) -> list[VerifierReport]:
    """Atomic decomposition, ideal splitting and the block projection for a TRO pattern."""
    if not tro_check(m):
        raise InputError("verify_tro_theorems needs a TRO pattern")
    digest = m.digest()
    rng = _rng(rng_seed)
    t = me.random_matrix_on(m, rng)
    blocks = tro_block_decomposition(m)

    def thm_2_2():
        dim = me.annihilator_intersection(m, m)
        probs = [] if dim == 0 else [f"M ∩ (R1(M)*)^0 has dim {dim}"]
        return probs, "nonatomic summand is zero"

    def cor_6_9():
        rebuilt = Pattern(
            m.rows, m.cols, frozenset((i, j) for e, f in blocks for i in e.members for j in f.members)
        )
        probs = _eq(rebuilt, m, "⊕ rectangles vs M")
        atomic = sorted(
            ((e.sorted(), f.sorted()) for e, f in diagonal_summary(m).blocks),
        )
        if atomic != sorted((e.sorted(), f.sorted()) for e, f in blocks):
            probs.append(f"atom blocks {atomic} differ from components")
        return probs, f"{len(blocks)} rectangles"

    subsets = _block_subsets(len(blocks), rng)

    def rem_2_1():
        probs = []
        for chosen in subsets:
            sel = [blocks[k] for k in chosen]
            m0 = Pattern(
                m.rows, m.cols, frozenset((i, j) for e, f in sel for i in e.members for j in f.members)
            )
            q1, q2 = tro_ideal_split(m, m0)
            want1 = set().union(*(f.members for _, f in sel)) if sel else set()
            want2 = set().union(*(e.members for e, _ in sel)) if sel else set()
            if q1.members != want1 or q2.members != want2:
                probs.append(f"ideal {chosen}: Q1={q1.sorted()}, Q2={q2.sorted()}")
                continue
            mq1 = t * np.isin(np.arange(m.cols), q1.sorted())[None, :]
            q2m = t * np.isin(np.arange(m.rows), q2.sorted())[:, None]
            if not _close(mq1, q2m) or me.support_violations(m0, mq1):
                probs.append(f"ideal {chosen}: T Q1 != Q2 T")
        return probs, f"{len(subsets)} block sub-ideals round-trip"

    def prop_2_3():
        probs = []
        for chosen in subsets:
            sel = [blocks[k] for k in chosen]
            m0 = Pattern(
                m.rows, m.cols, frozenset((i, j) for e, f in sel for i in e.members for j in f.members)
            )
            t0 = np.where(m0.to_array(), t, 0)
            theta = np.zeros_like(t0)
            for e, f in sel:
                r, c = np.ix_(e.sorted(), f.sorted())
                theta[r, c] += t0[r, c]
            if not _close(theta, t0):
                probs.append(f"ideal {chosen}: Σ E_n T F_n != T")
        d = me.block_projector_d(m, t)
        if not _close(d, t):
            probs.append("D(T) != T on M")
        return probs, f"θ(T) = Σ E_n T F_n on {len(subsets)} ideals"

    checks = [("Thm2.2", thm_2_2), ("Cor6.9", cor_6_9), ("Rem2.1", rem_2_1), ("Prop2.3", prop_2_3)]
    return [_report(tid, digest, fn) for tid, fn in checks]


def _block_subsets(k: int, rng: np.random.Generator) -> list[tuple[int, ...]]:
    if 2**k <= MAX_IDEAL_SUBSETS:
        return [c for r in range(k + 1) for c in itertools.combinations(range(k), r)]
    out = {(), tuple(range(k))}
    while len(out) < MAX_IDEAL_SUBSETS:
        out.add(tuple(sorted(np.flatnonzero(rng.random(k) < 0.5).tolist())))
    return sorted(out)


# --------------------------------------------------------------------------
# random instances


def random_pattern(rng: np.random.Generator, rows: int, cols: int, density: float) -> Pattern:
    return Pattern.from_array(rng.random((rows, cols)) < density)


def random_tro(rng: np.random.Generator, rows: int, cols: int, max_blocks: int = 4) -> Pattern:
    """Disjoint union of between 1 and ``max_blocks`` full rectangles."""
    k = int(rng.integers(1, min(max_blocks, rows, cols) + 1))

    def labels(n):
        lab = rng.integers(-1, k, size=n)
        perm = rng.permutation(n)
        lab[perm[:k]] = np.arange(k)
        return lab

    rl, cl = labels(rows), labels(cols)
    return Pattern.from_array((rl[:, None] == cl[None, :]) & (rl[:, None] >= 0))


def instance_rng(seed: int, index: int, stream: int = 0) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, index, stream]))


def fuzz(config: FuzzConfig, include_tro: bool = True) -> FuzzSummary:
    """Run the verifiers on ``config.instance_count`` seeded random patterns (and TROs)."""
    summary = FuzzSummary()
    for k in range(config.instance_count):
        rng = instance_rng(config.seed, k)
        rows = int(rng.integers(1, config.max_rows + 1))
        cols = int(rng.integers(1, config.max_cols + 1))
        p = random_pattern(rng, rows, cols, config.density)
        summary.add(verify_all(p, config.numeric_trials_per_instance, rng), p)
        if include_tro:
            m = random_tro(rng, rows, cols)
            summary.add(verify_tro_theorems(m, rng), m)
        summary.instances += 1
    return summary


def tally(reports: list[VerifierReport]) -> Counter:
    return Counter(r.theorem_id for r in reports if not r.passed)
