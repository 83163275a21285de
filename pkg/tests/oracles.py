"""Brute-force reference implementations, written against the definitions only.

Nothing here touches the bitmask machinery of the package: sets are plain
Python frozensets and every family is obtained by exhaustive enumeration.
"""

from itertools import chain, combinations

import numpy as np
import scipy.linalg


def subsets(n):
    return (frozenset(c) for c in chain.from_iterable(combinations(range(n), k) for k in range(n + 1)))


def phi(entries, cols):
    return frozenset(i for i, j in entries if j in cols)


def phi_star(entries, rows):
    return frozenset(j for i, j in entries if i in rows)


def s1_s2(rows, cols, entries):
    """S2 = all phi-images; S1 = complements of all phi*-images."""
    s2 = {phi(entries, c) for c in subsets(cols)}
    full = frozenset(range(cols))
    s1 = {full - phi_star(entries, r) for r in subsets(rows)}
    return s1, s2


def delta_numeric(rows, cols, entries):
    """Support of {T in U : T P = phi(P) T for all P in S1} via a null space."""
    s1, _ = s1_s2(rows, cols, entries)
    ents = sorted(entries)
    if not ents:
        return frozenset()
    cons = []
    for pset in s1:
        dp = np.diag([1.0 if j in pset else 0.0 for j in range(cols)])
        dq = np.diag([1.0 if i in phi(entries, pset) else 0.0 for i in range(rows)])
        block = []
        for i, j in ents:
            t = np.zeros((rows, cols))
            t[i, j] = 1.0
            block.append((t @ dp - dq @ t).ravel())
        cons.append(np.array(block).T)
    ns = scipy.linalg.null_space(np.vstack(cons))
    support = np.any(np.abs(ns) > 1e-9, axis=1)
    return frozenset(e for e, s in zip(ents, support) if s)


def u0_span(rows, cols, entries):
    """Support and dimension of span{phi(P) T P^c : T in U, P in S1}."""
    s1, _ = s1_s2(rows, cols, entries)
    vecs = []
    for pset in s1:
        fp = phi(entries, pset)
        for i, j in entries:
            if i in fp and j not in pset:
                t = np.zeros((rows, cols))
                t[i, j] = 1.0
                vecs.append(t.ravel())
    if not vecs:
        return frozenset(), 0
    a = np.array(vecs)
    support = {divmod(int(k), cols) for k in np.flatnonzero(np.any(a != 0, axis=0))}
    return frozenset(support), int(np.linalg.matrix_rank(a))


def atoms(rows, cols, entries):
    """Set of (F, delta(F)) straight from the definition of an atom."""
    s1, _ = s1_s2(rows, cols, entries)
    out = set()
    for pset in s1:
        fp = phi(entries, pset)
        below = frozenset().union(*[phi(entries, l) for l in s1 if phi(entries, l) < fp])
        if below == fp:
            continue
        (p0,) = [l for l in s1 if phi(entries, l) == below]
        out.add((pset - p0, fp - below))
    return out


def is_tro(entries):
    """M M^T M within M, as a triple loop over entries."""
    for i, j in entries:
        for k, j2 in entries:
            if j2 != j:
                continue
            for k2, l in entries:
                if k2 == k and (i, l) not in entries:
                    return False
    return True


def csl(n, gens):
    """Lattice by repeated closure; Alg by the definition; radical by strictness."""
    lat = {frozenset(), frozenset(range(n))} | {frozenset(g) for g in gens}
    while True:
        new = {a | b for a in lat for b in lat} | {a & b for a in lat for b in lat}
        if new <= lat:
            break
        lat |= new
    alg = {(i, j) for i in range(n) for j in range(n) if all(i in s for s in lat if j in s)}
    rad = {(i, j) for i, j in alg if (j, i) not in alg}
    return lat, alg, rad
