"""JSON documents: pattern and lattice inputs, analysis reports.

Index sets serialize as sorted lists, patterns as sorted ``[row, col]`` lists.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from masabimod.csl_algebra import CslAnalysis, CslInput
from masabimod.errors import InputError
from masabimod.pattern_core import (
    JOIN_WITH_ZERO,
    MEET_WITH_IDENTITY,
    Atom,
    BimoduleAnalysis,
    IndexSet,
    Partition,
    Pattern,
    ProjectionFamily,
)


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _int(doc: dict, key: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise InputError(f"{key!r} must be a nonnegative integer")
    return v


def is_csl_document(doc: Any) -> bool:
    return isinstance(doc, dict) and "universe" in doc


def pattern_from_document(doc: Any) -> Pattern:
    """Parse ``{"rows", "cols", "entries"}`` or ``{"grid": [...]}``."""
    if not isinstance(doc, dict):
        raise InputError("pattern document must be a JSON object")
    has_entries, has_grid = "entries" in doc, "grid" in doc
    if has_entries == has_grid:
        raise InputError("pattern document needs exactly one of 'entries' or 'grid'")
    if has_grid:
        grid = doc["grid"]
        if not isinstance(grid, list) or not all(isinstance(g, str) for g in grid):
            raise InputError("'grid' must be a list of strings")
        p = Pattern.from_grid(grid)
        if not grid and ("rows" in doc or "cols" in doc):
            p = Pattern.empty(_int(doc, "rows"), _int(doc, "cols"))
        for key, val in (("rows", p.rows), ("cols", p.cols)):
            if key in doc and _int(doc, key) != val:
                raise InputError(f"{key!r}={doc[key]} disagrees with grid ({val})")
        return p
    rows, cols = _int(doc, "rows"), _int(doc, "cols")
    entries = doc["entries"]
    if not isinstance(entries, list):
        raise InputError("'entries' must be a list of [row, col] pairs")
    pairs = []
    for e in entries:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise InputError(f"bad entry {e!r}; expected [row, col]")
        pairs.append(tuple(e))
    return Pattern.of(rows, cols, pairs)


def pattern_to_document(p: Pattern) -> dict:
    return {"rows": p.rows, "cols": p.cols, "entries": [list(e) for e in p.sorted_entries()]}


def csl_from_document(doc: Any) -> CslInput:
    if not isinstance(doc, dict):
        raise InputError("lattice document must be a JSON object")
    n = _int(doc, "universe")
    gens = doc.get("generators", [])
    if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
        raise InputError("'generators' must be a list of index lists")
    for g in gens:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in g):
            raise InputError(f"generator {g!r} must contain integers")
    return CslInput(n, tuple(IndexSet.of(n, g) for g in gens))


# --------------------------------------------------------------------------
# reports


def _sets(family) -> list[list[int]]:
    return [s.sorted() for s in family]


def _entries(p: Pattern) -> list[list[int]]:
    return [list(e) for e in p.sorted_entries()]


def analysis_to_dict(an: BimoduleAnalysis) -> dict:
    return {
        "pattern": pattern_to_document(an.pattern),
        "s1": _sets(an.s1),
        "s2": _sets(an.s2),
        "delta": _entries(an.delta),
        "u0": _entries(an.u0),
        "atoms": [
            {
                "f": a.f.sorted(),
                "delta_f": a.delta_f.sorted(),
                "generator_p": a.generator_p.sorted(),
                "generator_p0": a.generator_p0.sorted(),
                "witnesses": [[w[0].sorted(), w[1].sorted()] for w in a.witnesses],
            }
            for a in an.atoms
        ],
        "blocks": [{"rows": e.sorted(), "cols": f.sorted()} for e, f in an.blocks],
        "chi_i": an.chi_i.sorted(),
        "chi_star_i": an.chi_star_i.sorted(),
        "n1": _entries(an.n1),
        "n2": _entries(an.n2),
        "l1": _entries(an.l1),
        "l2": _entries(an.l2),
        "a1": _sets(an.a1.cells),
        "a2": _sets(an.a2.cells),
        "psi_note": an.psi_note,
    }


def analysis_from_dict(d: dict) -> BimoduleAnalysis:
    p = pattern_from_document(d["pattern"])
    m, n = p.rows, p.cols

    def pat(key, r, c):
        return Pattern.of(r, c, [tuple(e) for e in d[key]])

    def fam(key, universe, kind):
        return ProjectionFamily(universe, tuple(IndexSet.of(universe, s) for s in d[key]), kind)

    atoms = tuple(
        Atom(
            f=IndexSet.of(n, a["f"]),
            delta_f=IndexSet.of(m, a["delta_f"]),
            generator_p=IndexSet.of(n, a["generator_p"]),
            generator_p0=IndexSet.of(n, a["generator_p0"]),
            witnesses=tuple((IndexSet.of(n, x), IndexSet.of(n, y)) for x, y in a["witnesses"]),
        )
        for a in d["atoms"]
    )
    return BimoduleAnalysis(
        pattern=p,
        s1=fam("s1", n, MEET_WITH_IDENTITY),
        s2=fam("s2", m, JOIN_WITH_ZERO),
        delta=pat("delta", m, n),
        u0=pat("u0", m, n),
        atoms=atoms,
        blocks=tuple((IndexSet.of(m, b["rows"]), IndexSet.of(n, b["cols"])) for b in d["blocks"]),
        chi_i=IndexSet.of(m, d["chi_i"]),
        chi_star_i=IndexSet.of(n, d["chi_star_i"]),
        n1=pat("n1", n, n),
        n2=pat("n2", m, m),
        l1=pat("l1", n, n),
        l2=pat("l2", m, m),
        a1=Partition(n, tuple(IndexSet.of(n, c) for c in d["a1"])),
        a2=Partition(m, tuple(IndexSet.of(m, c) for c in d["a2"])),
        psi_note=d.get("psi_note", BimoduleAnalysis.psi_note),
    )


def csl_analysis_to_dict(an: CslAnalysis) -> dict:
    return {
        "universe": an.input.universe,
        "generators": _sets(an.input.generators),
        "lattice": _sets(an.lattice),
        "alg": _entries(an.alg),
        "j": _entries(an.j),
        "rad": _entries(an.rad),
        "q": an.q.sorted(),
        "commutant": _sets(an.commutant.cells),
        "atoms_of_s": _sets(an.atoms_of_s),
    }


def report_to_dict(r) -> dict:
    return {
        "theorem_id": r.theorem_id,
        "instance_digest": r.instance_digest,
        "passed": r.passed,
        "detail": r.detail,
    }


def analysis_text(an: BimoduleAnalysis) -> str:
    p = an.pattern
    lines = [
        f"pattern {p.rows}x{p.cols}, {len(p)} entries",
        f"S1 ({len(an.s1)}): {_sets(an.s1)}",
        f"S2 ({len(an.s2)}): {_sets(an.s2)}",
        f"diagonal ({len(an.delta)}): {an.delta.sorted_entries()}",
        f"U0 ({len(an.u0)}): {an.u0.sorted_entries()}",
        f"chi(I) = {an.chi_i.sorted()}, chi*(I) = {an.chi_star_i.sorted()}",
        "atoms:",
    ]
    lines += [f"  F={a.f.sorted()}  delta(F)={a.delta_f.sorted()}" for a in an.atoms] or ["  (none)"]
    lines.append("blocks:")
    lines += [f"  rows {e.sorted()} x cols {f.sorted()}" for e, f in an.blocks] or ["  (none)"]
    lines += [
        f"N1: {an.n1.sorted_entries()}",
        f"L1: {an.l1.sorted_entries()}",
        f"N2: {an.n2.sorted_entries()}",
        f"L2: {an.l2.sorted_entries()}",
        f"A1 cells: {_sets(an.a1.cells)}",
        f"A2 cells: {_sets(an.a2.cells)}",
    ]
    return "\n".join(lines)


def csl_text(an: CslAnalysis) -> str:
    return "\n".join(
        [
            f"universe {an.input.universe}, generators {_sets(an.input.generators)}",
            f"lattice ({len(an.lattice)}): {_sets(an.lattice)}",
            f"Alg(S): {an.alg.sorted_entries()}",
            f"J: {an.j.sorted_entries()}",
            f"Rad: {an.rad.sorted_entries()}",
            f"Q: {an.q.sorted()}",
            f"commutant cells: {_sets(an.commutant.cells)}",
        ]
    )
