import dataclasses

import pytest

from masabimod import Pattern, analyze
from masabimod import theorem_suite as ts
from masabimod.errors import InputError

CANONICAL = {
    "nest2": ["11", "01"],
    "nest3": ["111", "011", "001"],
    "zero_diag": ["011", "101", "110"],
    "full": ["111", "111"],
    "tro": ["1100", "1100", "0011"],
    "ragged": ["1010", "0110", "0001"],
}

IDS = [
    "Thm3.1", "Thm3.3", "Rem3.4", "Lem3.5", "Prop3.6", "Thm4.1", "Thm4.3", "Prop4.5", "Thm5.2",
    "Prop6.6", "Thm6.8", "Thm6.13", "Cor6.14", "Cor6.15", "Prop7.3", "Thm7.4", "Prop7.7", "Prop7.8",
]


@pytest.mark.parametrize("name", sorted(CANONICAL))
def test_canonical_patterns_pass(name):
    p = Pattern.from_grid(CANONICAL[name])
    reports = ts.verify_all(p)
    assert [r.theorem_id for r in reports] == IDS
    assert all(r.passed for r in reports), [r.line() for r in reports if not r.passed]


def test_tro_verifiers():
    m = Pattern.from_grid(CANONICAL["tro"])
    reports = ts.verify_tro_theorems(m)
    assert [r.theorem_id for r in reports] == ["Thm2.2", "Cor6.9", "Rem2.1", "Prop2.3"]
    assert all(r.passed for r in reports)
    with pytest.raises(InputError):
        ts.verify_tro_theorems(Pattern.from_grid(CANONICAL["nest2"]))


def test_reports_are_deterministic():
    p = Pattern.from_grid(CANONICAL["ragged"])
    assert ts.verify_all(p, rng_seed=5) == ts.verify_all(p, rng_seed=5)


def test_broken_u0_is_caught(monkeypatch):
    real = analyze

    def broken(p):
        an = real(p)
        # drop one entry of U0: the union identity and the atom characterisation must notice
        u0 = Pattern(p.rows, p.cols, frozenset(an.u0.sorted_entries()[1:]))
        return dataclasses.replace(an, u0=u0)

    monkeypatch.setattr(ts, "analyze", broken)
    reports = {r.theorem_id: r for r in ts.verify_all(Pattern.from_grid(CANONICAL["zero_diag"]))}
    assert not reports["Thm3.1"].passed
    assert not reports["Prop7.8"].passed
    assert not reports["Prop7.3"].passed


def test_broken_delta_is_caught(monkeypatch):
    real = analyze

    def broken(p):
        an = real(p)
        return dataclasses.replace(an, delta=an.delta | an.u0)

    monkeypatch.setattr(ts, "analyze", broken)
    reports = ts.verify_all(Pattern.from_grid(CANONICAL["nest3"]))
    failed = {r.theorem_id for r in reports if not r.passed}
    assert {"Thm7.4", "Thm3.3"} <= failed


def test_crash_becomes_failed_report(monkeypatch):
    def boom(p):
        raise RuntimeError("kaput")

    monkeypatch.setattr(ts, "analyze", boom)
    (r,) = ts.verify_all(Pattern.from_grid(CANONICAL["nest2"]))
    assert not r.passed and "kaput" in r.detail


def test_fuzz_config_validation():
    with pytest.raises(InputError):
        ts.FuzzConfig(density=1.5)
    with pytest.raises(InputError):
        ts.FuzzConfig(max_rows=0)
    with pytest.raises(InputError):
        ts.FuzzConfig(instance_count=-1)


def test_small_fuzz_run():
    summary = ts.fuzz(ts.FuzzConfig(seed=1, instance_count=15, max_rows=5, max_cols=5, density=0.4))
    assert summary.ok and summary.instances == 15
    assert summary.reports == 15 * (len(IDS) + 4)
    d = summary.to_dict()
    assert d["failures"] == [] and set(IDS) <= set(d["tallies"])


def test_instance_rng_is_reproducible():
    a = ts.random_pattern(ts.instance_rng(42, 3), 5, 5, 0.3)
    b = ts.random_pattern(ts.instance_rng(42, 3), 5, 5, 0.3)
    assert a == b
