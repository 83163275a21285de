"""Command-line interface.

    masabimod analyze --input nest.json [--format json|text]
    masabimod verify  --input nest.json
    masabimod verify  --random --seed 42 --count 100 --max-rows 6 --max-cols 6 --density 0.3
    masabimod csl     --input lattice.json
    masabimod random  --seed 7 --rows 4 --cols 4 --density 0.5 --out p.json

Exit codes: 0 success (all checks pass), 1 invariant violation or failed
check, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

import numpy as np

from masabimod.csl_algebra import csl_analyze, verify_csl_theorems
from masabimod.errors import InputError, InvariantViolation
from masabimod.pattern_core import Pattern, analyze, tro_check
from masabimod.serialize import (
    analysis_text,
    analysis_to_dict,
    csl_analysis_to_dict,
    csl_from_document,
    csl_text,
    is_csl_document,
    load_json,
    pattern_from_document,
    pattern_to_document,
    report_to_dict,
)
from masabimod.theorem_suite import FuzzConfig, fuzz, verify_all, verify_tro_theorems

log = logging.getLogger("masabimod")

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _emit(payload: dict, text: str, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(text + "\n")


def _input_path(args) -> str:
    path = args.input or args.path
    if not path:
        raise InputError("an input file is required (--input PATH)")
    return path


def cmd_analyze(args) -> int:
    t0 = time.perf_counter()
    doc = load_json(_input_path(args))
    p = pattern_from_document(doc)
    an = analyze(p)
    report = {"input_digest": p.digest(), "analysis": analysis_to_dict(an), "verifier_reports": []}
    if args.timings:
        report["timings"] = {"analyze_s": time.perf_counter() - t0}
    _emit(report, analysis_text(an), args.format)
    return EXIT_OK


def cmd_csl(args) -> int:
    t0 = time.perf_counter()
    inp = csl_from_document(load_json(_input_path(args)))
    an = csl_analyze(inp)
    report = {"input_digest": inp.digest(), "analysis": csl_analysis_to_dict(an), "verifier_reports": []}
    if args.timings:
        report["timings"] = {"analyze_s": time.perf_counter() - t0}
    _emit(report, csl_text(an), args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    if args.random:
        cfg = FuzzConfig(
            seed=args.seed,
            instance_count=args.count,
            max_rows=args.max_rows,
            max_cols=args.max_cols,
            density=args.density,
            numeric_trials_per_instance=args.trials,
        )
        summary = fuzz(cfg)
        payload = {"config": vars(cfg), **summary.to_dict()}
        if args.timings:
            payload["timings"] = {"verify_s": time.perf_counter() - t0}
        text = [f"instances {summary.instances}, reports {summary.reports}, failures {len(summary.failures)}"]
        for tid, t in payload["tallies"].items():
            text.append(f"  {tid}: {t['passed']} passed, {t['failed']} failed")
        text += [f"FAIL {f['theorem_id']} {f['instance_digest']} {f['detail']}" for f in summary.failures]
        _emit(payload, "\n".join(text), args.format)
        return EXIT_OK if summary.ok else EXIT_FAIL

    doc = load_json(_input_path(args))
    if is_csl_document(doc):
        inp = csl_from_document(doc)
        digest = inp.digest()
        csl_reports = verify_csl_theorems(inp)
        p = csl_analyze(inp).alg
    else:
        p = pattern_from_document(doc)
        digest = p.digest()
        csl_reports = []
    reports = verify_all(p, args.trials, args.seed)
    if tro_check(p):
        reports += verify_tro_theorems(p, args.seed)
    reports += csl_reports
    payload = {"input_digest": digest, "verifier_reports": [report_to_dict(r) for r in reports]}
    if args.timings:
        payload["timings"] = {"verify_s": time.perf_counter() - t0}
    failed = sum(not r.passed for r in reports)
    text = "\n".join([r.line() for r in reports] + [f"{len(reports)} reports, {failed} failed"])
    _emit(payload, text, args.format)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_random(args) -> int:
    if args.rows < 0 or args.cols < 0:
        raise InputError("--rows and --cols must be nonnegative")
    if not 0.0 <= args.density <= 1.0:
        raise InputError(f"--density {args.density} outside [0, 1]")
    rng = np.random.default_rng(np.random.SeedSequence(args.seed))
    p = Pattern.from_array(rng.random((args.rows, args.cols)) < args.density)
    text = json.dumps(pattern_to_document(p)) + "\n"
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc.strerror}") from exc
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="masabimod", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, with_input=True):
        if with_input:
            sp.add_argument("path", nargs="?", help="input file (same as --input)")
            sp.add_argument("--input", help="input JSON document")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--timings", action="store_true", help="include wall-clock timings")

    sp = sub.add_parser("analyze", help="structural analysis of a pattern")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("csl", help="analysis of a CSL algebra from lattice generators")
    common(sp)
    sp.set_defaults(func=cmd_csl)

    sp = sub.add_parser("verify", help="run the verifiers on a file or on random instances")
    common(sp)
    sp.add_argument("--random", action="store_true", help="fuzz random instances instead of a file")
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--max-rows", type=int, default=8)
    sp.add_argument("--max-cols", type=int, default=8)
    sp.add_argument("--density", type=float, default=0.3)
    sp.add_argument("--trials", type=int, default=5, help="random matrices per instance")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("random", help="write a seeded random pattern document")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--rows", type=int, default=4)
    sp.add_argument("--cols", type=int, default=4)
    sp.add_argument("--density", type=float, default=0.3)
    sp.add_argument("--out", help="output path (default: stdout)")
    sp.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        log.error("invariant violation: %s", exc)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
