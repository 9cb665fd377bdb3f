"""Acceptance criteria: one test and one PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py`` (lines are shown in the summary) or
``python tests/test_acceptance.py`` to print only the lines.
"""

import os
import time

import pytest

from minimaj.colored import (
    ColoredLetter,
    colored_inv,
    colored_segmented,
    colored_standardize,
    flag_maj,
    format_colored_word,
    parse_colored,
    verify_prop_4_8,
    verify_theorem_4_4,
)
from minimaj.distributions import (
    shape_counterexample,
    verify_corollary_2_8,
    verify_recursions,
    verify_refined_last_block,
    verify_theorem_2_7,
    verify_theorem_3_13,
)
from minimaj.partitions import parse_omp
from minimaj.qpoly import QPoly
from minimaj.report import Report
from minimaj.suites import SUITES, run_suite

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []

JOBS = max(1, min(4, os.cpu_count() or 1))


def record(number: int, title: str, ok: bool, elapsed: float, limit: float | None, detail: str = ""):
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    timing = f"{elapsed:.1f}s" + (f" < {limit:g}s" if limit is not None else "")
    if limit is not None and not within:
        timing = f"{elapsed:.1f}s exceeds {limit:g}s"
    line = f"[{number:02d}] {status} {title} ({timing}){' ' + detail if detail else ''}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line
    assert within, line


def timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def summary(rep: Report) -> str:
    bad = rep.failures
    msg = f"{len(rep) - len(bad)}/{len(rep)} instances"
    if bad:
        msg += f"; first failure: {bad[0].theorem} {bad[0].instance}"
    return msg


def test_01_macmahon():
    rep, dt = timed(lambda: run_suite("macmahon", 7, 1, 1))
    record(1, "inv and maj on S_n give [n]_q! for n <= 7", rep.passed, dt, 5, summary(rep))


def test_02_shape_distributions():
    rep, dt = timed(lambda: verify_theorem_2_7(8, JOBS))
    record(2, "I = M = F for every shape, n <= 8", rep.passed, dt, 60, summary(rep))


def test_03_block_distributions():
    rep, dt = timed(lambda: verify_corollary_2_8(8, JOBS))
    record(3, "I = M = [k]_q! Stir(n,k) for n <= 8, all k", rep.passed, dt, 60, summary(rep))


def test_04_shape_counterexample():
    (i, m), dt = timed(shape_counterexample)
    ok = i == QPoly([0, 1, 2, 1, 1]) and m == QPoly([0, 1, 1, 2, 1]) and i != m
    record(4, "weight (2,2,1) shape (2,1,2): inv and minimaj differ", ok, dt, None, f"I={i}; M={m}")


def test_05_multiset_blocks():
    def go():
        rep = verify_theorem_3_13(6, JOBS)
        rep.extend(verify_refined_last_block(6, JOBS).entries)
        return rep

    rep, dt = timed(go)
    record(5, "I = M on multisets by block count and last-block size, n <= 6", rep.passed, dt, 60, summary(rep))


def test_06_switch_maps():
    rep, dt = timed(lambda: run_suite("switch-maps", 6, 1, JOBS))
    parts = {e.theorem for e in rep.entries}
    ok = rep.passed and {
        "switch-involution", "switch-blocks-and-size", "switch-weight-transposed",
        "switch-descents-preserved", "switch-minimaj-preserved", "switch-segmented-image",
        "switch-commute", "switch-worked-example",
    } <= parts
    record(6, "switch maps: all properties, size <= 6, alphabet <= 4, worked example", ok, dt, None, summary(rep))


def test_07_lemmas():
    rep, dt = timed(lambda: run_suite("lemmas", 6, 1, JOBS))
    record(7, "minimizer uniqueness, compression, cycle increments and commutation, n <= 6", rep.passed, dt, None, summary(rep))


def test_08_recursions():
    rep, dt = timed(lambda: verify_recursions(6, JOBS))
    record(8, "inv, minimaj and last-block recursions equal enumeration, n <= 6", rep.passed, dt, None, summary(rep))


def test_09_symmetry():
    rep, dt = timed(lambda: run_suite("theorem-1-3", 6, 1, JOBS))
    names = {e.theorem for e in rep.entries}
    ok = rep.passed and {"theorem-1-3", "rearrangement-invariance", "shape-nonsymmetry"} <= names
    record(9, "Val(inv) = Val(minimaj), rearrangement invariant, shape-fixed counterexample, n <= 6", ok, dt, None, summary(rep))


def test_10_schur():
    rep, dt = timed(lambda: run_suite("corollary-3-15", 6, 1, JOBS))
    record(10, "tableau formula = Kostka basis change, Schur positive, Val_{3,1} example, n <= 6", rep.passed, dt, None, summary(rep))


def test_11_colored():
    def go():
        rep = verify_theorem_4_4(5, 2, JOBS)
        rep.extend(verify_theorem_4_4(5, 3, JOBS).entries)
        return rep

    rep, dt = timed(go)
    sigma = parse_colored("1^1 2^2 4^0|7^2|8^1 9^2|3^1 5^1 6^2")
    pi = [ColoredLetter(v, c) for v, c in ((3, 0), (4, 2), (5, 0), (1, 2), (2, 1))]
    pointwise = (
        flag_maj(pi, 3) == 17
        and colored_inv(sigma) == 24
        and format_colored_word(*colored_segmented(sigma)) == "1^1 4^0 2^2 . 7^2 . 9^2 8^1 . 6^2 3^1 5^1"
        and colored_standardize(sigma) == parse_omp("159|3|48|267")
    )
    record(11, "colored I = M = [r]^n F(q^r), n <= 5, r in {2,3}; worked values", rep.passed and pointwise, dt, 120,
           summary(rep) + ("" if pointwise else "; worked values differ"))


def test_12_polynomial_identity():
    rep, dt = timed(lambda: verify_prop_4_8(6, 4))
    record(12, "last-block colored identity, alpha_k <= n <= 6, r <= 4", rep.passed, dt, 5, summary(rep))


def test_13_determinism():
    def go():
        bad = []
        for name in SUITES:
            a = run_suite(name, 4, 2, 1).to_json()
            b = run_suite(name, 4, 2, 1).to_json()
            c = run_suite(name, 4, 2, 2).to_json()
            if not a == b == c:
                bad.append(name)
        return bad

    bad, dt = timed(go)
    record(13, "byte-identical reports across runs and --jobs 1/2, every suite", not bad, dt, None,
           f"{len(SUITES)} suites" + (f"; differ: {', '.join(bad)}" if bad else ""))


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                pass
