"""Acceptance gate: ten criteria, each with its tolerance and time budget.

Each test records one PASS/FAIL line, listed again in the terminal summary.
"""

import math
import time

import pytest

from circpart import base_sets as bs
from circpart import cop as cp
from circpart import density as dn
from circpart import extended as ex
from circpart import family as fm
from circpart import harness as h
from circpart import transforms as tf

P = bs.primes()
M24 = bs.arith(2, 4)


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def _finish(record, k, problems, timer, budget, summary):
    ok = not problems and timer.elapsed < budget
    detail = f"{summary} in {timer.elapsed:.2f}s (budget {budget}s)"
    if problems:
        detail += "; " + "; ".join(problems[:3])
    record(k, ok, detail)
    assert ok, detail


def test_criterion_1_golden_weight_lists(record_criterion):
    golden = {
        20: (3, 7, 13, 17),
        22: (3, 5, 11, 17, 19),
        36: (5, 7, 13, 17, 19, 23, 29, 31),
        38: (7, 19, 31),
        46: (3, 5, 17, 23, 29, 41, 43),
        50: (3, 7, 13, 19, 31, 37, 43, 47),
    }
    with Timer() as t:
        problems = [f"C({n}) = {cp.build_cop(n, P).weights}" for n, w in golden.items() if cp.build_cop(n, P).weights != w]
    _finish(record_criterion, 1, problems, t, 1, "six prime weight lists exact")


@pytest.mark.xfail(
    strict=True,
    reason="rotated images of C(n, M_{a,d}) are nonempty for many n; the empty-target statement does not hold",
)
def test_criterion_2_rotation(record_criterion):
    with Timer() as t:
        problems = []
        c8 = cp.build_cop(8, bs.naturals())
        for r in (2, -2):
            if tf.rotate(c8, r).image_weights != c8.weights:
                problems.append(f"C(8, N) at r={r}")
        c24 = cp.build_cop(24, M24)
        if tf.rotate(c24, 4).image_weights != (2, 6, 10, 14, 18, 22):
            problems.append("C(24, M_2,4) at r=4")
        examples_ok = not problems
        rep = h.run_suite("rotation_empty", {"max_n": 500, "pairs": "1,3;2,4;2,5;3,6"})
        if rep.verdict != "Pass":
            first = rep.violations[0]
            problems.append(f"{rep.violation_count} nonempty rotated images, first {first}")
    summary = f"worked examples {'match' if examples_ok else 'differ'}, empty-image scan {rep.verdict}"
    _finish(record_criterion, 2, problems, t, 5, summary)


def test_criterion_3_flip(record_criterion):
    with Timer() as t:
        problems = []
        res = tf.flip_arith(cp.build_cop(28, M24))
        if (res.target_generator, res.l_n, res.l_m, res.target_weights) != (16, 7, 4, (2, 6, 10, 14)):
            problems.append(f"flip of C(28) gave {res}")
        rep = h.run_suite("flip_sound", {"max_n": 2000, "samples": 5})
        problems += [str(v) for v in rep.violations]
    _finish(record_criterion, 3, problems, t, 10, f"flip example and {rep.checked} sampled flips sound")


def test_criterion_4_families(record_criterion):
    with Timer() as t:
        problems = []
        for n, want in ((20, (10, 16, 24, 30)), (22, (8, 20, 24, 36))):
            fam = fm.complete_family(cp.build_cop(n, P))
            if fam.generators != want or fam.size != 5:
                problems.append(f"family of C({n}) is {fam.generators}")
        checked = 0
        for sid in ("offspring_split", "family_symmetry", "child_bounds"):
            rep = h.run_suite(sid, {"max_n": 1000})
            checked += rep.checked
            problems += [f"{sid}: {v}" for v in rep.violations]
    _finish(record_criterion, 4, problems, t, 30, f"family examples, {checked} split/symmetry/bound checks")


def test_criterion_5_compatibility(record_criterion):
    with Timer() as t:
        problems = []
        v = fm.check_compatibility(cp.build_cop(24, P), cp.build_cop(12, P))
        if (v.kind, v.cover) != ("Compatible", 24):
            problems.append(f"(24, 12) gave {v.kind}")
        v = fm.check_compatibility(cp.build_cop(16, P), cp.build_cop(18, P))
        if v.kind != "WeaklyCompatible" or not {(3, 18), (7, 16)} <= set(v.witnesses):
            problems.append(f"(16, 18) gave {v.kind} {v.witnesses}")
        v = fm.check_compatibility(cp.build_cop(28, P), cp.build_cop(30, P))
        if v.kind != "WeaklyCompatible" or (5, 30) not in v.witnesses:
            problems.append(f"(28, 30) gave {v.kind} {v.witnesses}")
    _finish(record_criterion, 5, problems, t, 5, "three compatibility verdicts")


def test_criterion_6_extended_families(record_criterion):
    with Timer() as t:
        rep = h.run_suite("xcop_family", {"max_n": 2000})
        problems = [str(v) for v in rep.violations]
        if rep.checked != 993:
            problems.append(f"checked {rep.checked} generators")
    _finish(record_criterion, 6, problems, t, 60, f"closed-form family for {rep.checked} even n, symmetry from 8")


def test_criterion_7_goldbach(record_criterion):
    with Timer() as t:
        bs.default_tables().require(10**6)
        rep = h.run_suite("goldbach", {"limit": 10**6})
        problems = [str(v) for v in rep.violations]
    least = min(row[2] for row in rep.observations["profile"])
    _finish(record_criterion, 7, problems, t, 120, f"{rep.checked} checks up to 10^6, least axis count {least}")


def test_criterion_8_density_identities(record_criterion):
    with Timer() as t:
        problems = []
        for n in range(3, 10**4 + 1):
            for H in (P, bs.squarefree()):
                if dn.complement_identity_check(H, n) != 0:
                    problems.append(f"complement residue at n={n} for {H}")
        rep = h.run_suite("density_sandwich", {"max_n": 10**4})
        problems += [f"sandwich: {v}" for v in rep.violations]
        d = float(bs.density_estimate(bs.squarefree(), 10**6))
        if abs(d - 6 / math.pi**2) >= 0.001:
            problems.append(f"squarefree density {d}")
        missing = dn.two_summand_scan(bs.squarefree(), 2, 10**5)
        if missing:
            problems.append(f"not two squarefree summands: {missing[:5]}")
    summary = f"complement identity exact, {rep.checked} sandwich checks, squarefree density {d:.5f}"
    _finish(record_criterion, 8, problems, t, 60, summary)


def test_criterion_9_extended_density_trend(record_criterion):
    with Timer() as t:
        rows = [ex.xcop_density_estimate(n) for n in (10**3, 10**4, 10**5)]
        problems = [f"ratio {r.ratio:.3f} at n={r.n}" for r in rows if not 0.25 <= r.ratio <= 4]
    trend = ", ".join(f"n={r.n}: {r.ratio:.3f}" for r in rows)
    _finish(record_criterion, 9, problems, t, 60, f"estimate/(1/ln n) ratios {trend}")


def test_criterion_10_determinism(record_criterion):
    with Timer() as t:
        problems = []
        for sid in h.suite_ids():
            a = h.serialize_report(h.run_suite(sid))
            b = h.serialize_report(h.run_suite(sid))
            if a != b:
                problems.append(sid)
    _finish(record_criterion, 10, problems, t, 300, f"{len(h.suite_ids())} suite reports byte-identical across two runs")
