"""Named, parameterized verification suites with reproducible reports.

Each suite scans a finite range, collects counterexamples in ascending
order (first 100 kept) and returns a SuiteReport. Pass/Fail suites fail
exactly when a counterexample was found; observational suites only
report statistics. Reports serialize deterministically: elapsed time is
kept on the object but never written out.
"""

import csv
import io
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import base_sets as bs
from . import cop as cp
from . import density as dn
from . import extended as ex
from . import family as fm
from . import kernels
from . import transforms as tf
from .errors import BadParams, UnknownSuite

VIOLATION_CAP = 100


@dataclass
class SuiteReport:
    suite_id: str
    params: dict
    checked: int
    violations: list
    violation_count: int
    verdict: str  # Pass, Fail, Observational
    observations: dict = field(default_factory=dict)
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self):
        return self.verdict != "Fail"

    def to_dict(self):
        return {
            "suite_id": self.suite_id,
            "params": dict(self.params),
            "checked": self.checked,
            "verdict": self.verdict,
            "violation_count": self.violation_count,
            "violations": list(self.violations),
            "observations": dict(self.observations),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, default=_jsonable) + "\n"

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("field", "value"))
        for key, value in self.to_dict().items():
            if not isinstance(value, (str, int)):
                value = json.dumps(value, default=_jsonable, separators=(",", ":"))
            w.writerow((key, value))
        return buf.getvalue()


def serialize_report(report, fmt="json"):
    if fmt == "json":
        return report.to_json().encode()
    if fmt == "csv":
        return report.to_csv().encode()
    raise ValueError(f"unknown format {fmt!r}")


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (set, frozenset, tuple)):
        return sorted(obj) if isinstance(obj, (set, frozenset)) else list(obj)
    if isinstance(obj, bs.BaseSetSpec):
        return str(obj)
    if isinstance(obj, cp.Axis):
        return str(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


class _Collector:
    """Counts checks and keeps the first violations."""

    def __init__(self):
        self.checked = 0
        self.count = 0
        self.items = []

    def add(self, **info):
        self.count += 1
        if len(self.items) < VIOLATION_CAP:
            self.items.append(info)

    def extend(self, checked, count, items, *tallies):
        self.checked += checked
        self.count += count
        room = VIOLATION_CAP - len(self.items)
        if room > 0:
            self.items.extend(items[:room])


def _seeded(params):
    return random.Random(params["seed"])


def _sample_progressions(rng, count, max_d=12):
    pool = [(a, d) for d in range(1, max_d + 1) for a in range(1, d + 1)]
    return sorted(rng.sample(pool, count))


def _parse_pairs(text):
    # "1,3;2,4" -> [(1, 3), (2, 4)]
    out = []
    for chunk in str(text).split(";"):
        if chunk.strip():
            a, d = chunk.split(",")
            out.append((int(a), int(d)))
    return out


def _parse_bases(text):
    return [bs.parse_base_set(t) for t in str(text).split(";") if t.strip()]


# sharding: each worker rebuilds its own read-only sieve


def _init_worker(bound):
    bs.set_default_bound(bound)


def _sharded(fn, lo, hi, workers, extra=()):
    """Run fn(lo, hi, *extra) over [lo, hi] in shards, merged in order.

    fn returns (checked, count, items, *tallies); tallies are summed.
    """
    if workers <= 1 or hi - lo < 2 * workers:
        return fn(lo, hi, *extra)
    edges = np.linspace(lo, hi + 1, workers + 1).astype(int)
    bound = bs.default_tables().bound
    with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(bound,)) as pool:
        futures = [pool.submit(fn, int(edges[i]), int(edges[i + 1]) - 1, *extra) for i in range(workers)]
        parts = [f.result() for f in futures]
    items = [v for p in parts for v in p[2]][:VIOLATION_CAP]
    totals = [sum(col) for col in zip(*(p[:2] + p[3:] for p in parts))]
    return (totals[0], totals[1], items, *totals[2:])


def _subset_matrix(masks):
    # S[i, j] is True when set i is contained in set j
    m = masks.astype(np.float32)
    inter = m @ m.T
    sizes = masks.sum(axis=1)
    return inter == sizes[:, None]


# cop_core


def _axis_uniqueness_range(lo, hi, base_texts):
    checked, count, items = 0, 0, []
    for text in base_texts:
        base = bs.parse_base_set(text)
        for n in range(lo, hi + 1):
            c = cp.build_cop(n, base)
            w = np.asarray(c.weights, dtype=np.int64)
            checked += 1
            ok = bool(np.all(w + w[::-1] == n)) and bool(np.all(np.diff(w) > 0))
            if ok and n <= 200:
                seen = [x for ax in cp.axes(c) for x in ax.weights]
                ok = sorted(seen) == list(c.weights) and cp.verify_pair_symmetry(c)
            if not ok:
                count += 1
                if len(items) < VIOLATION_CAP:
                    items.append({"base": text, "n": n})
    return checked, count, items


def suite_axis_uniqueness(p):
    texts = [str(b) for b in _parse_bases(p["bases"])]
    col = _Collector()
    col.extend(*_sharded(_axis_uniqueness_range, 2, p["max_n"], p["workers"], (texts,)))
    return col, {"bases": texts}


def suite_embedding_naturals(p):
    top = p["max_n"]
    ns = np.arange(2, top + 1)
    masks = np.zeros((len(ns), top + 1), dtype=bool)
    for i, n in enumerate(ns):
        masks[i, 1:n] = True
    sub = _subset_matrix(masks)
    proper = sub & ~np.eye(len(ns), dtype=bool)
    expected = ns[:, None] < ns[None, :]
    col = _Collector()
    col.checked = len(ns) * (len(ns) - 1)
    bad = np.argwhere((proper != expected) & ~np.eye(len(ns), dtype=bool))
    for i, j in bad:
        col.add(n=int(ns[i]), m=int(ns[j]), subset=bool(proper[i, j]))
    for n in range(2, min(top, 60)):
        rel = cp.classify_embedding(cp.build_cop(n, bs.naturals()), cp.build_cop(n + 1, bs.naturals()))
        col.checked += 1
        if (rel.relation, rel.alignment) != ("ProperSubset", "Aligned"):
            col.add(n=n, m=n + 1, relation=rel.relation)
    return col, {}


def suite_embedding_arith(p):
    rng = _seeded(p)
    pairs = _sample_progressions(rng, p["samples"])
    top = p["max_n"]
    col = _Collector()
    strict_misses = 0
    subset_pairs = 0
    for a, d in pairs:
        base = bs.arith(a, d)
        gens = np.arange(2 * a, top + 1, d)
        cops = [cp.build_cop(int(n), base) for n in gens]
        for n, c in zip(gens, cops):
            col.checked += 1
            if len(c.weights) != 1 + (int(n) - 2 * a) // d:
                col.add(a=a, d=d, n=int(n), check="counting formula")
        masks = np.zeros((len(gens), 2 * top + 1), dtype=bool)
        for i, c in enumerate(cops):
            masks[i, list(c.weights)] = True
        sub = _subset_matrix(masks)
        off = ~np.eye(len(gens), dtype=bool)
        expected = gens[:, None] < gens[None, :]
        col.checked += int(off.sum())
        for i, j in np.argwhere(((sub & off) != expected) & off):
            col.add(a=a, d=d, n=int(gens[i]), m=int(gens[j]), check="aligned embedding")
        nus = np.array([len(c.weights) // 2 for c in cops])
        sp = sub & off
        subset_pairs += int(sp.sum())
        for i, j in np.argwhere(sp & (nus[:, None] > nus[None, :])):
            col.add(a=a, d=d, n=int(gens[i]), m=int(gens[j]), check="nu monotone")
        strict_misses += int((sp & (nus[:, None] == nus[None, :])).sum())
        # union bound on a seeded sample of pairs
        for _ in range(p["union_pairs"]):
            i, j = sorted(rng.randrange(len(gens)) for _ in range(2))
            n, m = int(gens[i]), int(gens[j])
            target = cp.build_cop(n + m - 2 * a, base).weight_set
            col.checked += 1
            if not (cops[i].weight_set | cops[j].weight_set) <= target:
                col.add(a=a, d=d, n=n, m=m, check="union bound")
    obs = {
        "progressions": [list(x) for x in pairs],
        "subset_pairs": subset_pairs,
        "equal_nu_subset_pairs": strict_misses,
    }
    return col, obs


# transforms


def suite_rotation_invariance(p):
    col = _Collector()
    for n in range(2, p["max_n"] + 1):
        w = np.arange(1, n)
        rs = np.arange(-n + 1, n)
        k = (w[None, :] + rs[:, None]) % n
        k = np.where(k == 0, ((n + rs) % n)[:, None], k)
        ok = np.all(np.sort(k, axis=1) == w[None, :], axis=1)
        col.checked += len(rs)
        for r in rs[~ok]:
            col.add(n=n, r=int(r))
    examples = [(8, bs.naturals(), 2), (8, bs.naturals(), -2), (24, bs.arith(2, 4), 4)]
    for n, base, r in examples:
        c = cp.build_cop(n, base)
        col.checked += 1
        if tf.rotate(c, r).image_weights != c.weights:
            col.add(n=n, r=r, base=str(base))
    return col, {}


def _rotation_images(n, a, d, rs, substitute):
    w = np.arange(a, n - a + 1, d)
    present = np.zeros(n, dtype=bool)
    present[w] = True
    k = (w[None, :] + rs[:, None]) % n
    if substitute:
        k = np.where(k == 0, ((n + rs) % n)[:, None], k)
    return w, k, present


def suite_rotation_empty(p):
    col = _Collector()
    raw_pos = raw_neg = 0
    sub_pos = sub_neg = 0
    inv_checked = inv_failed = 0
    for a, d in _parse_pairs(p["pairs"]):
        for n in range(2 * a, p["max_n"] + 1, d):
            rs = np.arange(-n + 1, n)
            c = rs % d
            sel = (c != 0) & (c != (2 * a) % d)
            qual = rs[sel]
            if qual.size:
                _, k, present = _rotation_images(n, a, d, qual, True)
                hit = present[k].any(axis=1)
                col.checked += len(qual)
                for r in qual[hit]:
                    col.add(a=a, d=d, n=n, r=int(r))
                sub_pos += int(np.count_nonzero(hit & (qual > 0)))
                sub_neg += int(np.count_nonzero(hit & (qual < 0)))
                _, k, present = _rotation_images(n, a, d, qual, False)
                hit = present[k].any(axis=1)
                raw_pos += int(np.count_nonzero(hit & (qual > 0)))
                raw_neg += int(np.count_nonzero(hit & (qual < 0)))
            if d == 2 * a:
                zero = rs[rs % d == 0]
                w, k, _ = _rotation_images(n, a, d, zero, True)
                ok = np.all(np.sort(k, axis=1) == w[None, :], axis=1)
                inv_checked += len(zero)
                inv_failed += int(np.count_nonzero(~ok))
    col.checked += inv_checked
    obs = {
        "nonempty_with_substitution_positive_r": sub_pos,
        "nonempty_with_substitution_negative_r": sub_neg,
        "nonempty_without_substitution_positive_r": raw_pos,
        "nonempty_without_substitution_negative_r": raw_neg,
        "invariance_checked": inv_checked,
        "invariance_failed": inv_failed,
    }
    if inv_failed:
        col.add(check="invariance for d = 2a", failures=inv_failed)
    return col, obs


def suite_flip_sound(p):
    rng = _seeded(p)
    pairs = _sample_progressions(rng, p["samples"])
    col = _Collector()
    res = tf.flip_arith(cp.build_cop(28, bs.arith(2, 4)))
    col.checked += 1
    if (res.target_generator, res.l_n, res.l_m, res.target_weights) != (16, 7, 4, (2, 6, 10, 14)):
        col.add(n=28, a=2, d=4, problem="worked example")
    for a, d in pairs:
        base = bs.arith(a, d)
        for n in range(2 * a, p["max_n"] + 1, d):
            res = tf.flip_arith(cp.build_cop(n, base))
            col.checked += 1
            problems = tf.flip_violations(res)
            m_expected = a + n // 2 if (n // 2) % d == a % d and n % 2 == 0 else a + (n + d) // 2
            if res.target_generator != m_expected:
                problems.append(f"target generator {res.target_generator}")
            if problems:
                col.add(a=a, d=d, n=n, problem=problems[0])
    return col, {"progressions": [list(x) for x in pairs]}


def suite_filtration_absent_arith(p):
    col = _Collector()
    top = p["max_n"]
    for a, d in _parse_pairs(p["pairs"]):
        base = bs.arith(a, d)
        span = 2 * top + 1
        mask = bs.member_mask(base, span - 1)
        x = np.arange(span)
        # T[m, x]: x is a weight of C(m)
        ms = np.arange(span)
        diff = ms[:, None] - x[None, :]
        T = mask[None, :] & (diff >= 1) & mask[np.clip(diff, 0, span - 1)]
        T[:, 0] = False
        for n in range(2 * a, top + 1, d):
            c = cp.build_cop(n, base)
            real = cp.real_axes(c)
            all_axes = cp.axes(c)
            col.checked += len(all_axes)
            if not real:
                continue
            rows = T[2 : 2 * n + 1]
            lows = np.array([ax.low for ax in real])
            highs = np.array([ax.high for ax in real])
            co_count = (rows[:, lows] & rows[:, highs]).sum(axis=1)
            for ax in all_axes:
                absent = ~rows[:, ax.low] & ~rows[:, ax.high]
                if ax.is_degenerate:
                    others = co_count
                else:
                    others = co_count - (rows[:, ax.low] & rows[:, ax.high])
                bad = np.flatnonzero(absent & (others > 0))
                if bad.size:
                    col.add(a=a, d=d, n=n, axis=str(ax), m=int(bad[0]) + 2)
    for n in range(2, 41, 4):
        c = cp.build_cop(n, bs.arith(2, 4))
        for ax in cp.axes(c):
            col.checked += 1
            if tf.find_filtrations(c, ax, 2 * n):
                col.add(a=2, d=4, n=n, axis=str(ax), check="direct search")
    return col, {}


def _extension_range(lo, hi, max_r):
    t = bs.default_tables()
    prime = t.prime
    checked, count, items = 0, 0, []
    P = bs.primes()
    for n in range(max(lo, 2), hi + 1):
        c = cp.build_cop(n, P)
        w = np.asarray(c.weights, dtype=np.int64)
        for r in range(1, max_r + 1):
            moved = w + r
            ok = prime[moved]
            m = n + r
            if not ok.any():
                continue
            checked += int(ok.sum())
            good = prime[moved[ok]] & prime[m - moved[ok]]
            for x in w[ok][~good]:
                count += 1
                if len(items) < VIOLATION_CAP:
                    items.append({"n": n, "r": r, "weight": int(x)})
        if n <= 200:
            for ax in cp.axes(c):
                for r in range(1, max_r + 1):
                    for end in set(ax.weights):
                        got = tf.extend_axis(c, ax, r, weight=end)
                        if got is None:
                            continue
                        checked += 1
                        tgt = cp.build_cop(n + r, P).weight_set
                        if got.low not in tgt or got.high not in tgt:
                            count += 1
                            if len(items) < VIOLATION_CAP:
                                items.append({"n": n, "r": r, "axis": str(ax)})
    return checked, count, items


def suite_fundamental_extension(p):
    bs.default_tables().require(p["max_n"] + p["max_r"])
    col = _Collector()
    col.extend(*_sharded(_extension_range, 2, p["max_n"], p["workers"], (p["max_r"],)))
    return col, {}


def suite_almost_goldbach(p):
    t = bs.default_tables()
    chain = tf.almost_goldbach_chain(p["limit"], t)
    col = _Collector()
    prev = 0
    for n, ax in chain:
        col.checked += 1
        c = cp.build_cop(n, bs.primes(), t)
        problem = None
        if n <= prev or n > p["limit"]:
            problem = "order"
        elif c.is_empty or not cp.has_axis(c, ax):
            problem = "axis missing"
        elif ax.low != 3 or not t.prime[n - 3]:
            problem = "low weight"
        if problem:
            col.add(n=n, problem=problem)
        prev = n
    if chain[0] != (6, cp.Axis.degenerate(3)):
        col.add(n=6, problem="start")
    obs = {"length": len(chain), "last_generator": chain[-1][0], "head": [n for n, _ in chain[:8]]}
    return col, obs


# family


def _family_bases(p):
    return _parse_bases(p["bases"])


def suite_offspring_split(p):
    col = _Collector()
    for base in _family_bases(p):
        for n in range(2, p["max_n"] + 1):
            c = cp.build_cop(n, base)
            if cp.nu(c) < 2:
                continue
            gens = fm.child_generators(c)
            below = sum(1 for s in gens if s < n)
            col.checked += 1
            if 2 * below != len(gens):
                col.add(base=str(base), n=n, below=below, above=len(gens) - below)
    return col, {}


def suite_child_bounds(p):
    col = _Collector()
    tight = 0
    for base in _family_bases(p):
        for n in range(2, p["max_n"] + 1):
            c = cp.build_cop(n, base)
            lower, actual, upper = fm.children_bounds(fm.complete_family(c, witnesses=False))
            col.checked += 1
            if not lower <= actual <= upper:
                col.add(base=str(base), n=n, lower=lower, actual=actual, upper=upper)
            if actual == upper and upper:
                tight += 1
    return col, {"at_upper_bound": tight}


def suite_regularity(p):
    col = _Collector()
    step_not_d = 0
    for a, d in _parse_pairs(p["pairs"]):
        base = bs.arith(a, d)
        for n in range(2 * a, p["max_n"] + 1, d):
            gens = fm.child_generators(cp.build_cop(n, base))
            for side in ([s for s in gens if s < n], [s for s in gens if s > n]):
                if len(side) < 2:
                    continue
                steps = set(np.diff(side).tolist())
                col.checked += 1
                if len(steps) != 1:
                    col.add(a=a, d=d, n=n, steps=sorted(steps))
                elif steps != {d}:
                    step_not_d += 1
    return col, {"constant_step_other_than_d": step_not_d}


def suite_family_symmetry(p):
    col = _Collector()
    pairs = _parse_pairs(p["pairs"])
    emb_child = {False: [], True: []}
    emb_checked = 0
    for a, d in pairs:
        base = bs.arith(a, d)
        gens = list(range(2 * a, p["max_n"] + 1, d))
        cops = {n: cp.build_cop(n, base) for n in gens}
        kids = {n: fm.child_generators(cops[n]) for n in gens}
        for n in gens:
            g = kids[n]
            below = [s for s in g if s < n]
            above = sorted((s for s in g if s > n), reverse=True)
            col.checked += 1
            if len(below) != len(above) or any(n - s != t - n for s, t in zip(below, above)):
                col.add(a=a, d=d, n=n, check="children chain")
            if len(cops[n].weights) >= 4 and p["childless_max_n"] >= n:
                col.checked += 1
                if all(not fm.child_generators(cp.build_cop(s, base)) for s in g):
                    col.add(a=a, d=d, n=n, check="all children childless")
        # embedding implies child, both center conventions; n = 2a is a lone center
        small = [n for n in gens if n <= p["childless_max_n"] and n > 2 * a]
        with_center = {n: set(fm.child_generators(cops[n], include_center=True)) for n in small}
        for i, n in enumerate(small):
            for m in small[i + 1 :]:
                if cops[n].weight_set < cops[m].weight_set:
                    emb_checked += 1
                    if n not in kids[m]:
                        emb_child[False].append([a, d, n, m])
                    if n not in with_center[m]:
                        emb_child[True].append([a, d, n, m])
    nonemb = _nonembedding_counterexamples(p["prime_max_n"])
    obs = {
        "embedding_child_pairs": emb_checked,
        "embedding_child_misses": emb_child[False][:VIOLATION_CAP],
        "embedding_child_misses_center_included": emb_child[True][:VIOLATION_CAP],
        "nonembedding_counterexamples": nonemb[False],
        "nonembedding_counterexamples_center_included": nonemb[True],
    }
    return col, obs


def _nonembedding_counterexamples(top):
    P = bs.primes()
    cops = {n: cp.build_cop(n, P) for n in range(2, top + 1)}
    cops = {n: c for n, c in cops.items() if not c.is_empty}
    out = {}
    for ic in (False, True):
        fam = {n: fm.family_generator_set(c, ic) for n, c in cops.items()}
        found = []
        for n in cops:
            for m in cops:
                if n == m or len(fam[n]) >= len(fam[m]):
                    continue
                if all(s in fam[m] for s in fam[n] if s != n):
                    continue
                a, b = cops[n].weight_set, cops[m].weight_set
                if a < b or b < a:
                    found.append([n, m])
        out[ic] = found[:VIOLATION_CAP]
    return out


# density


def _sandwich_range(lo, hi, h_texts, m_text):
    checked, count, items = 0, 0, []
    M = bs.parse_base_set(m_text)
    seg_fail = 0
    for text in h_texts:
        H = bs.parse_base_set(text)
        for n in range(lo, hi + 1):
            if cp.nu(cp.build_cop(n, M)) == 0:
                continue
            rep = dn.point_density_estimate(H, M, n)
            checked += 1
            ok = rep.lower_bound <= rep.estimate <= rep.upper_bound and 0 <= rep.estimate <= 1
            if not ok:
                count += 1
                if len(items) < VIOLATION_CAP:
                    items.append({"H": text, "n": n, "estimate": str(rep.estimate)})
            if rep.segment_lower is not None and not rep.segment_lower <= rep.estimate <= rep.segment_upper:
                seg_fail += 1
    return checked, count, items, seg_fail


def suite_density_sandwich(p):
    rng = _seeded(p)
    sample = sorted(rng.sample(range(1, p["max_n"] + 1), p["explicit_size"]))
    h_texts = [str(bs.primes()), str(bs.squarefree()), str(bs.arith(1, 2)), str(bs.explicit(sample))]
    col = _Collector()
    seg_fail = 0
    for m_text in ("naturals", "primes"):
        checked, count, items, failures = _sharded(_sandwich_range, 3, p["max_n"], p["workers"], (h_texts, m_text))
        seg_fail += failures
        col.extend(checked, count, items)
    return col, {"segment_bound_failures": seg_fail, "explicit_sample_head": sample[:10]}


def suite_complement_identity(p):
    col = _Collector()
    subjects = [bs.primes(), bs.squarefree(), bs.arith(1, 2), bs.naturals(), bs.explicit([])]
    for H in subjects:
        for n in range(3, p["max_n"] + 1):
            col.checked += 1
            res = dn.complement_identity_check(H, n)
            if res != 0:
                col.add(H=str(H), n=n, residual=str(res))
    return col, {}


def suite_squarefree_pairs(p):
    col = _Collector()
    t = bs.default_tables()
    top = p["max_n"]
    missing = []
    for n in range(2, top + 1):
        col.checked += 1
        rep = dn.mobius_pair_representation(n, t)
        if rep is None:
            missing.append(n)
            continue
        z1, z2 = rep
        if z1 + z2 != n or t.mobius[z1] != t.mobius[z2] or t.mobius[z1] == 0:
            col.add(n=n, check="mobius pair")
    rng = _seeded(p)
    progs = _sample_progressions(rng, p["samples"])
    missing_set = set(missing)
    late = {}
    for a, d in progs:
        hits = [n for n in range(max(a, 2), top + 1, d) if n > top // 2 and n not in missing_set]
        late[f"{a},{d}"] = len(hits)
        col.checked += 1
        if not hits:
            col.add(a=a, d=d, check="no representable n in upper half")
    for n in range(3, 101):
        z1, z2 = dn.coprime_pair_representation(n)
        col.checked += 1
        if math.gcd(z1, z2) != 1 or z1 + z2 != n:
            col.add(n=n, check="coprime pair")
    dens = bs.density_estimate(bs.squarefree(), p["density_n"], t)
    col.checked += 1
    gap = abs(float(dens) - 6 / math.pi**2)
    if gap > 0.001:
        col.add(n=p["density_n"], check="squarefree density", gap=gap)
    prev = None
    for q in (2, 3, 5, 7, 11, 13):
        al = bs.alpha(q)
        col.checked += 1
        if prev is not None and not al < prev:
            col.add(p=q, check="alpha decreasing")
        prev = al
        if q <= 7:
            col.checked += 1
            if bs.density_estimate(bs.primorial_coprime(q), bs.primorial(q), t) != al:
                col.add(p=q, check="alpha period density")
    obs = {
        "unrepresentable": missing[:VIOLATION_CAP],
        "unrepresentable_count": len(missing),
        "upper_half_hits": late,
        "squarefree_density": round(float(dens), 9),
        "coprime_pair_counts_head": [dn.coprime_pair_count(n) for n in range(3, 21)],
    }
    return col, obs


def suite_two_summand(p):
    col = _Collector()
    top = p["max_n"]
    t = bs.default_tables()
    sq = dn.two_summand_scan(bs.squarefree(), 2, top, tables=t)
    col.checked += top - 1
    for n in sq:
        col.add(H="squarefree", n=n)
    U = bs.union(bs.arith(1, 2), bs.arith(2, 4))
    un = dn.two_summand_scan(U, 2, top, tables=t)
    col.checked += top - 1
    for n in un:
        if n > p["threshold"]:
            col.add(H=str(U), n=n)
    pr_top = min(top, p["prime_max_n"])
    pr = dn.two_summand_scan(bs.primes(), 6, pr_top, step=2, tables=t)
    col.checked += (pr_top - 6) // 2 + 1
    for n in pr:
        col.add(H="primes", n=n)
    obs = {"union_unrepresentable": un[:VIOLATION_CAP], "squarefree_unrepresentable": len(sq)}
    return col, obs


# extended


def suite_xcop_structure(p):
    col = _Collector()
    t = bs.default_tables()
    P = bs.primes()
    for n in range(2, 11, 2):
        x = ex.build_xcop(n, P, t)
        col.checked += 1
        if len(ex.extended_family_generators(x)) != 1:
            col.add(n=n, check="childless")
    for n in range(6, p["max_n"] + 1, 2):
        col.checked += 1
        if not ex.has_full_prime_axis(n, t):
            col.add(n=n, check="full prime axis")
        if n < 8:
            continue
        x = ex.build_xcop(n, P, t)
        cls = ex.classify_axes(x)
        plain = [w for w in cp.build_cop(n, P, t).weights if w > 2]
        odd_primes = np.flatnonzero(t.prime[3 : n - 2]) + 3
        problems = []
        if cls.nu_star != cls.nu + cls.nu_bar:
            problems.append("axis counts")
        if cls.nu != len(plain) // 2:
            problems.append("full axes vs plain")
        if not set(odd_primes.tolist()) <= x.weight_set:
            problems.append("odd primes")
        if len(x.weights) < len(odd_primes) - 1 or not {3, 5} <= x.weight_set:
            problems.append("size")
        if problems:
            col.add(n=n, check=problems[0])
    stride = max(2, (p["max_n"] // 40) & ~1)
    for n in range(8, min(p["max_n"], 2000) + 1, stride):
        col.checked += 1
        if not ex.xcop_embedding_and_axis_checks(n, tables=t):
            col.add(n=n, check="embedding and shared axis")
    # progressions: the extended CoP is the plain one cut to the window (2, n - 2)
    diffs = {}
    for a, d in _parse_pairs(p["pairs"]):
        base = bs.arith(a, d)
        bad = 0
        for n in range(2 * a, p["progression_max_n"] + 1, d):
            if n % 2 or n < 6:
                continue
            plain = set(cp.build_cop(n, base).weights)
            xw = ex.build_xcop(n, base).weight_set
            col.checked += 1
            if {w for w in plain if 2 < w < n - 2} != xw:
                col.add(a=a, d=d, n=n, check="progression window")
            if plain != xw:
                bad += 1
        diffs[f"{a},{d}"] = bad
    return col, {"progression_mismatches": diffs}


def _xcop_family_range(lo, hi):
    t = bs.default_tables()
    P = bs.primes()
    checked, count, items = 0, 0, []
    for n in range(lo + (lo % 2), hi + 1, 2):
        x = ex.build_xcop(n, P, t)
        if n >= 8 and not ex.xcop_symmetry_checks(x):
            count += 1
            if len(items) < VIOLATION_CAP:
                items.append({"n": n, "check": "symmetry"})
        if n < 16:
            continue
        checked += 1
        fam = ex.extended_family_generators(x)
        if fam != ex.predicted_family(n) or len(fam) != n - 7:
            count += 1
            if len(items) < VIOLATION_CAP:
                items.append({"n": n, "check": "family", "size": len(fam)})
    return checked, count, items


def suite_xcop_family(p):
    col = _Collector()
    col.extend(*_sharded(_xcop_family_range, 8, p["max_n"], p["workers"]))
    return col, {}


def goldbach_scan(limit, tables=None):
    """Decade profile of the least axis count over even n in [6, limit], and violations.

    Axis counts include the degenerate axis, so 6 = 3 + 3 counts once.
    Returns (profile, violations) with profile rows (lo, hi, min_count, argmin).
    """
    t = tables if tables is not None else bs.default_tables()
    t.require(limit)
    flags = t.prime[: limit + 1].copy()
    flags[:3] = False  # odd primes only
    ns = np.arange(6, limit + 1, 2, dtype=np.int64)
    if ns.size == 0:
        return [], []
    odd = np.flatnonzero(flags)
    least = kernels.least_summands(flags.view(np.uint8), odd, ns)
    violations = ns[least == 0].tolist()
    size = 1 << int(2 * (limit + 1) - 1).bit_length()
    f = np.fft.rfft(flags.astype(np.float64), size)
    ordered = np.rint(np.fft.irfft(f * f, size)[: limit + 1]).astype(np.int64)
    half = np.zeros(limit + 1, dtype=np.int64)
    half[ns] = flags[ns // 2]
    counts = (ordered[ns] + half[ns]) // 2
    profile = []
    lo = 6
    while lo <= limit:
        hi = min(limit, 10 ** (len(str(lo))) - 1)
        sel = (ns >= lo) & (ns <= hi)
        if sel.any():
            i = int(np.argmin(counts[sel]))
            profile.append((lo, hi, int(counts[sel][i]), int(ns[sel][i])))
        lo = hi + 1
    return profile, violations


def _axis_count(n, t):
    c = cp.build_cop(n, bs.primes(), t)
    return cp.nu(c) + (cp.center(c) is not None)


def suite_goldbach(p):
    t = bs.default_tables()
    col = _Collector()
    profile, violations = goldbach_scan(p["limit"], t)
    col.checked = max(0, (p["limit"] - 6) // 2 + 1)
    for n in violations:
        col.add(n=n)
    if profile and any(row[2] == 0 for row in profile):
        col.add(check="representation count profile has a zero")
    rng = _seeded(p)
    evens = list(range(6, p["limit"] + 1, 2))
    sample = sorted(rng.sample(evens, min(p["samples"], len(evens)))) if evens else []
    flags = t.prime[: p["limit"] + 1].copy()
    flags[:3] = False
    for n in sample:
        x = np.arange(3, n // 2 + 1)
        direct = int(np.count_nonzero(flags[x] & flags[n - x]))
        col.checked += 1
        if direct != _axis_count(n, t):
            col.add(n=n, check="sampled axis count")
    if p["limit"] >= 22:
        col.checked += 1
        if cp.nu(cp.build_cop(22, bs.primes(), t)) != 2:
            col.add(n=22, check="real axes of C(22)")
    obs = {"profile": [list(row) for row in profile], "nu_6_with_center": _axis_count(6, t) if p["limit"] >= 6 else 0}
    return col, obs


# compatibility and conjectures


def suite_compat_examples(p):
    col = _Collector()
    P = bs.primes()

    def verdict(n, m):
        return fm.check_compatibility(cp.build_cop(n, P), cp.build_cop(m, P))

    v = verdict(24, 12)
    col.checked += 1
    if v.kind != "Compatible" or v.cover != 24:
        col.add(n=24, m=12, got=v.kind)
    v = verdict(16, 18)
    col.checked += 1
    if v.kind != "WeaklyCompatible" or not {(3, 18), (7, 16)} <= set(v.witnesses):
        col.add(n=16, m=18, got=v.kind)
    v2 = verdict(28, 30)
    col.checked += 1
    if v2.kind != "WeaklyCompatible" or (5, 30) not in v2.witnesses:
        col.add(n=28, m=30, got=v2.kind)
    return col, {"witnesses_16_18": [list(w) for w in v.witnesses], "witnesses_28_30": [list(w) for w in v2.witnesses]}


def suite_conjecture_8_4_scan(p):
    col = _Collector()
    top = p["bound"]
    if top < 2:
        return col, {"fully_connected_pairs": 0}
    P = bs.primes()
    cops = [c for c in (cp.build_cop(n, P) for n in range(2, top + 1)) if not c.is_empty]
    masks = np.zeros((len(cops), top + 1), dtype=bool)
    for i, c in enumerate(cops):
        masks[i, list(c.weights)] = True
    sub = _subset_matrix(masks) & ~np.eye(len(cops), dtype=bool)
    pairs = [[cops[i].n, cops[j].n] for i, j in np.argwhere(sub)]
    col.checked = len(cops) * (len(cops) - 1)
    even = [pr for pr in pairs if pr[0] % 2 == 0 and pr[1] % 2 == 0]
    obs = {
        "fully_connected_pairs": len(pairs),
        "even_generator_pairs": len(even),
        "largest_even_pair": even[-1] if even else None,
        "head": even[:20],
    }
    return col, obs


def suite_conjecture_11_3_scan(p):
    col = _Collector()
    top = p["bound"]
    P = bs.primes()
    cache = {}

    def cop_of(n):
        if n not in cache:
            cache[n] = cp.build_cop(n, P)
        return cache[n]

    compat = {}

    def compatible(n, m):
        key = (min(n, m), max(n, m))
        if key not in compat:
            compat[key] = fm.compatible_cover(cop_of(key[0]), cop_of(key[1])) is not None
        return compat[key]

    gens = [n for n in range(8, top + 1, 2) if not cop_of(n).is_empty]
    agree = parents_only = children_only = neither = trivial = 0
    records = []
    for i, n in enumerate(gens):
        kn = [s for s in fm.child_generators(cop_of(n))]
        for m in gens[i + 1 :]:
            col.checked += 1
            km = [s for s in fm.child_generators(cop_of(m))]
            shared = set(kn) & set(km)
            kids = bool(shared) or any(compatible(s, u) for s in km for u in kn)
            if shared:
                trivial += 1
            par = compatible(n, m)
            if par and kids:
                agree += 1
            elif par:
                parents_only += 1
            elif kids:
                children_only += 1
                witness = None
                for s in km:
                    for u in kn:
                        if s != u and compatible(s, u):
                            witness = [s, u]
                            break
                    if witness:
                        break
                if len(records) < VIOLATION_CAP:
                    records.append({"n": n, "m": m, "children": witness})
            else:
                neither += 1
    obs = {
        "both_compatible": agree,
        "parents_only": parents_only,
        "children_only": children_only,
        "neither": neither,
        "shared_child_generator": trivial,
        "children_only_records": records,
        "record_16_18": next((r for r in records if (r["n"], r["m"]) == (16, 18)), None),
    }
    if top >= 24:
        obs["example_16_18"] = {
            "parents_compatible": compatible(16, 18),
            "children_24_12_compatible": compatible(24, 12),
        }
    return col, obs


SUITES = {
    "axis_uniqueness": (suite_axis_uniqueness, {"max_n": 2000, "bases": "naturals;primes;arith:1,3;arith:2,4;arith:3,5;nstar;squarefree", "workers": 1}, False),
    "embedding_naturals": (suite_embedding_naturals, {"max_n": 500}, False),
    "embedding_arith": (suite_embedding_arith, {"max_n": 2000, "samples": 4, "union_pairs": 500, "seed": 7}, False),
    "rotation_invariance": (suite_rotation_invariance, {"max_n": 300}, False),
    "rotation_empty": (suite_rotation_empty, {"max_n": 500, "pairs": "1,3;2,4;2,5;3,6"}, False),
    "flip_sound": (suite_flip_sound, {"max_n": 2000, "samples": 5, "seed": 11}, False),
    "filtration_absent_arith": (suite_filtration_absent_arith, {"max_n": 400, "pairs": "1,1;2,4;1,3;3,5"}, False),
    "fundamental_extension": (suite_fundamental_extension, {"max_n": 2000, "max_r": 6, "workers": 1}, False),
    "almost_goldbach": (suite_almost_goldbach, {"limit": 100000}, False),
    "offspring_split": (suite_offspring_split, {"max_n": 1000, "bases": "naturals;primes;arith:2,4;arith:1,3;nstar;squarefree"}, False),
    "child_bounds": (suite_child_bounds, {"max_n": 1000, "bases": "naturals;primes;arith:2,4;arith:1,3;nstar;squarefree"}, False),
    "regularity": (suite_regularity, {"max_n": 1000, "pairs": "1,1;2,4;1,3;3,5;2,6"}, False),
    "family_symmetry": (suite_family_symmetry, {"max_n": 1000, "childless_max_n": 600, "prime_max_n": 200, "pairs": "1,1;2,4;1,3;3,5"}, False),
    "density_sandwich": (suite_density_sandwich, {"max_n": 10000, "explicit_size": 300, "seed": 3, "workers": 1}, False),
    "complement_identity": (suite_complement_identity, {"max_n": 10000}, False),
    "squarefree_pairs": (suite_squarefree_pairs, {"max_n": 10000, "density_n": 1000000, "samples": 5, "seed": 5}, False),
    "two_summand": (suite_two_summand, {"max_n": 100000, "threshold": 10, "prime_max_n": 10000}, False),
    "xcop_structure": (suite_xcop_structure, {"max_n": 10000, "progression_max_n": 400, "pairs": "1,2;2,4;3,6;5,6"}, False),
    "xcop_family": (suite_xcop_family, {"max_n": 2000, "workers": 1}, False),
    "goldbach": (suite_goldbach, {"limit": 1000000, "samples": 50, "seed": 13}, False),
    "compat_examples": (suite_compat_examples, {}, False),
    "conjecture_8_4_scan": (suite_conjecture_8_4_scan, {"bound": 500}, True),
    "conjecture_11_3_scan": (suite_conjecture_11_3_scan, {"bound": 60}, True),
}


def suite_ids():
    return tuple(SUITES)


def _coerce(suite_id, params, defaults):
    out = dict(defaults)
    for key, value in (params or {}).items():
        if key not in defaults:
            raise BadParams(f"{suite_id} has no parameter {key!r}")
        kind = type(defaults[key])
        try:
            out[key] = kind(value) if not isinstance(value, kind) else value
        except (TypeError, ValueError) as err:
            raise BadParams(f"{key}={value!r} is not a valid {kind.__name__}") from err
        if kind is int and out[key] < 0:
            raise BadParams(f"{key} must be nonnegative")
    return out


def run_suite(suite_id, params=None):
    if suite_id not in SUITES:
        raise UnknownSuite(f"unknown suite {suite_id!r}")
    fn, defaults, observational = SUITES[suite_id]
    p = _coerce(suite_id, params, defaults)
    if "workers" in p and p["workers"] < 1:
        raise BadParams("workers must be at least 1")
    start = time.perf_counter()
    col, obs = fn(p)
    elapsed = time.perf_counter() - start
    if observational:
        verdict = "Observational"
    else:
        verdict = "Fail" if col.count else "Pass"
    return SuiteReport(suite_id, p, col.checked, col.items, col.count, verdict, obs, elapsed)


def hypothesis_scan(conjecture_id, bound):
    ids = {"conjecture_8_4": "conjecture_8_4_scan", "conjecture_11_3": "conjecture_11_3_scan"}
    suite = ids.get(conjecture_id, conjecture_id)
    if suite not in ("conjecture_8_4_scan", "conjecture_11_3_scan"):
        raise UnknownSuite(f"unknown conjecture {conjecture_id!r}")
    return run_suite(suite, {"bound": bound})
