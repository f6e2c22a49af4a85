"""Finite-n density of points, the complement identity and two-summand scans."""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import base_sets as bs
from . import kernels
from .cop import build_cop, nu
from .errors import EmptyCoP, PrimesNotCovered, TooSmall


@dataclass(frozen=True)
class DensityReport:
    n: int
    subject: bs.BaseSetSpec
    ambient: bs.BaseSetSpec
    axis_hits: int
    nu_total: int
    estimate: Fraction
    lower_bound: Fraction
    upper_bound: Fraction
    # bounds from the whole initial segment, only for a naturals ambient
    segment_lower: Fraction = None
    segment_upper: Fraction = None

    def csv_row(self):
        return (self.n, self.axis_hits, self.nu_total, str(self.estimate), str(self.lower_bound), str(self.upper_bound))


CSV_HEADER = ("n", "hits", "nu", "estimate", "lower", "upper")


def _axis_ends(cop):
    v = nu(cop)
    w = np.asarray(cop.weights, dtype=np.int64)
    return w[:v], w[::-1][:v]


def point_density_estimate(H, M, n, tables=None):
    """Share of real axes of C(n, M) touching H, with a sandwich of bounds.

    With h the number of real-axis points of C(n, M) lying in H, every
    touched axis holds one or two of them, so floor(h/2)/v <= hits/v <= h/v.
    """
    cop = build_cop(n, M, tables)
    v = nu(cop)
    if v == 0:
        raise EmptyCoP(f"C({n}) has no real axes")
    h_mask = bs.member_mask(H, n, tables)
    low, high = _axis_ends(cop)
    in_low, in_high = h_mask[low], h_mask[high]
    hits = int(np.count_nonzero(in_low | in_high))
    h = int(np.count_nonzero(in_low)) + int(np.count_nonzero(in_high))
    seg_lo = seg_hi = None
    if M == bs.naturals():
        total = int(np.count_nonzero(h_mask))
        seg_lo = Fraction(total // 2, v)
        seg_hi = Fraction(total, v)
    return DensityReport(
        n, H, M, hits, v, Fraction(hits, v), Fraction(h // 2, v), Fraction(min(h, v), v), seg_lo, seg_hi
    )


def complement_identity_check(H, n, tables=None):
    """1 - (axes touching H + axes avoiding H) / v over the naturals; exactly 0.

    The avoiding count is nu(n, N minus H), read off the member list of the
    complement rather than from the hit mask.
    """
    v = (n - 1) // 2
    if v < 1:
        raise TooSmall("need n >= 3 for a real axis")
    h_mask = bs.member_mask(H, n, tables)
    low = np.arange(1, v + 1)
    hits = int(np.count_nonzero(h_mask[low] | h_mask[n - low]))
    comp = np.flatnonzero(~h_mask[:n])
    comp = comp[comp >= 1]
    in_comp = np.zeros(n + 1, dtype=bool)
    in_comp[comp] = True
    lower = comp[2 * comp < n]
    avoiding = int(np.count_nonzero(in_comp[n - lower]))
    return 1 - Fraction(hits + avoiding, v)


def least_summand_table(H, ns, tables=None):
    """For each n in ns the least x in H with n - x in H (x <= n/2), else 0."""
    ns = np.asarray(ns, dtype=np.int64)
    if ns.size == 0:
        return ns.copy()
    top = int(ns.max())
    mask = bs.member_mask(H, top, tables)
    members = np.flatnonzero(mask)
    return kernels.least_summands(mask.view(np.uint8), members, ns)


def two_summand_scan(H, lo, hi, step=1, tables=None):
    """All n in range(lo, hi+1, step) that are not a sum of two members of H."""
    ns = np.arange(lo, hi + 1, step, dtype=np.int64)
    least = least_summand_table(H, ns, tables)
    return ns[least == 0].tolist()


def mobius_pair_representation(n, tables=None):
    """Least z1 <= n/2 with mu(z1) = mu(n - z1) != 0, as (z1, n - z1)."""
    if n < 2:
        raise TooSmall("need n >= 2")
    t = tables if tables is not None else bs.default_tables()
    t.require(n)
    mu = t.mobius
    z = np.arange(1, n // 2 + 1)
    ok = (mu[z] != 0) & (mu[z] == mu[n - z])
    idx = np.flatnonzero(ok)
    if idx.size == 0:
        return None
    z1 = int(z[idx[0]])
    return z1, n - z1


def coprime_pair_representation(n):
    if n < 3:
        raise TooSmall("need n >= 3")
    return 1, n - 1


def coprime_pair_count(n):
    """Number of z1 <= z2 with z1 + z2 = n and gcd(z1, z2) = 1."""
    return sum(1 for z in range(1, n // 2 + 1) if math.gcd(z, n - z) == 1)


def conditional_ratio(B, n, tables=None):
    """pi(n) / |B cap [1, n]|, after checking that B holds every prime up to n."""
    t = tables if tables is not None else bs.default_tables()
    t.require(n)
    b_mask = bs.member_mask(B, n, t)
    prime = t.prime[: n + 1]
    missing = np.flatnonzero(prime & ~b_mask)
    if missing.size:
        raise PrimesNotCovered(f"prime {int(missing[0])} is not in {B}")
    return Fraction(int(np.count_nonzero(prime)), int(np.count_nonzero(b_mask)))


def longest_progression(values):
    """Longest arithmetic progression (length >= 2) inside a finite set, as a tuple."""
    vals = sorted(set(values))
    present = set(vals)
    best = tuple(vals[:1])
    for i, a in enumerate(vals):
        for b in vals[i + 1 :]:
            d = b - a
            if a - d in present:
                continue
            run = [a, b]
            while run[-1] + d in present:
                run.append(run[-1] + d)
            if len(run) > len(best) or (len(run) == len(best) and tuple(run) < best):
                best = tuple(run)
    return best


def greedy_progressions(values, min_length=3):
    """Repeatedly strip the longest progression until none of min_length remains."""
    rest = set(values)
    out = []
    while rest:
        ap = longest_progression(rest)
        if len(ap) < min_length:
            break
        out.append(ap)
        rest -= set(ap)
    return out
