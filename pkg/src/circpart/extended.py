"""Extended circles: points x in (2, n-2) where x or n - x lies in the base set."""

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import base_sets as bs
from . import kernels
from .cop import Axis, build_cop
from .errors import TooSmall


@dataclass(frozen=True)
class XCoP:
    n: int
    base: bs.BaseSetSpec
    weights: tuple
    in_base: tuple = field(default=(), compare=False, repr=False)  # per weight: is it itself in M

    @cached_property
    def weight_set(self):
        return frozenset(self.weights)

    @cached_property
    def member_flags(self):
        return dict(zip(self.weights, self.in_base))

    @property
    def is_empty(self):
        return not self.weights

    def to_json(self):
        return {"n": self.n, "base": str(self.base), "weights": list(self.weights)}


def build_xcop(n, base, tables=None):
    if n < 2 or n % 2:
        raise TooSmall("extended CoPs need an even generator >= 2")
    mask = bs.member_mask(base, n, tables)
    x = np.arange(3, max(n - 2, 3))
    keep = mask[x] | mask[n - x]
    ws = x[keep]
    return XCoP(n, base, tuple(ws.tolist()), tuple(mask[ws].tolist()))


def xcop_center(x):
    c = x.n // 2
    return c if c in x.weight_set else None


@dataclass(frozen=True)
class AxisClassification:
    full_axes: tuple
    half_axes: tuple
    center: int = None

    @property
    def nu(self):
        return len(self.full_axes)

    @property
    def nu_bar(self):
        return len(self.half_axes)

    @property
    def nu_star(self):
        return len(self.full_axes) + len(self.half_axes)


def classify_axes(x):
    w = x.weights
    k = len(w)
    flags = x.member_flags
    full, half = [], []
    for i in range(k // 2):
        ax = Axis(w[i], w[k - 1 - i])
        (full if flags[ax.low] and flags[ax.high] else half).append(ax)
    return AxisClassification(tuple(full), tuple(half), xcop_center(x))


def has_full_prime_axis(n, tables=None):
    """n is a sum of two odd primes: a full axis, or a prime center (n = 2p)."""
    x = build_xcop(n, bs.primes(), tables)
    cls = classify_axes(x)
    return cls.nu >= 1 or (cls.center is not None and x.member_flags[cls.center])


def extended_family_generators(x):
    """{n} together with sums of weights on distinct axes; the center is left out."""
    c = xcop_center(x)
    w = np.asarray([v for v in x.weights if v != c], dtype=np.int64)
    sums = set(kernels.pair_sums(w, x.n).tolist())
    sums.add(x.n)
    return tuple(sorted(sums))


def predicted_family(n):
    """Closed form for primes: every even number from 8 to 2n - 8."""
    return tuple(range(8, 2 * n - 7, 2))


def xcop_symmetry_checks(x):
    w = x.weights
    k = len(w)
    if any(w[i] + w[k - 1 - i] != x.n for i in range(k)):
        return False
    fam = extended_family_generators(x)
    kids = [s for s in fam if s != x.n]
    kid_set = set(kids)
    if any(2 * x.n - s not in kid_set for s in kids):
        return False
    if len(kids) % 2:
        return False
    return (k % 2 == 1) == (xcop_center(x) is not None)


@dataclass(frozen=True)
class ExtendedDensity:
    n: int
    nu_star: int
    estimate: float
    reference: float

    @property
    def ratio(self):
        return self.estimate / self.reference


def xcop_density_estimate(n, tables=None):
    if n < 8:
        raise TooSmall("need n >= 8")
    cls = classify_axes(build_xcop(n, bs.primes(), tables))
    est = cls.nu_star / ((n - 1) // 2)
    return ExtendedDensity(n, cls.nu_star, est, 1 / math.log(n))


def xcop_embedding_and_axis_checks(n, m_values=None, tables=None):
    """Plain prime points above 2 sit in C*(n,P), an axis is shared, and F_m <= F_n."""
    if n < 8:
        raise TooSmall("need n >= 8")
    P = bs.primes()
    x = build_xcop(n, P, tables)
    plain = build_cop(n, P, tables)
    above = [w for w in plain.weights if w > 2]
    if not set(above) <= x.weight_set:
        return False
    if above:
        xa = classify_axes(x)
        shared = {(a.low, a.high) for a in xa.full_axes}
        k = len(above)
        plain_axes = {(above[i], above[k - 1 - i]) for i in range((k + 1) // 2)}
        if not plain_axes & (shared | ({(xa.center, xa.center)} if xa.center else set())):
            return False
    if m_values is None:
        evens = list(range(16, n, 2))
        stride = max(1, len(evens) // 8)
        m_values = evens[::stride]
    fn = set(extended_family_generators(x))
    for m in m_values:
        if m >= n:
            continue
        if not set(extended_family_generators(build_xcop(m, P, tables))) <= fn:
            return False
    return True
