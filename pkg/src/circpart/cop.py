"""Circles of partition and their axes."""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import base_sets as bs
from .errors import BadResidue, BaseMismatch, IsCenter, NotAPoint


@dataclass(frozen=True, order=True)
class Axis:
    """Axis joining two weights; low == high marks the degenerate axis at the center."""

    low: int
    high: int

    @classmethod
    def of(cls, x, y):
        return cls(min(x, y), max(x, y))

    @classmethod
    def degenerate(cls, center):
        return cls(center, center)

    @property
    def is_degenerate(self):
        return self.low == self.high

    @property
    def weights(self):
        return (self.low,) if self.is_degenerate else (self.low, self.high)

    def to_json(self):
        if self.is_degenerate:
            return {"kind": "degenerate", "center": self.low}
        return {"kind": "real", "low": self.low, "high": self.high}

    def __str__(self):
        if self.is_degenerate:
            return f"L({self.low})"
        return f"L({self.low},{self.high})"


@dataclass(frozen=True)
class CoP:
    n: int
    base: bs.BaseSetSpec
    weights: tuple

    @cached_property
    def weight_set(self):
        return frozenset(self.weights)

    def __contains__(self, x):
        return x in self.weight_set

    def __len__(self):
        return len(self.weights)

    @property
    def is_empty(self):
        return not self.weights

    def to_json(self):
        return {"n": self.n, "base": str(self.base), "weights": list(self.weights)}


def build_cop(n, base, tables=None):
    """All x in [1, n-1] with x and n - x both in the base set."""
    if n < 2:
        raise ValueError("generator must be at least 2")
    mask = bs.member_mask(base, n, tables)
    hits = mask[1:n] & mask[n - 1 : 0 : -1]
    return CoP(n, base, tuple((np.flatnonzero(hits) + 1).tolist()))


def center(cop):
    if cop.n % 2 == 0 and cop.n // 2 in cop.weight_set:
        return cop.n // 2
    return None


def axes(cop):
    """Real axes in ascending order of their low weight, then the degenerate axis if present."""
    w = cop.weights
    k = len(w)
    out = [Axis(w[i], w[k - 1 - i]) for i in range(k // 2)]
    c = center(cop)
    if c is not None:
        out.append(Axis.degenerate(c))
    return out


def real_axes(cop):
    w = cop.weights
    k = len(w)
    return [Axis(w[i], w[k - 1 - i]) for i in range(k // 2)]


def nu(cop):
    return len(cop.weights) // 2


def axis_partner(cop, x):
    if x not in cop.weight_set:
        raise NotAPoint(f"{x} is not a weight of C({cop.n})")
    if 2 * x == cop.n:
        raise IsCenter(f"{x} is the center of C({cop.n})")
    return cop.n - x


def chord_length(x, y):
    return abs(x - y)


def has_axis(cop, axis):
    if axis.is_degenerate:
        return 2 * axis.low == cop.n and axis.low in cop.weight_set
    return axis.low + axis.high == cop.n and axis.low in cop.weight_set and axis.high in cop.weight_set


@dataclass(frozen=True)
class EmbeddingClass:
    relation: str  # Equal, ProperSubset, ProperSuperset, Incomparable
    alignment: str  # Aligned, ReverseAligned, NotApplicable
    median_a: Fraction = None
    median_b: Fraction = None


def median(cop):
    if cop.is_empty:
        return None
    return Fraction(cop.weights[0] + cop.weights[-1], 2)


def classify_embedding(a, b):
    if a.base != b.base:
        raise BaseMismatch("embedding needs a common base set")
    sa, sb = a.weight_set, b.weight_set
    if sa == sb:
        relation = "Equal"
    elif sa < sb:
        relation = "ProperSubset"
    elif sa > sb:
        relation = "ProperSuperset"
    else:
        relation = "Incomparable"
    alignment = "NotApplicable"
    if relation == "ProperSubset" and a.n != b.n:
        alignment = "Aligned" if a.n < b.n else "ReverseAligned"
    elif relation == "ProperSuperset" and a.n != b.n:
        alignment = "Aligned" if a.n > b.n else "ReverseAligned"
    return EmbeddingClass(relation, alignment, median(a), median(b))


def verify_pair_symmetry(cop):
    w = cop.weights
    k = len(w)
    return all(w[i] + w[k - 1 - i] == cop.n for i in range(k))


def nstar_decomposition_check(n, include_one=False, tables=None):
    """C(n, N*) equals C(n-2, M_{5,6}) union C(n+2, M_{1,6} without 1).

    The right side never contains 1 or n-1, so the identity only holds with
    1 removed from N*; include_one=True checks the literal N* instead.
    """
    if n % 6:
        raise BadResidue(f"{n} is not divisible by 6")
    left_base = bs.nstar() if include_one else bs.nstar().without(1)
    left = build_cop(n, left_base, tables).weight_set
    lower = build_cop(n - 2, bs.arith(5, 6), tables).weight_set
    upper = build_cop(n + 2, bs.arith(1, 6, exclude=(1,)), tables).weight_set
    return left == lower | upper
