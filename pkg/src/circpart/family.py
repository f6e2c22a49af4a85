"""Children, complete families, connectivity, isomorphism and compatibility."""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .cop import Axis, build_cop, center, has_axis, nu
from .errors import AxisNotInCoP, BaseMismatch, DegenerateAxis, EmptyCoP, TooFewAxisPoints


@dataclass(frozen=True)
class ChildRecord:
    child_generator: int
    principal_axes: tuple = ()  # (x, u) with x < u, taken from distinct parent axes


@dataclass(frozen=True)
class FamilyRecord:
    parent: object
    children: tuple

    @property
    def size(self):
        return len(self.children) + 1

    @property
    def generators(self):
        return tuple(ch.child_generator for ch in self.children)


def _axis_weights(cop, include_center=False):
    c = None if include_center else center(cop)
    return np.asarray([x for x in cop.weights if x != c], dtype=np.int64)


def child_generators(cop, include_center=False):
    """Sums x + u of weights on distinct axes, ascending.

    By default the center takes no part, since it lies on no real axis;
    include_center=True lets it pair like any other weight.
    """
    return tuple(kernels.pair_sums(_axis_weights(cop, include_center), cop.n).tolist())


def _principal_pairs(w, s, present):
    # pairs (x, s - x) with x < s - x, both non-center weights
    xs = w[(2 * w < s) & (s - w < len(present))]
    xs = xs[present[s - xs]]
    return tuple((int(x), int(s - x)) for x in xs)


def children(cop, witnesses=True, include_center=False):
    gens = child_generators(cop, include_center)
    if not witnesses:
        return [ChildRecord(s) for s in gens]
    w = _axis_weights(cop, include_center)
    present = np.zeros(cop.n, dtype=bool)
    present[w] = True
    return [ChildRecord(s, _principal_pairs(w, s, present)) for s in gens]


def complete_family(cop, witnesses=True, include_center=False):
    return FamilyRecord(cop, tuple(children(cop, witnesses, include_center)))


def offspring_split(fam):
    n = fam.parent.n
    gens = fam.generators
    return [s for s in gens if s < n], [s for s in gens if s > n]


def children_bounds(fam):
    """(lower, actual, upper) with upper 2v(v-1) and lower 4(v-1) for v >= 2 real axes."""
    v = nu(fam.parent)
    upper = 2 * v * (v - 1)
    lower = 4 * (v - 1) if v >= 2 else 0
    return lower, len(fam.children), upper


def family_csv_rows(fam):
    """(parent, child, x, u) rows, one per principal axis."""
    rows = []
    for ch in fam.children:
        for x, u in ch.principal_axes:
            rows.append((fam.parent.n, ch.child_generator, x, u))
    return rows


def _same_base(a, b):
    if a.base != b.base:
        raise BaseMismatch("both CoPs need the same base set")


def is_connected(a, b):
    """A path L(x, s - x) into b = C(s) from a common weight x, or None.

    Real axes of b are preferred; the center of b only serves when it is
    the sole common weight.
    """
    _same_base(a, b)
    common = sorted(a.weight_set & b.weight_set)
    if not common:
        return None
    s = b.n
    for x in common:
        if 2 * x != s:
            return Axis.of(x, s - x)
    return Axis.degenerate(common[0])


def is_fully_connected(a, b):
    _same_base(a, b)
    return a.weight_set <= b.weight_set


@dataclass(frozen=True)
class ConnectedPairs:
    pair_count: int  # unordered child pairs sharing a weight
    multiplicity_count: int  # sum over pairs of shared weights
    lower_bound: int
    meets_bound: bool


def connected_children_pairs(fam, tables=None):
    n_a = 2 * nu(fam.parent)
    if n_a <= 3:
        raise TooFewAxisPoints(f"parent has {n_a} axis points, need more than 3")
    bound = n_a * (n_a - 2) * (n_a - 3) // 2
    kids = [build_cop(s, fam.parent.base, tables).weight_set for s in fam.generators]
    pairs = 0
    weighted = 0
    for i in range(len(kids)):
        for j in range(i + 1, len(kids)):
            shared = len(kids[i] & kids[j])
            if shared:
                pairs += 1
                weighted += shared
    return ConnectedPairs(pairs, weighted, bound, pairs >= bound)


@dataclass(frozen=True)
class IsomorphismReport:
    degree: int
    ratio_a: Fraction
    ratio_b: Fraction
    classification: str  # High, Low, NotIsomorphic

    @property
    def isomorphic(self):
        return self.degree >= 1


def family_generator_set(cop, include_center=False):
    return frozenset((cop.n,) + child_generators(cop, include_center))


def isomorphism_degree(a, b):
    _same_base(a, b)
    fa, fb = family_generator_set(a), family_generator_set(b)
    degree = len(fa & fb)
    ra, rb = Fraction(degree, len(fa)), Fraction(degree, len(fb))
    if degree == 0:
        label = "NotIsomorphic"
    elif ra == 1 or rb == 1:
        label = "High"
    else:
        label = "Low"
    return IsomorphismReport(degree, ra, rb, label)


@dataclass(frozen=True)
class CompatibilityVerdict:
    kind: str  # Compatible, WeaklyCompatible, Incompatible
    cover: int = None
    removed: int = None
    witnesses: tuple = field(default=())  # all (removed, cover) found; removed is None when compatible


def _covers(union, exempt, base, tables):
    sums = sorted({x + y for x in union for y in union})
    found = []
    for r in sums:
        if r < 2:
            continue
        cover = build_cop(r, base, tables).weight_set
        if not union <= cover:
            continue
        if all(r - x in union for x in union if x not in exempt):
            found.append(r)
    return found


def compatible_cover(a, b, tables=None):
    """Least cover of a full compatibility, or None; no weak search."""
    _same_base(a, b)
    if a.is_empty or b.is_empty:
        raise EmptyCoP("compatibility needs two nonempty CoPs")
    union = a.weight_set | b.weight_set
    exempt = {x for x in union if 2 * x in (a.n, b.n)}
    found = _covers(union, exempt, a.base, tables)
    return found[0] if found else None


def check_compatibility(a, b, tables=None):
    """Search covers r among pairwise sums of the union of both weight sets.

    A cover contains the union and pairs each non-exempt union weight with
    another union weight summing to r (pairing a weight with itself is fine
    at the cover's center). Exempt weights are the centers of the sources.
    Failing that, every single-weight removal is tried.
    """
    _same_base(a, b)
    if a.is_empty or b.is_empty:
        raise EmptyCoP("compatibility needs two nonempty CoPs")
    union = a.weight_set | b.weight_set
    exempt = {x for x in union if 2 * x in (a.n, b.n)}
    full = _covers(union, exempt, a.base, tables)
    if full:
        return CompatibilityVerdict("Compatible", full[0], None, tuple((None, r) for r in full))
    weak = []
    for w in sorted(union):
        for r in _covers(union - {w}, exempt, a.base, tables):
            weak.append((w, r))
    if weak:
        w, r = weak[0]
        return CompatibilityVerdict("WeaklyCompatible", r, w, tuple(weak))
    return CompatibilityVerdict("Incompatible")


def open_cop(cop, axis):
    """Interior weights and gates after opening a CoP along a real axis."""
    if axis.is_degenerate:
        raise DegenerateAxis("a CoP opens along a real axis")
    if not has_axis(cop, axis):
        raise AxisNotInCoP(f"{axis} is not an axis of C({cop.n})")
    interior = tuple(x for x in cop.weights if x not in (axis.low, axis.high))
    return interior, (axis.low, axis.high)


def two_member_community(cop, axis, other):
    """True iff a gate of the opened CoP has a real-axis partner in the other CoP."""
    _same_base(cop, other)
    _, gates = open_cop(cop, axis)
    return any(g in other.weight_set and 2 * g != other.n for g in gates)
