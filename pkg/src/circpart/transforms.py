"""Structure maps between circles of partition.

Rotation, dilation, flipping, filtration, reduction, point stability and
the axis-extension step behind the prime chain starting at 6.
"""

from dataclasses import dataclass

import numpy as np

from . import base_sets as bs
from .cop import Axis, build_cop, center, has_axis, real_axes
from .errors import (
    AxisNotInCoP,
    DegenerateAxis,
    DegenerateTarget,
    EmptyCoP,
    PreconditionViolated,
    WrongBase,
)


@dataclass(frozen=True)
class RotationResult:
    source: object
    level: int
    image_weights: tuple


def rotate(cop, r, substitute=True):
    """Image set of the level-r rotation.

    Each weight x goes to (x + r) mod n; a zero residue is replaced by
    (n + r) mod n when substitute is true. Images that are not weights of
    the source are dropped, so the result may be empty.
    """
    if cop.is_empty:
        raise EmptyCoP("cannot rotate an empty CoP")
    n = cop.n
    w = np.asarray(cop.weights, dtype=np.int64)
    k = (w + r) % n
    if substitute:
        k[k == 0] = (n + r) % n
    present = np.zeros(n, dtype=bool)
    present[w] = True
    keep = k[present[k]]
    return RotationResult(cop, r, tuple(np.unique(keep).tolist()))


def dilate(cop, r, tables=None):
    if cop.n + r <= 1:
        raise DegenerateTarget(f"generator {cop.n + r} is below 2")
    return build_cop(cop.n + r, cop.base, tables)


def delta1_point_map(cop):
    """Point map from C(n) onto C(n+1): identity plus the extra image n of weight 1."""
    if cop.base != bs.naturals():
        raise WrongBase("the unit expansion map is defined over the naturals only")
    out = {x: (x,) for x in cop.weights}
    if 1 in out:
        out[1] = (1, cop.n)
    return out


@dataclass(frozen=True)
class FlipResult:
    source_generator: int
    target_generator: int
    flipping_axis: Axis
    point_map: tuple  # (source weight, target weight) pairs
    l_n: int
    l_m: int
    target_weights: tuple


def flip_arith(cop, tables=None):
    """Constructive flip of a CoP over an arithmetic progression.

    Weights a + i*d are sent to a + (i mod l_m)*d where l_m = l_n//2 + 1.
    The fixed axis is the center when present, else the middle real axis.
    """
    prog = cop.base.progression
    if prog is None or cop.base.exclusions:
        raise WrongBase("flipping needs an arithmetic progression base")
    if cop.is_empty:
        raise EmptyCoP("cannot flip an empty CoP")
    a, d = prog
    n = cop.n
    l_n = (n - 2 * a) // d + 1
    l_m = l_n // 2 + 1
    c = center(cop)
    if c is not None:
        m = a + n // 2
        axis = Axis.degenerate(c)
    else:
        m = a + (n + d) // 2
        axis = Axis((n - d) // 2, (n + d) // 2)
    pairs = tuple((x, a + ((x - a) // d % l_m) * d) for x in cop.weights)
    target = build_cop(m, cop.base, tables)
    return FlipResult(n, m, axis, pairs, l_n, l_m, target.weights)


def flip_violations(res):
    """Invariant breaches of a FlipResult; empty when the flip is sound."""
    problems = []
    image = dict(res.point_map)
    for x in res.flipping_axis.weights:
        if image.get(x) != x:
            problems.append(f"flipping-axis weight {x} moved to {image.get(x)}")
    if len(res.target_weights) != res.l_m:
        problems.append(f"target has {len(res.target_weights)} weights, expected {res.l_m}")
    targets = set(res.target_weights)
    if any(y not in targets for y in image.values()):
        problems.append("image outside the target CoP")
    fixed = set(res.flipping_axis.weights)
    seen = {}
    for x, y in res.point_map:
        if x in fixed:
            continue
        other = seen.get(res.source_generator - y)
        if other is not None:
            problems.append(f"images of {other},{x} sum to {res.source_generator}")
            break
        seen.setdefault(y, x)
    return problems


@dataclass(frozen=True)
class FiltrationWitness:
    filtration_axis: Axis
    target_generator: int
    co_axis: Axis
    completions: tuple  # (a, b): L(u, a) and L(v, b) are axes of the target


def find_filtrations(cop, axis, m_bound, tables=None):
    if not has_axis(cop, axis):
        raise AxisNotInCoP(f"{axis} is not an axis of C({cop.n})")
    co_axes = [ax for ax in real_axes(cop) if ax != axis]
    out = []
    for m in range(2, m_bound + 1):
        target = build_cop(m, cop.base, tables).weight_set
        if any(x in target for x in axis.weights):
            continue
        for ax in co_axes:
            u, v = ax.low, ax.high
            if u in target and v in target:
                out.append(FiltrationWitness(axis, m, ax, (m - u, m - v)))
    return out


def reduce_cop(cop, axis, tables=None):
    """Remove a real axis from the base set; returns (target CoP, point map)."""
    if axis.is_degenerate:
        raise DegenerateAxis("reduction needs a real axis")
    if not has_axis(cop, axis):
        raise AxisNotInCoP(f"{axis} is not an axis of C({cop.n})")
    x, y = axis.low, axis.high
    target = build_cop(cop.n, cop.base.without(x, y), tables)
    mapping = {u: u for u in cop.weights}
    prog = cop.base.progression
    if prog is not None:
        d = prog[1]
        mapping[x] = x + d
        mapping[y] = y - d
    return target, mapping


def _dilation_image(x, m):
    # weights below m stay put; larger ones wrap onto 1..m-1
    if x < m:
        return x
    return (x - 1) % (m - 1) + 1


def is_stable_point(cop, theta, x, kind, r, tables=None):
    """Stability of weight x relative to theta under a rotation or dilation.

    kind is "rotation" or "dilation". The image must lie in theta and be
    a point of the target CoP whose real-axis partner also lies in theta.
    """
    theta = set(theta)
    if x not in cop.weight_set or x not in theta:
        raise PreconditionViolated(f"{x} must be a weight in theta")
    if 2 * x == cop.n:
        raise PreconditionViolated(f"{x} is the center, not on a real axis")
    if kind == "rotation":
        target = cop
        k = (x + r) % cop.n or (cop.n + r) % cop.n
        image = k if k in cop.weight_set else None
    elif kind == "dilation":
        m = cop.n + r
        if m <= 2:
            raise DegenerateTarget(f"generator {m} has no real axes")
        target = build_cop(m, cop.base, tables)
        image = _dilation_image(x, m)
    else:
        raise ValueError("kind must be 'rotation' or 'dilation'")
    if image is None or image not in theta or image not in target.weight_set:
        return False
    z = target.n - image
    return z != image and z in theta


def extend_axis(cop, axis, r, weight=None, tables=None):
    """Shift one end of an axis by r; the result is an axis of C(n + r).

    weight picks the end to move (default the low weight). Returns None
    when the shifted weight is not in the base set.
    """
    if not has_axis(cop, axis):
        raise AxisNotInCoP(f"{axis} is not an axis of C({cop.n})")
    x = axis.low if weight is None else weight
    if x not in axis.weights:
        raise AxisNotInCoP(f"{x} is not on {axis}")
    if not bs.contains(cop.base, x + r, tables):
        return None
    return Axis.of(x + r, cop.n - x)


def almost_goldbach_chain(limit, tables=None):
    """Greedy chain of prime CoPs starting at C(6,P) with its center 3.

    Each step takes the greatest weight y, the next prime q > y and moves
    to generator n + (q - y), which carries the axis L(3, q).
    """
    if limit < 6:
        raise ValueError("limit must be at least 6")
    t = tables if tables is not None else bs.default_tables()
    prime_list = np.flatnonzero(t.prime)
    chain = [(6, Axis.degenerate(3))]
    n = 6
    while True:
        y = build_cop(n, bs.primes(), t).weights[-1]
        i = int(np.searchsorted(prime_list, y, side="right"))
        if i >= len(prime_list):
            t.require(y + 1 + t.bound)
        q = int(prime_list[i])
        nxt = n + q - y
        if nxt > limit:
            return chain
        n = nxt
        chain.append((n, Axis.of(3, q)))


def find_nonempty_dilation(cop, r_lo, r_hi, tables=None):
    """Smallest nonzero |r| in [r_lo, r_hi] with C(n + r) nonempty; ties go to r > 0.

    The source may itself be empty; that is the interesting case.
    """
    candidates = sorted((r for r in range(r_lo, r_hi + 1) if r != 0), key=lambda r: (abs(r), r < 0))
    for r in candidates:
        if cop.n + r >= 2 and not build_cop(cop.n + r, cop.base, tables).is_empty:
            return r
    return None
