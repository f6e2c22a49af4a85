"""Base sets: declarative specs, sieve tables and membership.

A base set is described by a frozen :class:`BaseSetSpec`. Membership for
the prime and squarefree variants is read from a :class:`SieveTables`
instance whose bound is fixed at construction; asking beyond it raises
:class:`SieveTooSmall`. All densities are exact fractions.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import NotPrime, ParseError, SieveTooSmall

KINDS = ("naturals", "arith", "nstar", "primes", "primes5", "squarefree", "qcop", "explicit", "union")
_SIEVE_KINDS = frozenset({"primes", "primes5", "squarefree"})
_NO_ARGS = frozenset({"naturals", "nstar", "primes", "primes5", "squarefree"})

DEFAULT_BOUND = 1_000_000


def is_prime_trial(p):
    if p < 2:
        return False
    for q in range(2, math.isqrt(p) + 1):
        if p % q == 0:
            return False
    return True


@dataclass(frozen=True)
class BaseSetSpec:
    kind: str
    params: tuple = ()
    exclusions: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown base set kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(self, "exclusions", tuple(sorted(set(int(x) for x in self.exclusions))))
        if any(x < 1 for x in self.exclusions):
            raise ValueError("exclusions must be positive")
        if self.kind in _NO_ARGS and self.params:
            raise ValueError(f"{self.kind} takes no parameters")
        if self.kind == "arith":
            if len(self.params) != 2:
                raise ValueError("arith needs (a, d)")
            a, d = self.params
            if not 0 < a <= d:
                raise ValueError("arith requires 0 < a <= d")
            if any(x % d != a % d for x in self.exclusions):
                raise ValueError("arith exclusions must lie in the progression")
        elif self.kind == "qcop":
            if len(self.params) != 1 or not is_prime_trial(self.params[0]):
                raise NotPrime("qcop needs a prime parameter")
        elif self.kind == "explicit":
            vals = self.params
            if any(v < 1 for v in vals) or any(b <= a for a, b in zip(vals, vals[1:])):
                raise ValueError("explicit values must be strictly ascending positive integers")
        elif self.kind == "union":
            if len(self.params) < 2 or not all(isinstance(p, BaseSetSpec) for p in self.params):
                raise ValueError("union needs at least two base sets")
            if any(p.kind == "union" for p in self.params):
                raise ValueError("nested unions are not supported")
            if self.exclusions:
                raise ValueError("put exclusions on the union members")

    @property
    def needs_sieve(self):
        if self.kind == "union":
            return any(p.needs_sieve for p in self.params)
        return self.kind in _SIEVE_KINDS

    @property
    def progression(self):
        """(a, d) for arithmetic bases (naturals counts as (1, 1)), else None."""
        if self.kind == "arith":
            return self.params
        if self.kind == "naturals":
            return (1, 1)
        return None

    def without(self, *xs):
        """Same base set with extra exclusions."""
        if self.kind == "union":
            raise ValueError("exclusions on a union are not supported")
        return BaseSetSpec(self.kind, self.params, self.exclusions + tuple(xs))

    def __str__(self):
        return format_base_set(self)


def naturals():
    return BaseSetSpec("naturals")


def arith(a, d, exclude=()):
    return BaseSetSpec("arith", (a, d), tuple(exclude))


def nstar():
    return BaseSetSpec("nstar")


def primes():
    return BaseSetSpec("primes")


def primes_from5():
    return BaseSetSpec("primes5")


def squarefree():
    return BaseSetSpec("squarefree")


def primorial_coprime(p):
    return BaseSetSpec("qcop", (p,))


def explicit(values):
    return BaseSetSpec("explicit", tuple(sorted(set(int(v) for v in values))))


def union(*specs):
    return BaseSetSpec("union", tuple(specs))


# -- text form ---------------------------------------------------------------

def format_base_set(spec):
    if spec.kind == "union":
        return "|".join(format_base_set(p) for p in spec.params)
    text = spec.kind
    if spec.params:
        text += ":" + ",".join(str(v) for v in spec.params)
    elif spec.kind == "explicit":
        text += ":"
    if spec.exclusions:
        text += "!" + ",".join(str(v) for v in spec.exclusions)
    return text


_KIND_RE = re.compile(r"[a-z]+[0-9]*")
_INT_RE = re.compile(r"[0-9]+")


def _parse_ints(text, pos, allow_empty=False):
    values = []
    if allow_empty and (pos >= len(text) or text[pos] in "!|"):
        return values, pos
    while True:
        m = _INT_RE.match(text, pos)
        if not m:
            raise ParseError("expected integer", pos)
        values.append(int(m.group()))
        pos = m.end()
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        return values, pos


def _parse_single(text, start, end):
    chunk = text[:end]
    m = _KIND_RE.match(chunk, start)
    if not m or m.group() not in KINDS or m.group() == "union":
        raise ParseError("unknown base set", start)
    kind = m.group()
    pos = m.end()
    params = []
    if kind in _NO_ARGS:
        if pos < end and chunk[pos] == ":":
            raise ParseError(f"{kind} takes no parameters", pos)
    else:
        if pos >= end or chunk[pos] != ":":
            raise ParseError("expected ':'", pos)
        args_pos = pos + 1
        params, pos = _parse_ints(chunk, args_pos, allow_empty=(kind == "explicit"))
        if kind == "arith":
            if len(params) != 2:
                raise ParseError("arith needs exactly two parameters a,d", args_pos)
            if not 0 < params[0] <= params[1]:
                raise ParseError("arith requires 0 < a <= d", args_pos)
        elif kind == "qcop":
            if len(params) != 1:
                raise ParseError("qcop needs one parameter", args_pos)
            if not is_prime_trial(params[0]):
                raise ParseError("qcop parameter must be prime", args_pos)
        elif kind == "explicit":
            if any(v < 1 for v in params) or any(b <= a for a, b in zip(params, params[1:])):
                raise ParseError("explicit values must be strictly ascending and positive", args_pos)
    excl = []
    if pos < end and chunk[pos] == "!":
        excl_pos = pos + 1
        excl, pos = _parse_ints(chunk, excl_pos)
        if any(v < 1 for v in excl):
            raise ParseError("exclusions must be positive", excl_pos)
        if kind == "arith" and any(v % params[1] != params[0] % params[1] for v in excl):
            raise ParseError("arith exclusions must lie in the progression", excl_pos)
    if pos != end:
        raise ParseError("unexpected character", pos)
    return BaseSetSpec(kind, tuple(params), tuple(excl))


def parse_base_set(text):
    """Parse the canonical text form, e.g. ``arith:1,6!1`` or ``nstar|explicit:2,3``."""
    text = text.strip()
    if not text:
        raise ParseError("empty base set", 0)
    parts = []
    start = 0
    while True:
        bar = text.find("|", start)
        end = len(text) if bar < 0 else bar
        parts.append(_parse_single(text, start, end))
        if bar < 0:
            break
        start = bar + 1
    if len(parts) == 1:
        return parts[0]
    return BaseSetSpec("union", tuple(parts))


# -- sieve tables ------------------------------------------------------------

class SieveTables:
    """Primality flags and Moebius values over 0..bound, immutable once built."""

    def __init__(self, bound):
        if bound < 1:
            raise ValueError("sieve bound must be positive")
        self.bound = int(bound)
        prime = kernels.prime_flags(self.bound).view(bool)
        prime.flags.writeable = False
        mu = kernels.mobius_values(self.bound)
        mu.flags.writeable = False
        self.prime = prime
        self.mobius = mu
        self._masks = {}

    def require(self, x):
        if x > self.bound:
            raise SieveTooSmall(x, self.bound)

    def full_mask(self, spec):
        mask = self._masks.get(spec)
        if mask is None:
            mask = _build_mask(spec, self.bound, self)
            mask.flags.writeable = False
            self._masks[spec] = mask
        return mask


_default_tables = None
_default_bound = DEFAULT_BOUND


def set_default_bound(bound):
    """Change the bound used when no tables are passed explicitly."""
    global _default_tables, _default_bound
    _default_bound = int(bound)
    if _default_tables is not None and _default_tables.bound != _default_bound:
        _default_tables = None


def default_tables():
    global _default_tables
    if _default_tables is None:
        _default_tables = SieveTables(_default_bound)
    return _default_tables


def _tables(tables):
    return tables if tables is not None else default_tables()


def _build_mask(spec, limit, tables):
    idx = np.arange(limit + 1)
    kind = spec.kind
    if kind == "naturals":
        mask = idx >= 1
    elif kind == "arith":
        a, d = spec.params
        mask = (idx % d == a % d) & (idx >= 1)
    elif kind == "nstar":
        r = idx % 6
        mask = (r == 1) | (r == 5)
    elif kind == "primes":
        mask = tables.prime[: limit + 1].copy()
    elif kind == "primes5":
        mask = tables.prime[: limit + 1].copy()
        mask[:5] = False
    elif kind == "squarefree":
        mask = tables.mobius[: limit + 1] != 0
    elif kind == "qcop":
        mask = idx >= 1
        for q in range(2, spec.params[0] + 1):
            if is_prime_trial(q):
                mask[::q] = False
    elif kind == "explicit":
        mask = np.zeros(limit + 1, dtype=bool)
        vals = [v for v in spec.params if v <= limit]
        mask[vals] = True
    else:
        mask = np.zeros(limit + 1, dtype=bool)
        for part in spec.params:
            mask |= member_mask(part, limit, tables)
    for x in spec.exclusions:
        if x <= limit:
            mask[x] = False
    return mask


def member_mask(spec, limit, tables=None):
    """Boolean array m of length limit+1 with m[x] true iff x is in the base set."""
    if spec.needs_sieve:
        t = _tables(tables)
        t.require(limit)
        return t.full_mask(spec)[: limit + 1]
    return _build_mask(spec, limit, None)


def contains(spec, x, tables=None):
    if x < 1:
        return False
    kind = spec.kind
    if x in spec.exclusions:
        return False
    if kind == "union":
        return any(contains(p, x, tables) for p in spec.params)
    if kind in _SIEVE_KINDS:
        t = _tables(tables)
        t.require(x)
        if kind == "squarefree":
            return bool(t.mobius[x] != 0)
        return bool(t.prime[x]) and (kind == "primes" or x >= 5)
    if kind == "naturals":
        return True
    if kind == "arith":
        a, d = spec.params
        return x % d == a % d
    if kind == "nstar":
        return x % 6 in (1, 5)
    if kind == "qcop":
        return all(x % q for q in range(2, spec.params[0] + 1) if is_prime_trial(q))
    return x in spec.params


def members(spec, bound, tables=None):
    """Members of the base set in [1, bound], ascending."""
    return np.flatnonzero(member_mask(spec, bound, tables)).tolist()


def count_in_initial_segment(spec, n, tables=None):
    return int(np.count_nonzero(member_mask(spec, n, tables)))


def density_estimate(spec, n, tables=None):
    return Fraction(count_in_initial_segment(spec, n, tables), n)


def mobius(m, tables=None):
    if m < 1:
        raise ValueError("mobius needs m >= 1")
    t = _tables(tables)
    t.require(m)
    return int(t.mobius[m])


def primorial(p):
    if not is_prime_trial(p):
        raise NotPrime(f"{p} is not prime")
    out = 1
    for q in range(2, p + 1):
        if is_prime_trial(q):
            out *= q
    return out


def alpha(p):
    """Exact density of integers coprime to the primorial of p."""
    if not is_prime_trial(p):
        raise NotPrime(f"{p} is not prime")
    out = Fraction(1)
    for q in range(2, p + 1):
        if is_prime_trial(q):
            out *= Fraction(q - 1, q)
    return out
