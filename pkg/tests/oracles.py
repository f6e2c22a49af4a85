"""Brute-force reference implementations used as test oracles.

Deliberately naive: trial division, explicit loops, no shared code with
the package beyond plain integers.
"""

import math


def is_prime(m):
    if m < 2:
        return False
    for q in range(2, math.isqrt(m) + 1):
        if m % q == 0:
            return False
    return True


def factor(m):
    out = {}
    q = 2
    while q * q <= m:
        while m % q == 0:
            out[q] = out.get(q, 0) + 1
            m //= q
        q += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def mobius(m):
    f = factor(m)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def member(kind, x, params=()):
    if kind == "naturals":
        return x >= 1
    if kind == "primes":
        return is_prime(x)
    if kind == "primes5":
        return is_prime(x) and x >= 5
    if kind == "squarefree":
        return x >= 1 and mobius(x) != 0
    if kind == "nstar":
        return x % 6 in (1, 5)
    if kind == "arith":
        a, d = params
        return x >= 1 and x % d == a % d
    if kind == "qcop":
        (p,) = params
        return x >= 1 and all(x % q for q in range(2, p + 1) if is_prime(q))
    raise ValueError(kind)


def cop_weights(n, pred):
    return [x for x in range(1, n) if pred(x) and pred(n - x)]


def child_generators(weights, n):
    """Sums of two weights on distinct real axes; the center takes no part."""
    real = [x for x in weights if 2 * x != n]
    out = set()
    for i, x in enumerate(real):
        for u in real[i + 1 :]:
            if x + u != n:
                out.add(x + u)
    return sorted(out)


def xcop_weights(n, pred):
    return [x for x in range(3, n - 2) if pred(x) or pred(n - x)]


def goldbach_pairs(n):
    return [(p, n - p) for p in range(3, n // 2 + 1) if is_prime(p) and is_prime(n - p)]
