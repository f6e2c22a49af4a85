"""numpy fallback for the compiled kernels; same signatures and results."""

import math

import numpy as np

BACKEND = "numpy"


def prime_flags(limit, segment=32768):
    out = np.zeros(max(limit, 0) + 1, dtype=np.uint8)
    if limit < 2:
        return out
    root = math.isqrt(limit)
    small = np.ones(root + 1, dtype=bool)
    small[:2] = False
    for i in range(2, math.isqrt(root) + 1):
        if small[i]:
            small[i * i :: i] = False
    base = np.flatnonzero(small)
    for lo in range(0, limit + 1, segment):
        hi = min(lo + segment, limit + 1)
        seg = out[lo:hi]
        seg[:] = 1
        for p in base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, -(-lo // p) * p)
            seg[start - lo :: p] = 0
    out[:2] = 0
    return out


def mobius_values(limit):
    mu = np.ones(max(limit, 0) + 1, dtype=np.int8)
    mu[0] = 0
    if limit < 2:
        return mu
    for p in np.flatnonzero(prime_flags(limit)):
        p = int(p)
        mu[p::p] *= -1
        if p <= limit // p:
            mu[p * p :: p * p] = 0
    return mu


def least_summands(flags, members, ns):
    # sweep members in ascending order, resolving every n that pairs at once
    flags = np.asarray(flags, dtype=bool)
    ns = np.asarray(ns, dtype=np.int64)
    result = np.zeros(len(ns), dtype=np.int64)
    open_idx = np.arange(len(ns))
    for x in np.asarray(members, dtype=np.int64):
        if open_idx.size == 0:
            break
        x = int(x)
        open_idx = open_idx[2 * x <= ns[open_idx]]
        if open_idx.size == 0:
            break
        hit = flags[ns[open_idx] - x]
        result[open_idx[hit]] = x
        open_idx = open_idx[~hit]
    return result


def pair_sums(weights, n):
    w = np.asarray(weights, dtype=np.int64)
    if len(w) < 2:
        return np.zeros(0, dtype=np.int64)
    i, j = np.triu_indices(len(w), k=1)
    sums = w[i] + w[j]
    return np.unique(sums[sums != n])
