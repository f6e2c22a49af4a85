# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops. Semantics match circpart._kernels_py exactly."""

import numpy as np
cimport numpy as cnp

from libc.string cimport memset

cnp.import_array()

BACKEND = "cython"


cdef Py_ssize_t _isqrt(Py_ssize_t n):
    cdef Py_ssize_t r = <Py_ssize_t>(n ** 0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def prime_flags(Py_ssize_t limit, Py_ssize_t segment=32768):
    """uint8 array f with f[m] = 1 iff m is prime, 0 <= m <= limit (segmented sieve)."""
    out = np.zeros(max(limit, 0) + 1, dtype=np.uint8)
    if limit < 2:
        return out
    cdef unsigned char[::1] flags = out
    cdef Py_ssize_t root = _isqrt(limit)
    cdef Py_ssize_t i, j, p, lo, hi, start, nbase = 0

    small_arr = np.ones(root + 1, dtype=np.uint8)
    cdef unsigned char[::1] small = small_arr
    small[0] = 0
    if root >= 1:
        small[1] = 0
    i = 2
    while i * i <= root:
        if small[i]:
            j = i * i
            while j <= root:
                small[j] = 0
                j += i
        i += 1
    base_arr = np.flatnonzero(small_arr).astype(np.int64)
    cdef long long[::1] base = base_arr
    nbase = base_arr.shape[0]

    lo = 0
    while lo <= limit:
        hi = lo + segment
        if hi > limit + 1:
            hi = limit + 1
        memset(&flags[lo], 1, hi - lo)
        for i in range(nbase):
            p = base[i]
            if p * p >= hi:
                break
            start = ((lo + p - 1) // p) * p
            if start < p * p:
                start = p * p
            j = start
            while j < hi:
                flags[j] = 0
                j += p
        lo = hi
    flags[0] = 0
    flags[1] = 0
    return out


def mobius_values(Py_ssize_t limit):
    """int8 array mu with the Moebius function on 1..limit (mu[0] = 0)."""
    out = np.ones(max(limit, 0) + 1, dtype=np.int8)
    cdef signed char[::1] mu = out
    mu[0] = 0
    if limit < 2:
        return out
    primes = np.flatnonzero(prime_flags(limit)).astype(np.int64)
    cdef long long[::1] ps = primes
    cdef Py_ssize_t i, j, p, sq
    for i in range(ps.shape[0]):
        p = ps[i]
        j = p
        while j <= limit:
            mu[j] = -mu[j]
            j += p
        if p <= limit // p:
            sq = p * p
            j = sq
            while j <= limit:
                mu[j] = 0
                j += sq
    return out


def least_summands(flags, members, ns):
    """For each n in ns, the least member x <= n/2 with flags[n - x] set, else 0."""
    cdef const unsigned char[::1] f = np.ascontiguousarray(flags, dtype=np.uint8)
    cdef const long long[::1] mem = np.ascontiguousarray(members, dtype=np.int64)
    cdef const long long[::1] targets = np.ascontiguousarray(ns, dtype=np.int64)
    result = np.zeros(targets.shape[0], dtype=np.int64)
    cdef long long[::1] res = result
    cdef Py_ssize_t i, j, nm = mem.shape[0]
    cdef long long n, x
    for i in range(targets.shape[0]):
        n = targets[i]
        for j in range(nm):
            x = mem[j]
            if 2 * x > n:
                break
            if f[n - x]:
                res[i] = x
                break
    return result


def pair_sums(weights, long long n):
    """Sorted distinct sums x + u over pairs of listed weights with x < u and x + u != n."""
    cdef const long long[::1] w = np.ascontiguousarray(weights, dtype=np.int64)
    cdef Py_ssize_t k = w.shape[0], i, j
    if k < 2:
        return np.zeros(0, dtype=np.int64)
    cdef long long top = w[k - 1] + w[k - 2]
    seen_arr = np.zeros(top + 1, dtype=np.uint8)
    cdef unsigned char[::1] seen = seen_arr
    cdef long long s
    for i in range(k):
        for j in range(i + 1, k):
            s = w[i] + w[j]
            if s != n:
                seen[s] = 1
    return np.flatnonzero(seen_arr).astype(np.int64)
