"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--limit 1000000]

Prints one row per kernel with the best time of each backend and the
speedup. Both backends must agree on every output; a mismatch aborts.
"""

import argparse
import sys
import timeit

import numpy as np

from circpart import _kernels_py as pure

try:
    from circpart import _ckernels as compiled
except ImportError:
    compiled = None


def workloads(limit):
    flags = pure.prime_flags(limit)
    odd = flags.copy()
    odd[:3] = 0
    members = np.flatnonzero(odd)
    evens = np.arange(6, limit + 1, 2, dtype=np.int64)
    n = min(limit, 20000)
    weights = members[members < n]
    weights = weights[np.isin(n - weights, members)]
    return {
        "prime_flags": lambda k: k.prime_flags(limit),
        "mobius_values": lambda k: k.mobius_values(limit),
        "least_summands": lambda k: k.least_summands(odd, members, evens),
        "pair_sums": lambda k: k.pair_sums(np.arange(1, 4000, dtype=np.int64), 4000),
        "pair_sums_primes": lambda k: k.pair_sums(weights, n),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--limit", type=int, default=1_000_000)
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'kernel':18s} {'cython s':>10s} {'numpy s':>10s} {'speedup':>8s}")
    for name, job in workloads(args.limit).items():
        a, b = job(compiled), job(pure)
        if not np.array_equal(a, b):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        tc = min(timeit.repeat(lambda: job(compiled), number=1, repeat=args.repeat))
        tp = min(timeit.repeat(lambda: job(pure), number=1, repeat=args.repeat))
        print(f"{name:18s} {tc:10.4f} {tp:10.4f} {tp / tc:8.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
