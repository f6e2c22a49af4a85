"""Kernel selection.

The compiled extension is used when it was built; otherwise the numpy
implementation is loaded. Setting CIRCPART_PURE=1 forces the fallback.
"""

import os

if os.environ.get("CIRCPART_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
prime_flags = _impl.prime_flags
mobius_values = _impl.mobius_values
least_summands = _impl.least_summands
pair_sums = _impl.pair_sums

__all__ = ["BACKEND", "prime_flags", "mobius_values", "least_summands", "pair_sums"]
