"""JIT switch for the bitmask kernels.

Kernels are written once in plain numpy-scalar Python. When numba is
importable and ``MINCUTS_JIT`` is not set to ``0``, they are compiled with
``numba.njit``; otherwise the undecorated function runs in CPython. Either
way the original function stays reachable as ``kernel.py_func`` so tests and
the benchmark can compare both paths in one process.
"""

from __future__ import annotations

import os

_FLAG = os.environ.get("MINCUTS_JIT", "1").strip().lower()

try:
    import numba
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    numba = None

USE_NUMBA = numba is not None and _FLAG not in ("0", "false", "no", "off")


def njit(fn):
    if USE_NUMBA:
        return numba.njit(cache=True)(fn)
    fn.py_func = fn
    return fn
