"""Backend selection for the enumeration kernels.

The env var FRAMELAT_BACKEND picks the implementation:

* ``numba`` (default): kernels from ``_kernels`` are jit-compiled with
  ``@njit(cache=True, nogil=True)``.
* ``python``: the same functions run interpreted (much slower, useful for
  debugging and as a reference).

Both paths execute identical integer arithmetic, so results agree bit for
bit; ``benchmarks/enum_bench.py`` compares their speed.
"""

import os
import warnings

from . import _kernels

BACKEND = os.environ.get("FRAMELAT_BACKEND", "numba").strip().lower()

if BACKEND not in ("numba", "python"):
    warnings.warn(f"unknown FRAMELAT_BACKEND={BACKEND!r}, using numba")
    BACKEND = "numba"

if BACKEND == "numba":
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        warnings.warn("numba unavailable, falling back to the python backend")
        BACKEND = "python"

if BACKEND == "numba":
    _wrap = njit(cache=True, nogil=True)
    enum_count = _wrap(_kernels.enum_count)
    enum_collect = _wrap(_kernels.enum_collect)
    enum_shortest = _wrap(_kernels.enum_shortest)
    euclid_min = _wrap(_kernels.euclid_min)
else:
    enum_count = _kernels.enum_count
    enum_collect = _kernels.enum_collect
    enum_shortest = _kernels.enum_shortest
    euclid_min = _kernels.euclid_min

STATUS_OK = _kernels.STATUS_OK
STATUS_BUDGET = _kernels.STATUS_BUDGET
STATUS_OVERFLOW = _kernels.STATUS_OVERFLOW
