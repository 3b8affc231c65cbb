"""Numba switch.

Kernels in :mod:`logint._kernels` come in two flavours: an explicit-loop
version compiled with ``numba.njit`` and a vectorised numpy version.  The
compiled one is used when numba imports and ``LOGINT_DISABLE_NUMBA`` is unset
(or ``0``); otherwise everything runs on numpy.
"""

import os

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get("LOGINT_DISABLE_NUMBA", "0") in ("", "0")


def njit(fn):
    """Compile ``fn`` with numba if available, else return it unchanged."""
    if numba is None:
        return fn
    return numba.njit(cache=True)(fn)
