"""Numba switch for the hot kernels.

Set ``STRONGGENUS_NO_NUMBA=1`` to run every kernel as plain Python over
numpy arrays.  The same function bodies are used on both paths.
"""

from __future__ import annotations

import os

_DISABLED = os.environ.get("STRONGGENUS_NO_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    if _DISABLED:
        raise ImportError
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    numba = None
    HAVE_NUMBA = False


def njit(*args, **kwargs):
    """``numba.njit`` when enabled, identity otherwise.

    The returned object always exposes ``py_func`` so callers and tests can
    reach the uncompiled body.
    """

    def wrap(fn):
        if HAVE_NUMBA:
            return numba.njit(**kwargs)(fn)
        fn.py_func = fn
        return fn

    if len(args) == 1 and callable(args[0]) and not kwargs:
        return wrap(args[0])
    return wrap


def backend() -> str:
    return "numba" if HAVE_NUMBA else "python"
