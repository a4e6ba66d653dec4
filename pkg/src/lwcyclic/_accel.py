"""Backend switch for the hot kernels.

Numba is used when it imports and ``LWCYCLIC_DISABLE_NUMBA`` is unset (or
``0``).  Otherwise every kernel falls back to its vectorized numpy twin.
"""
import os

_FLAG = os.environ.get("LWCYCLIC_DISABLE_NUMBA", "0").strip().lower()

try:
    import numba
    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba ships with the test env
    numba = None
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and _FLAG in ("", "0", "false", "no")
BACKEND = "numba" if USE_NUMBA else "numpy"


def njit(fn):
    """Compile ``fn`` in nopython mode when numba is importable.

    The plain function stays reachable as ``fn.py_func`` either way, so tests
    can exercise the loop code without the compiler.
    """
    if not HAS_NUMBA:
        fn.py_func = fn
        return fn
    return numba.njit(cache=True)(fn)
