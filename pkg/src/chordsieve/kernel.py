"""Selects the enumeration kernel at import time.

The compiled ``_ckernel`` is used when it was built; otherwise the pure
Python ``_pykernel``.  Set ``CHORDSIEVE_PURE=1`` to force the fallback.
"""

import os

from . import _pykernel

if os.environ.get("CHORDSIEVE_PURE"):
    _ckernel = None
else:
    try:
        from . import _ckernel
    except ImportError:
        _ckernel = None

BACKENDS = {"python": _pykernel}
if _ckernel is not None:
    BACKENDS["cython"] = _ckernel

BACKEND = "cython" if _ckernel is not None else "python"
_impl = BACKENDS[BACKEND]


def get_backend(name=None):
    """Kernel module by name (``"cython"`` or ``"python"``); default is the active one."""
    if name is None:
        return _impl
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available") from None


def crossing_histogram(n, kmax):
    return _impl.crossing_histogram(n, kmax)


def period_histogram(n, k):
    return _impl.period_histogram(n, k)
