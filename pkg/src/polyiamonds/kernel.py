"""Backend selection for the enumeration kernel.

The compiled extension is used when it was built; otherwise, or when
``POLYIAMONDS_PURE`` is set, the pure-Python twin takes over.
"""
import os

from . import _pykernel
from ._pykernel import branches

if os.environ.get("POLYIAMONDS_PURE"):
    grow = _pykernel.grow
    BACKEND = "python"
else:
    try:
        from ._ckernel import grow
        BACKEND = "cython"
    except ImportError:
        grow = _pykernel.grow
        BACKEND = "python"

__all__ = ["grow", "branches", "BACKEND"]
