"""Elimination kernels: compiled extension when built, pure Python otherwise.

Set ``TAKIFF_LAB_PURE=1`` to force the fallback (used by the benchmark and
by the tests that compare both backends).
"""

import os

from . import _elim_py

BACKEND = "python"

if os.environ.get("TAKIFF_LAB_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _elim as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _elim_py
else:
    _impl = _elim_py

bareiss_rank = _impl.bareiss_rank
bareiss_rref = _impl.bareiss_rref

__all__ = ["BACKEND", "bareiss_rank", "bareiss_rref"]
