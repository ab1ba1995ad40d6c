"""Backend selection for the hot kernels.

Reachability exploration uses the compiled ``procmatch._kernels`` extension
when it imports; otherwise, or when ``PROCMATCH_PURE_PYTHON`` is set to a
non-empty value other than ``0``, the pure-Python version is used. The cosine
matrix always runs on numpy, whose BLAS matmul outpaces a hand-written loop
at realistic embedding widths.
"""

from __future__ import annotations

import os

from procmatch import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("PROCMATCH_PURE_PYTHON", "") in ("", "0"):
    try:
        from procmatch import _kernels as _compiled
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"

explore_markings = _impl.explore_markings
cosine_matrix = _kernels_py.cosine_matrix

__all__ = ["BACKEND", "cosine_matrix", "explore_markings"]
