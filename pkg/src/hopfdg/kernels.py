"""Kernel backend selection.

The compiled extension is preferred when it imports cleanly; otherwise the
pure-Python twin takes over.  HOPFDG_PURE=1 forces the fallback, which is
useful for benchmarking and for debugging the compiled module.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("HOPFDG_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = "compiled" if _impl is not _kernels_py else "pure"

lower_half_masks = _impl.lower_half_masks
chain_stats = _impl.chain_stats
takeuchi_terms = _impl.takeuchi_terms
surjection_stats = _impl.surjection_stats
count_strict_colorings = _impl.count_strict_colorings
count_weak_colorings = _impl.count_weak_colorings
count_dilation_points = _impl.count_dilation_points
