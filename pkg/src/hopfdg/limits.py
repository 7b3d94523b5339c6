"""Enumeration and work bounds.

Composition-shaped enumerations grow like the ordered Bell numbers, subset
tables like 2^n, and brute-force scans like n^|I|; every entry point that
triggers one of them checks a bound first and raises instead of hanging.
"""

from __future__ import annotations

import os

# Largest vertex set for composition-shaped enumerations (antipode,
# character polynomials, surjection scans).  Overridable per call.
DEFAULT_MAX_VERTICES = 9

# Largest ground set for subset tables (lower halves, Boolean functions).
SUBSET_BOUND = 20

# Point budget for brute-force scans (colorings, lattice points).
DEFAULT_MAX_WORK = 10_000_000

ENV_MAX_WORK = "HOPFDG_MAX_WORK"


def max_work(override: int | None = None) -> int:
    """Effective work bound: explicit override, else env var, else default."""
    if override is not None:
        return override
    raw = os.environ.get(ENV_MAX_WORK)
    if raw is not None:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"{ENV_MAX_WORK} must be an integer, got {raw!r}")
    return DEFAULT_MAX_WORK
