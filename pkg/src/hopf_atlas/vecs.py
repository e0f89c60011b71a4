"""Small helpers for unit vectors in R^3 and R^4."""

from __future__ import annotations

import numpy as np

from .config import TOL
from .errors import DomainError


def as_unit_vector(v, dim: int, drift: float | None = None) -> np.ndarray:
    """Validate and renormalize a near-unit vector of the given dimension."""
    v = np.asarray(v, dtype=float)
    if v.shape != (dim,):
        raise DomainError(f"expected a {dim}-vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise DomainError("vector components must be finite")
    limit = TOL.normalize_input if drift is None else drift
    n = float(np.linalg.norm(v))
    if abs(n - 1.0) > limit:
        raise DomainError(
            f"expected a unit {dim}-vector, got norm {n:.12g} (drift beyond {limit:g})"
        )
    return v / n
