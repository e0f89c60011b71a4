"""Quaternion algebra on plain numpy arrays.

A quaternion a + b*i + c*j + d*k is stored as a float array ``[a, b, c, d]``.
All functions broadcast over leading axes, so a batch of quaternions is just
an ``(n, 4)`` array.  The basis relations are i*i = j*j = k*k = -1 and
i*j = k, j*k = i, k*i = j (reversing an ordered pair flips the sign).
"""

from __future__ import annotations

import numpy as np

from .config import TOL
from .errors import DomainError

ONE = np.array([1.0, 0.0, 0.0, 0.0])
I = np.array([0.0, 1.0, 0.0, 0.0])
J = np.array([0.0, 0.0, 1.0, 0.0])
K = np.array([0.0, 0.0, 0.0, 1.0])


def quaternion(a: float, b: float, c: float, d: float) -> np.ndarray:
    """Build a quaternion array from its four components."""
    q = np.array([a, b, c, d], dtype=float)
    if not np.all(np.isfinite(q)):
        raise DomainError("quaternion components must be finite")
    return q


def mul(p, q) -> np.ndarray:
    """Quaternion product p*q (non-commutative)."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    a1, b1, c1, d1 = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    a2, b2, c2, d2 = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    return np.stack(
        [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ],
        axis=-1,
    )


def conj(q) -> np.ndarray:
    """Conjugate: (a, b, c, d) -> (a, -b, -c, -d)."""
    q = np.asarray(q, dtype=float)
    return q * np.array([1.0, -1.0, -1.0, -1.0])


def norm(q) -> float | np.ndarray:
    """Euclidean length sqrt(a^2 + b^2 + c^2 + d^2)."""
    q = np.asarray(q, dtype=float)
    n = np.linalg.norm(q, axis=-1)
    return float(n) if n.ndim == 0 else n


def inv(q) -> np.ndarray:
    """Multiplicative inverse conj(q) / ||q||^2.

    Raises DomainError for the zero quaternion, which has no inverse.
    """
    q = np.asarray(q, dtype=float)
    n2 = np.sum(q * q, axis=-1, keepdims=True)
    if np.any(n2 == 0.0):
        raise DomainError("zero quaternion has no inverse")
    return conj(q) / n2


def exp_i(t) -> np.ndarray:
    """The circle parameter cos(t) + i sin(t), i.e. (cos t, sin t, 0, 0)."""
    t = np.asarray(t, dtype=float)
    z = np.zeros_like(t)
    return np.stack([np.cos(t), np.sin(t), z, z], axis=-1)


def as_unit(q, drift: float | None = None) -> np.ndarray:
    """Return q normalized to unit length.

    Inputs whose norm deviates from 1 by more than ``drift`` (default: the
    central ``normalize_input`` tolerance) are rejected rather than silently
    rescaled.
    """
    q = np.asarray(q, dtype=float)
    if not np.all(np.isfinite(q)):
        raise DomainError("quaternion components must be finite")
    limit = TOL.normalize_input if drift is None else drift
    n = np.linalg.norm(q, axis=-1)
    if np.any(np.abs(n - 1.0) > limit):
        raise DomainError(
            f"expected a unit quaternion, got norm {float(np.max(n)):.12g} "
            f"(drift beyond {limit:g})"
        )
    return q / n[..., np.newaxis]
