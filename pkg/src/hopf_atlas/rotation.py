"""Rotations of R^3 driven by quaternion conjugation.

A nonzero quaternion r acts on a point p = (x, y, z), embedded as the pure
quaternion x*i + y*j + z*k, by p -> r p r^{-1}.  The action only depends on
the ray through r, so any nonzero scalar multiple gives the same rotation,
and r and -r always agree (the double cover of the rotation group).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import quat
from .config import TOL
from .errors import DomainError
from .vecs import as_unit_vector


@dataclass(frozen=True)
class Identity:
    """The trivial rotation; carries no axis (the r = +-1 case)."""


@dataclass(frozen=True)
class AxisAngle:
    """A rotation axis (unit vector) and a counterclockwise angle in (0, 2*pi).

    Positive angles turn counterclockwise when viewed from the tip of the
    axis vector.
    """

    axis: np.ndarray
    angle: float


def rotate(r, p) -> np.ndarray:
    """Apply the rotation of quaternion r to point(s) p.

    ``p`` may be a single 3-vector or an ``(..., 3)`` batch.  ``r`` may be any
    nonzero quaternion; it is not required to be unit length.
    """
    r = np.asarray(r, dtype=float)
    p = np.asarray(p, dtype=float)
    r_inv = quat.inv(r)
    pure = np.concatenate([np.zeros(p.shape[:-1] + (1,)), p], axis=-1)
    out = quat.mul(quat.mul(r, pure), r_inv)
    return out[..., 1:]


def to_matrix(r) -> np.ndarray:
    """3x3 rotation matrix of a unit quaternion.

    Uses the closed-form component expansion; applying the matrix to a point
    agrees with :func:`rotate`.
    """
    a, b, c, d = quat.as_unit(r)
    return np.array(
        [
            [1 - 2 * (c * c + d * d), 2 * (b * c - a * d), 2 * (b * d + a * c)],
            [2 * (b * c + a * d), 1 - 2 * (b * b + d * d), 2 * (c * d - a * b)],
            [2 * (b * d - a * c), 2 * (c * d + a * b), 1 - 2 * (b * b + c * c)],
        ]
    )


def to_axis_angle(r) -> Identity | AxisAngle:
    """Extract the rotation axis and angle encoded in a unit quaternion.

    Returns :class:`Identity` when the scalar part is +-1 within tolerance;
    otherwise the axis is the normalized (b, c, d) part and the angle is
    2*arccos(a), canonicalized to (0, 2*pi).
    """
    a, b, c, d = quat.as_unit(r)
    if abs(abs(a) - 1.0) <= TOL.unit_norm:
        return Identity()
    vec = np.array([b, c, d])
    angle = 2.0 * np.arccos(np.clip(a, -1.0, 1.0))
    return AxisAngle(axis=vec / np.linalg.norm(vec), angle=float(angle))


def from_axis_angle(axis, angle: float) -> np.ndarray:
    """Unit quaternion (cos(angle/2), sin(angle/2) * axis) for a unit axis."""
    axis = as_unit_vector(axis, 3)
    half = 0.5 * float(angle)
    return np.concatenate([[np.cos(half)], np.sin(half) * axis])


def rotations_taking_x_to(P) -> tuple[np.ndarray, np.ndarray]:
    """Two unit quaternions whose rotations move (1, 0, 0) to P.

    The first is the half-turn about the midpoint direction between (1,0,0)
    and P; the second rotates about the axis perpendicular to both, by the
    angle between them.  Both formulas divide by sqrt(2*(1+p1)) and blow up
    as P approaches (-1, 0, 0); inputs inside that cutoff are rejected.
    """
    p1, p2, p3 = as_unit_vector(P, 3)
    if 1.0 + p1 <= TOL.antipode:
        raise DomainError(
            "P is (numerically) the antipode (-1,0,0); no gauge rotation exists "
            "there -- use the k-gauge fiber parametrization instead"
        )
    scale = np.sqrt(2.0 * (1.0 + p1))
    r1 = np.array([0.0, 1.0 + p1, p2, p3]) / scale
    r2 = np.sqrt((1.0 + p1) / 2.0) * np.array(
        [1.0, 0.0, -p3 / (1.0 + p1), p2 / (1.0 + p1)]
    )
    return r1, r2
