"""Stereographic projection of S^2 and S^3, and circle/line fitting in R^3.

Projection is from the published poles only: (0, 0, 1) for the 2-sphere and
(1, 0, 0, 0) for the 3-sphere.  Circles avoiding the pole project to circles;
circles through the pole project to straight lines, which is what
:func:`fit_circle_or_line` classifies.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOL
from .errors import DomainError, FitError, PoleError

S3_POLE = np.array([1.0, 0.0, 0.0, 0.0])


@dataclass(frozen=True)
class Circle3:
    """A circle in R^3: center, radius, unit plane normal, and fit residual."""

    center: np.ndarray
    radius: float
    normal: np.ndarray
    residual: float


@dataclass(frozen=True)
class Line3:
    """A line in R^3 through ``point`` (closest point to the origin)."""

    point: np.ndarray
    direction: np.ndarray
    residual: float


def proj_s2(p) -> np.ndarray:
    """Project S^2 point(s) (x, y, z) to the plane: (x/(1-z), y/(1-z))."""
    p = np.asarray(p, dtype=float)
    denom = 1.0 - p[..., 2]
    if np.any(np.abs(denom) <= TOL.pole):
        raise PoleError("stereographic projection undefined at the pole (0,0,1)")
    return p[..., :2] / denom[..., np.newaxis]


def unproj_s2(q) -> np.ndarray:
    """Inverse projection R^2 -> S^2: (u,v) -> (2u, 2v, u^2+v^2-1)/(u^2+v^2+1)."""
    q = np.asarray(q, dtype=float)
    u, v = q[..., 0], q[..., 1]
    s = u * u + v * v
    return np.stack([2.0 * u, 2.0 * v, s - 1.0], axis=-1) / (s + 1.0)[..., np.newaxis]


def proj_s3(q) -> np.ndarray:
    """Project S^3 point(s) (w, x, y, z) to R^3: (x, y, z)/(1-w)."""
    q = np.asarray(q, dtype=float)
    denom = 1.0 - q[..., 0]
    if np.any(np.abs(denom) <= TOL.pole):
        raise PoleError("stereographic projection undefined at the pole (1,0,0,0)")
    return q[..., 1:] / denom[..., np.newaxis]


def unproj_s3(p) -> np.ndarray:
    """Inverse projection R^3 -> S^3: p -> ((s-1)/(s+1), 2p/(s+1)) with s = ||p||^2."""
    p = np.asarray(p, dtype=float)
    s = np.sum(p * p, axis=-1)
    w = (s - 1.0) / (s + 1.0)
    return np.concatenate(
        [w[..., np.newaxis], 2.0 * p / (s + 1.0)[..., np.newaxis]], axis=-1
    )


def proj_s3_filtered(points) -> tuple[np.ndarray, np.ndarray]:
    """Project S^3 samples, dropping those too close to the projection pole.

    Returns ``(projected, kept)`` where ``kept`` is a boolean mask over the
    input rows.  Only the fiber over (1, 0, 0) actually passes through the
    pole; for every other fiber the mask is all-true.
    """
    points = np.asarray(points, dtype=float)
    dist = np.linalg.norm(points - S3_POLE, axis=-1)
    kept = dist > TOL.pole_exclusion
    return proj_s3(points[kept]), kept


def _canonical_sign(v: np.ndarray) -> np.ndarray:
    """Flip v so its first clearly-nonzero component is positive."""
    for x in v:
        if abs(x) > 1e-9:
            return -v if x < 0.0 else v
    return v


def fit_circle_or_line(points) -> Circle3 | Line3:
    """Classify a sampled space curve as a circle or a straight line.

    Collinearity is tested first: if the maximum distance to the best-fit
    line is below ``line_fit`` times the cloud spread, a :class:`Line3` is
    returned.  Otherwise the best-fit plane is taken from the smallest-spread
    direction of the centered cloud and a least-squares circle is fitted
    in-plane.  Huge radii are reported as fitted, never snapped to lines.

    Parameters
    ----------
    points : (n, 3) array_like
        At least 8 sample points, not all coincident.

    Raises
    ------
    DomainError
        Fewer than 8 points, or a degenerate (coincident) cloud.
    FitError
        Neither model explains the points; carries both residuals.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise DomainError(f"expected an (n, 3) point array, got shape {pts.shape}")
    if pts.shape[0] < 8:
        raise DomainError(f"need at least 8 points to fit, got {pts.shape[0]}")

    centroid = pts.mean(axis=0)
    centered = pts - centroid
    spread = float(np.max(np.linalg.norm(centered, axis=1)))
    if spread == 0.0:
        raise DomainError("all points coincide; nothing to fit")

    # principal directions of the cloud: [0] along a line, [2] a plane normal
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    line_dir = vt[0]
    along = centered @ line_dir
    line_residual = float(
        np.max(np.linalg.norm(centered - np.outer(along, line_dir), axis=1))
    )
    if line_residual < TOL.line_fit * spread:
        direction = _canonical_sign(line_dir)
        foot = centroid - (centroid @ direction) * direction
        return Line3(point=foot, direction=direction, residual=line_residual)

    normal = _canonical_sign(vt[2])
    plane_dev = float(np.max(np.abs(centered @ normal)))
    u = centered @ vt[0]
    v = centered @ vt[1]

    # least-squares circle on rescaled in-plane coordinates (conditioning)
    scale = float(np.sqrt(np.mean(u * u + v * v)))
    us, vs = u / scale, v / scale
    A = np.column_stack([2.0 * us, 2.0 * vs, np.ones_like(us)])
    rhs = us * us + vs * vs
    (cx, cy, k), *_ = np.linalg.lstsq(A, rhs, rcond=None)
    radius = scale * float(np.sqrt(max(k + cx * cx + cy * cy, 0.0)))
    cx, cy = scale * cx, scale * cy

    radial = np.hypot(u - cx, v - cy)
    circle_residual = max(float(np.max(np.abs(radial - radius))), plane_dev)
    if circle_residual > TOL.circle_fit * max(1.0, spread):
        raise FitError(
            "points fit neither a line nor a circle within tolerance",
            line_residual=line_residual,
            circle_residual=circle_residual,
        )
    center = centroid + cx * vt[0] + cy * vt[1]
    return Circle3(center=center, radius=radius, normal=normal, residual=circle_residual)
