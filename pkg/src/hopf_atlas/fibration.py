"""The Hopf map from the unit quaternions to the unit 2-sphere, and its fibers.

Three published forms of the map are provided: the coordinate formula
(:func:`hopf`), the conjugation form r -> r i conj(r) (:func:`hopf_quat`),
and the historical original with permuted coordinates
(:func:`hopf_original`).  The preimage of any base point is a circle in S^3;
:func:`fiber` samples it in closed form as gauge * e^{it}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import quat, rotation
from .config import TOL
from .errors import DomainError
from .vecs import as_unit_vector

K_GAUGE = np.array([0.0, 0.0, 0.0, 1.0])


@dataclass(frozen=True)
class FiberSamples:
    """A sampled fiber circle: the points {gauge * e^{it}} over one base point.

    ``points[n]`` equals ``mul(gauge, exp_i(t_values[n]))`` and every sample
    maps back to ``base`` under the Hopf map.
    """

    base: np.ndarray
    gauge: np.ndarray
    gauge_kind: str  # "r1", "r2", or "k-special"
    t_values: np.ndarray
    points: np.ndarray


def hopf(q, check: bool = True) -> np.ndarray:
    """Coordinate form of the Hopf map.

    (a,b,c,d) -> (a^2+b^2-c^2-d^2, 2(ad+bc), 2(bd-ac)).  With ``check`` the
    input must be unit length within the drift tolerance; pass
    ``check=False`` to evaluate the raw polynomial on arbitrary input.
    """
    q = np.asarray(q, dtype=float)
    if check:
        q = quat.as_unit(q)
    a, b, c, d = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    return np.stack(
        [
            a * a + b * b - c * c - d * d,
            2.0 * (a * d + b * c),
            2.0 * (b * d - a * c),
        ],
        axis=-1,
    )


def hopf_quat(r) -> np.ndarray:
    """Conjugation form of the Hopf map: the vector part of r * i * conj(r)."""
    r = quat.as_unit(r)
    out = quat.mul(quat.mul(r, quat.I), quat.conj(r))
    return out[..., 1:]


def hopf_original(q, check: bool = True) -> np.ndarray:
    """The historical form: (a,b,c,d) -> (2(ac+bd), 2(bc-ad), a^2+b^2-c^2-d^2)."""
    q = np.asarray(q, dtype=float)
    if check:
        q = quat.as_unit(q)
    a, b, c, d = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    return np.stack(
        [
            2.0 * (a * c + b * d),
            2.0 * (b * c - a * d),
            a * a + b * b - c * c - d * d,
        ],
        axis=-1,
    )


def fiber(P, gauge_kind: str = "auto", n_samples: int = 256) -> FiberSamples:
    """Sample the fiber circle over base point P.

    Parameters
    ----------
    P : array_like
        Unit 3-vector (normalized within the drift tolerance).
    gauge_kind : {"auto", "r1", "r2"}
        Which closed-form gauge quaternion parametrizes the circle.  Under
        ``auto`` the special k gauge is used when P is numerically the
        antipode (-1, 0, 0), where the r1/r2 formulas are singular; requesting
        r1 or r2 there is an error.
    n_samples : int
        Number of uniformly spaced parameter values on [0, 2*pi); at least 3.
    """
    P = as_unit_vector(P, 3)
    if int(n_samples) != n_samples or n_samples < 3:
        raise DomainError(f"n_samples must be an integer >= 3, got {n_samples!r}")
    n_samples = int(n_samples)

    near_antipode = 1.0 + P[0] <= TOL.antipode
    if gauge_kind == "auto":
        kind = "k-special" if near_antipode else "r1"
    elif gauge_kind in ("r1", "r2"):
        if near_antipode:
            raise DomainError(
                f"gauge {gauge_kind!r} is singular at (-1,0,0); use gauge 'auto'"
            )
        kind = gauge_kind
    else:
        raise DomainError(f"unknown gauge kind {gauge_kind!r}")

    if kind == "k-special":
        gauge = K_GAUGE
    else:
        r1, r2 = rotation.rotations_taking_x_to(P)
        gauge = r1 if kind == "r1" else r2

    t_values = np.arange(n_samples) * (2.0 * np.pi / n_samples)
    points = quat.mul(gauge, quat.exp_i(t_values))
    return FiberSamples(
        base=P, gauge=gauge, gauge_kind=kind, t_values=t_values, points=points
    )
