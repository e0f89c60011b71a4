"""Central tolerance record.

All floating-point tolerances used across the package live in one frozen
dataclass so they can be audited (and overridden) in a single place.  The
environment variable ``HOPF_ATLAS_TOL`` overrides fields at import time;
it accepts either a bare float (which replaces ``unit_norm``) or a
comma-separated list of ``field=value`` pairs, e.g.

    HOPF_ATLAS_TOL="unit_norm=1e-8,gauss_integer=0.05"
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # |norm - 1| accepted on values that must already be unit length
    unit_norm: float = 1e-9
    # exact algebraic identities evaluated in floating point
    algebra: float = 1e-12
    # geometric checks on rotations and fibers
    rotation: float = 1e-9
    # constructors normalize inputs whose norm drifts by at most this much
    normalize_input: float = 1e-6
    # 1 + p1 at or below this switches fiber parametrization to the k gauge
    antipode: float = 1e-8
    # |1 - pole coordinate| at or below this is a projection pole hit
    pole: float = 1e-10
    # samples closer than this to the S3 pole are dropped before fitting
    pole_exclusion: float = 1e-6
    # collinearity residual per unit spread that classifies a fit as a line
    line_fit: float = 1e-7
    # absolute circle-fit residual accepted before declaring the fit ambiguous
    circle_fit: float = 1e-6
    # base points closer than this to (+-1,0,0) are rejected by link reports
    link_exclusion: float = 1e-6
    # bisection tolerance in the fiber parameter t
    crossing_t: float = 1e-12
    # minimum clearance between polylines fed to the linking integral
    curve_clearance: float = 1e-3
    # |gauss - nearest integer| accepted as a clean linking verdict
    gauss_integer: float = 0.02
    # minimum separation between the two base points of a pair check
    pair_distinct: float = 1e-6


def tolerances_from_env(env_value: str | None = None) -> Tolerances:
    """Build the tolerance record, applying any ``HOPF_ATLAS_TOL`` override."""
    raw = os.environ.get("HOPF_ATLAS_TOL") if env_value is None else env_value
    if not raw:
        return Tolerances()
    fields = {f.name for f in dataclasses.fields(Tolerances)}
    overrides: dict[str, float] = {}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" in item:
            key, _, value = item.partition("=")
            key = key.strip()
            if key not in fields:
                raise ValueError(f"unknown tolerance field {key!r} in HOPF_ATLAS_TOL")
            overrides[key] = float(value)
        else:
            overrides["unit_norm"] = float(item)
    return Tolerances(**overrides)


TOL = tolerances_from_env()
