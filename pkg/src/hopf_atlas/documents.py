"""Wire documents shared by the CLI and the HTTP service.

Both front ends serialize through this module so their outputs are
byte-identical for identical parameters.  Floats are rendered with 17
significant digits (enough to round-trip IEEE doubles) and documents are
emitted in a fixed key order with no discretionary whitespace.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from . import stereo
from .fibration import FiberSamples
from .linkage import LinkReport, PairLinkReport

SCHEMA_VERSION = "1"


def format_float(x: float) -> str:
    """Render one float with 17 significant digits (-0.0 normalized)."""
    return f"{float(x) + 0.0:.17g}"


def emit_json(obj: Any) -> str:
    """Serialize nested dict/list/scalar data compactly and deterministically."""
    if isinstance(obj, dict):
        parts = (f"{json.dumps(k)}:{emit_json(v)}" for k, v in obj.items())
        return "{" + ",".join(parts) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ",".join(emit_json(v) for v in obj) + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _vec(v) -> list[float]:
    return [float(x) for x in np.asarray(v, dtype=float)]


def fit_dict(fit: stereo.Circle3 | stereo.Line3) -> dict[str, Any]:
    if isinstance(fit, stereo.Circle3):
        return {
            "kind": "circle",
            "center": _vec(fit.center),
            "radius": float(fit.radius),
            "normal": _vec(fit.normal),
        }
    return {
        "kind": "line",
        "point": _vec(fit.point),
        "direction": _vec(fit.direction),
    }


def fiber_document(fb: FiberSamples) -> dict[str, Any]:
    """FiberDocument v1 for one sampled fiber.

    ``projected`` is null when any sample had to be dropped at the projection
    pole (the line fiber over (1,0,0)); the fit is computed from the
    surviving projections either way.
    """
    projected, kept = stereo.proj_s3_filtered(fb.points)
    fit = stereo.fit_circle_or_line(projected)
    return {
        "schema_version": SCHEMA_VERSION,
        "base_point": _vec(fb.base),
        "gauge_kind": fb.gauge_kind,
        "gauge": _vec(fb.gauge),
        "samples": int(len(fb.t_values)),
        "points_s3": [_vec(q) for q in fb.points],
        "projected": [_vec(p) for p in projected] if bool(np.all(kept)) else None,
        "fit": fit_dict(fit),
    }


def fiber_json(fb: FiberSamples) -> str:
    return emit_json(fiber_document(fb)) + "\n"


def fiber_csv(fb: FiberSamples) -> str:
    """Samples table: one row per parameter value, projections blank at the pole."""
    projected, kept = stereo.proj_s3_filtered(fb.points)
    rows = ["index,t,w,x,y,z,px,py,pz"]
    proj_iter = iter(projected)
    for idx, (t, q, keep) in enumerate(zip(fb.t_values, fb.points, kept)):
        cells = [str(idx), format_float(t)] + [format_float(v) for v in q]
        if keep:
            cells += [format_float(v) for v in next(proj_iter)]
        else:
            cells += ["", "", ""]
        rows.append(",".join(cells))
    return "\n".join(rows) + "\n"


def link_report_dict(report: LinkReport) -> dict[str, Any]:
    return {
        "base": _vec(report.base),
        "a": _vec(report.a),
        "b": _vec(report.b),
        "dist_inside": float(report.dist_inside),
        "dist_outside": float(report.dist_outside),
        "line_direction": _vec(report.line_direction),
        "gauss": float(report.gauss),
        "linked": bool(report.linked),
    }


def pair_report_dict(report: PairLinkReport) -> dict[str, Any]:
    transformed = report.transformed_report
    return {
        "base_a": _vec(report.base_a),
        "base_b": _vec(report.base_b),
        "transformed_report": (
            link_report_dict(transformed) if transformed is not None else None
        ),
        "gauss_direct": float(report.gauss_direct),
        "linked": bool(report.linked),
    }


def pair_report_json(report: PairLinkReport) -> str:
    return emit_json(pair_report_dict(report)) + "\n"
