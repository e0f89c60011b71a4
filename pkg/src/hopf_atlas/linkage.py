"""Linkage verification for stereographically projected Hopf fibers.

Two independent routes establish that distinct projected fibers are linked:

* the plane-crossing criterion: a projected fiber circle meets the y,z-plane
  in exactly two points, one inside and one outside the unit circle there
  (:func:`axis_link_report`), and
* a numerical Gauss linking number over closed polylines
  (:func:`gauss_linking`).

For an arbitrary pair of fibers, :func:`pairwise_link_check` conjugates the
whole picture by a sphere-preserving map that carries the first projected
fiber onto the reference unit circle (:func:`carry_to_unit_circle`), applies
the plane-crossing criterion to the transported second fiber, and
cross-checks the verdict against the Gauss number of the original pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fibration, quat, stereo
from .config import TOL
from .errors import DomainError, ProximityError, ToolkitError
from .vecs import as_unit_vector

X_POS = np.array([1.0, 0.0, 0.0])
X_NEG = np.array([-1.0, 0.0, 0.0])


@dataclass(frozen=True)
class LinkReport:
    """Certificate that one projected fiber links the unit y,z-circle.

    ``a`` and ``b`` are the fiber's two crossings of the y,z-plane in
    increasing parameter order; exactly one lies inside the unit circle.
    """

    base: np.ndarray
    a: np.ndarray
    b: np.ndarray
    dist_inside: float
    dist_outside: float
    line_direction: np.ndarray
    gauss: float
    linked: bool


@dataclass(frozen=True)
class PairLinkReport:
    """Linkage verdict for two distinct fibers.

    ``transformed_report`` certifies the transported second fiber against the
    unit circle (the image of the first); ``gauss_direct`` is the linking
    number of the original projected pair.  For antipodal base points the
    transported second fiber is the straight pole line rather than a circle
    (carrying the first base to (-1,0,0) necessarily carries its antipode to
    (1,0,0)), so ``transformed_report`` is None and the certificate is the
    line piercing the unit disk.
    """

    base_a: np.ndarray
    base_b: np.ndarray
    transformed_report: LinkReport | None
    gauss_direct: float
    linked: bool


def unit_yz_circle(n_samples: int = 256) -> np.ndarray:
    """Uniform samples (0, sin t, cos t) of the unit circle in the y,z-plane."""
    t = np.arange(n_samples) * (2.0 * np.pi / n_samples)
    return np.stack([np.zeros_like(t), np.sin(t), np.cos(t)], axis=-1)


def projected_polyline(fb: fibration.FiberSamples) -> np.ndarray:
    """Stereographic projection of fiber samples, pole hits dropped."""
    projected, _ = stereo.proj_s3_filtered(fb.points)
    return projected


def _x_component(gauge: np.ndarray, t) -> np.ndarray:
    """x (i-part) of gauge * e^{it}; its roots are the y,z-plane crossings."""
    return gauge[1] * np.cos(t) + gauge[0] * np.sin(t)


def _crossing_parameters(gauge: np.ndarray) -> tuple[float, float]:
    """Locate both roots of the fiber's x-component by bracketed bisection."""
    if np.hypot(gauge[0], gauge[1]) < 1e-15:
        raise ToolkitError(
            "internal consistency: fiber x-component vanishes identically"
        )
    n_scan = 256
    grid = np.linspace(0.0, 2.0 * np.pi, n_scan + 1)
    values = _x_component(gauge, grid)
    roots: list[float] = []
    for i in range(n_scan):
        lo, hi = grid[i], grid[i + 1]
        flo, fhi = values[i], values[i + 1]
        if flo == 0.0:
            roots.append(float(lo))
            continue
        if flo * fhi >= 0.0:
            continue
        while hi - lo > TOL.crossing_t:
            mid = 0.5 * (lo + hi)
            fmid = _x_component(gauge, mid)
            if fmid == 0.0:
                lo = hi = mid
                break
            if flo * fmid < 0.0:
                hi = mid
            else:
                lo, flo = mid, fmid
        roots.append(float(0.5 * (lo + hi)))
    if len(roots) != 2:
        raise ToolkitError(
            f"internal consistency: expected exactly 2 plane crossings, found {len(roots)}"
        )
    return roots[0], roots[1]


def axis_link_report(P, n_samples: int = 256) -> LinkReport:
    """Certify that the projected fiber over P links the unit y,z-circle.

    P must stay clear of (1,0,0) (whose fiber projects to a line) and of
    (-1,0,0) (whose fiber projects to the reference circle itself).  The two
    plane crossings are found as roots of the closed-form parametrization,
    independent of the sample count, and the Gauss number against the unit
    circle is computed from ``n_samples``-gon polylines.
    """
    P = as_unit_vector(P, 3)
    if np.linalg.norm(P - X_POS) <= TOL.link_exclusion:
        raise DomainError("base point is (1,0,0): its fiber projects to a line, "
                          "not a circle")
    if np.linalg.norm(P - X_NEG) <= TOL.link_exclusion:
        raise DomainError("base point is (-1,0,0): its fiber projects to the "
                          "unit circle itself")

    fb = fibration.fiber(P, "r1", n_samples)
    t1, t2 = _crossing_parameters(fb.gauge)
    a_pt = stereo.proj_s3(quat.mul(fb.gauge, quat.exp_i(t1)))
    b_pt = stereo.proj_s3(quat.mul(fb.gauge, quat.exp_i(t2)))

    norms = sorted([float(np.linalg.norm(a_pt)), float(np.linalg.norm(b_pt))])
    dist_inside, dist_outside = norms
    if not dist_inside < 1.0 < dist_outside:
        raise ToolkitError(
            "internal consistency: crossings do not straddle the unit circle "
            f"(distances {dist_inside:.6g}, {dist_outside:.6g})"
        )

    direction = np.array([0.0, P[2], -P[1]])
    direction /= np.linalg.norm(direction)
    gauss = gauss_linking(projected_polyline(fb), unit_yz_circle(n_samples))
    linked = abs(abs(gauss) - 1.0) <= TOL.gauss_integer
    return LinkReport(
        base=P,
        a=a_pt,
        b=b_pt,
        dist_inside=dist_inside,
        dist_outside=dist_outside,
        line_direction=direction,
        gauss=gauss,
        linked=linked,
    )


def carry_to_unit_circle(p, r) -> np.ndarray:
    """Map R^3 -> R^3 carrying the projected fiber through r onto the unit circle.

    Lifts p to the 3-sphere, left-multiplies by k * r^{-1}, and projects
    back.  When r lies on a fiber, that fiber's projection lands exactly on
    the unit circle in the y,z-plane; every other projected fiber lands on
    some other projected fiber.  Undefined (pole error) only where the lifted
    point is carried onto the projection pole.
    """
    r = quat.as_unit(r)
    lifted = stereo.unproj_s3(p)
    moved = quat.mul(quat.mul(quat.K, quat.inv(r)), lifted)
    return stereo.proj_s3(moved)


def _min_vertex_segment_distance(verts: np.ndarray, seg_a: np.ndarray,
                                 seg_b: np.ndarray) -> float:
    d = seg_b - seg_a
    w = verts[:, np.newaxis, :] - seg_a[np.newaxis, :, :]
    d2 = np.einsum("ij,ij->i", d, d)
    wd = np.einsum("ijk,jk->ij", w, d)
    w2 = np.einsum("ijk,ijk->ij", w, w)
    t = np.clip(wd / d2, 0.0, 1.0)
    dist2 = w2 - 2.0 * t * wd + t * t * d2
    return float(np.sqrt(max(np.min(dist2), 0.0)))


def _clearance(curve_a: np.ndarray, curve_b: np.ndarray) -> float:
    a_next = np.roll(curve_a, -1, axis=0)
    b_next = np.roll(curve_b, -1, axis=0)
    return min(
        _min_vertex_segment_distance(curve_a, curve_b, b_next),
        _min_vertex_segment_distance(curve_b, curve_a, a_next),
    )


def gauss_linking(curve_a, curve_b) -> float:
    """Gauss linking number of two closed polylines.

    Vertices are taken in order with implicit closure (last connects back to
    first).  Each segment pair contributes its exact solid-angle term, so the
    total is the (integer) linking number of the polygons up to floating
    point; no quadrature error is involved.  Summation order is fixed, so the
    result is deterministic for fixed inputs.

    Raises ProximityError when the curves pass closer than the clearance
    tolerance, where the verdict would be sampling-dependent.
    """
    A = np.asarray(curve_a, dtype=float)
    B = np.asarray(curve_b, dtype=float)
    for name, c in (("first", A), ("second", B)):
        if c.ndim != 2 or c.shape[1] != 3:
            raise DomainError(f"{name} curve must be an (n, 3) array, got {c.shape}")
        if c.shape[0] < 32:
            raise DomainError(
                f"{name} curve needs at least 32 vertices, got {c.shape[0]}"
            )
    clearance = _clearance(A, B)
    if clearance <= TOL.curve_clearance:
        raise ProximityError(
            f"curves pass within {clearance:.3g} of each other; the linking "
            f"integral is ill-conditioned below {TOL.curve_clearance:g}"
        )

    A1 = np.roll(A, -1, axis=0)
    B1 = np.roll(B, -1, axis=0)
    a = A[:, np.newaxis, :] - B[np.newaxis, :, :]
    b = A[:, np.newaxis, :] - B1[np.newaxis, :, :]
    c = A1[:, np.newaxis, :] - B1[np.newaxis, :, :]
    d = A1[:, np.newaxis, :] - B[np.newaxis, :, :]

    def dot(u, v):
        return np.einsum("ijk,ijk->ij", u, v)

    an = np.sqrt(dot(a, a))
    bn = np.sqrt(dot(b, b))
    cn = np.sqrt(dot(c, c))
    dn = np.sqrt(dot(d, d))
    num = dot(a, np.cross(b, c))
    ca = dot(c, a)
    d1 = an * bn * cn + dot(a, b) * cn + dot(b, c) * an + ca * bn
    d2 = an * dn * cn + dot(a, d) * cn + dot(d, c) * an + ca * dn
    total = np.sum(np.arctan2(num, d1) + np.arctan2(num, d2))
    return float(total / (2.0 * np.pi))


def _closed_loop_around(line_points: np.ndarray, companion: np.ndarray,
                        n_samples: int) -> np.ndarray:
    """Close a projected line fiber into a polygon avoiding the companion curve.

    The straight part runs along the fitted line far enough to dwarf the
    companion; a semicircular return arc completes the loop.  Because the
    segment-pair sum is exact, the closure changes nothing topologically as
    long as the arc stays clear of the companion.
    """
    fit = stereo.fit_circle_or_line(line_points)
    if not isinstance(fit, stereo.Line3):
        raise ToolkitError("internal consistency: pole fiber did not project "
                           "to a line")
    u = fit.direction
    reach = float(np.max(np.linalg.norm(companion, axis=1)))
    half = 4.0 * reach + 16.0
    n_leg = max(n_samples, 64)
    s = np.linspace(-half, half, n_leg)
    straight = fit.point + s[:, np.newaxis] * u

    # arc plane: pick the basis vector least aligned with the line
    probe = np.eye(3)[np.argmin(np.abs(u))]
    v = probe - (probe @ u) * u
    v /= np.linalg.norm(v)
    # sweep from the +u end back to the -u end; implicit closure finishes it
    theta = np.linspace(0.0, np.pi, n_leg + 1)[1:-1]
    arc = fit.point + half * (np.cos(theta)[:, np.newaxis] * u
                              + np.sin(theta)[:, np.newaxis] * v)
    return np.vstack([straight, arc])


def pairwise_link_check(P_A, P_B, n_samples: int = 256) -> PairLinkReport:
    """Verify that the projected fibers over two distinct base points are linked.

    A unit quaternion r is chosen on the first fiber so that left
    multiplication by k * r^{-1} carries the first projected fiber onto the
    unit y,z-circle and the second onto some other projected fiber; the
    transported base point is recovered through the Hopf map and certified by
    :func:`axis_link_report`.  Independently, the Gauss linking number of the
    original projected pair is computed (a pole-line fiber is closed into a
    large polygon first).  Both verdicts must agree for ``linked``.
    """
    P_A = as_unit_vector(P_A, 3)
    P_B = as_unit_vector(P_B, 3)
    separation = float(np.linalg.norm(P_A - P_B))
    if separation == 0.0:
        raise DomainError("base points are identical: a fiber is not linked "
                          "with itself")
    if separation <= TOL.pair_distinct:
        raise ProximityError(
            f"base points are only {separation:.3g} apart (minimum "
            f"{TOL.pair_distinct:g}); the fibers are numerically the same circle"
        )

    fib_a = fibration.fiber(P_A, "auto", n_samples)
    fib_b = fibration.fiber(P_B, "auto", n_samples)

    # choose r on fiber A keeping the transported second base away from
    # (1,0,0), whose report would degenerate to the line case
    k_quat = quat.K
    best_r = None
    best_base = None
    best_dist = -1.0
    for t_off in np.linspace(0.0, np.pi, 8, endpoint=False):
        r = quat.mul(fib_a.gauge, quat.exp_i(t_off))
        moved_gauge = quat.mul(quat.mul(k_quat, quat.inv(r)), fib_b.gauge)
        e_base = fibration.hopf(moved_gauge)
        dist = float(np.linalg.norm(e_base - X_POS))
        if dist > best_dist:
            best_dist, best_r, best_base = dist, r, e_base
    if best_dist <= TOL.link_exclusion:
        # antipodal pair: the transported second base is pinned at (1,0,0)
        # (its distance from there equals ||P_A + P_B|| for every phase), so
        # the transported second fiber is the pole line; certify that it
        # pierces the unit disk in the y,z-plane instead
        transformed = None
        moved = quat.mul(quat.mul(k_quat, quat.inv(best_r)), fib_b.points)
        images, _ = stereo.proj_s3_filtered(moved)
        fit = stereo.fit_circle_or_line(images)
        if isinstance(fit, stereo.Circle3):
            # almost-but-not-exactly antipodal: the transported fiber is a
            # near-line circle too extreme to certify either way
            raise ProximityError(
                "base points are antipodal within tolerance but not exactly; "
                f"the transported fiber degenerates (radius {fit.radius:.3g})"
            )
        if abs(fit.direction[0]) < 1e-9:
            raise ToolkitError(
                "internal consistency: transported antipodal fiber does not "
                "cross the y,z-plane"
            )
        t_pierce = -fit.point[0] / fit.direction[0]
        pierce = fit.point + t_pierce * fit.direction
        transported_linked = bool(np.linalg.norm(pierce) < 1.0)
    else:
        transformed = axis_link_report(best_base, n_samples)
        transported_linked = transformed.linked

    a_is_line = np.linalg.norm(P_A - X_POS) <= TOL.link_exclusion
    b_is_line = np.linalg.norm(P_B - X_POS) <= TOL.link_exclusion
    if a_is_line and b_is_line:
        raise ProximityError("both fibers project to lines; no circle pair to check")
    if a_is_line or b_is_line:
        line_fb, circle_fb = (fib_a, fib_b) if a_is_line else (fib_b, fib_a)
        circle_poly = projected_polyline(circle_fb)
        loop = _closed_loop_around(projected_polyline(line_fb), circle_poly,
                                   n_samples)
        gauss_direct = gauss_linking(loop, circle_poly)
    else:
        gauss_direct = gauss_linking(projected_polyline(fib_a),
                                     projected_polyline(fib_b))

    linked = transported_linked and abs(abs(gauss_direct) - 1.0) <= TOL.gauss_integer
    return PairLinkReport(
        base_a=P_A,
        base_b=P_B,
        transformed_report=transformed,
        gauss_direct=gauss_direct,
        linked=linked,
    )
