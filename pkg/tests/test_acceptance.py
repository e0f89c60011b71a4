"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines.  Tolerances are pinned here and never relaxed.
"""

import json
import time
from pathlib import Path

import numpy as np
from fastapi.testclient import TestClient

from hopf_atlas import fibration, linkage, quat, rotation, stereo
from hopf_atlas.cli import main as cli_main
from hopf_atlas.service import create_app

rng = np.random.default_rng(314159)
FIXTURES = Path(__file__).parent / "fixtures"


def report(num, name, ok, note=""):
    suffix = f" ({note})" if note else ""
    print(f"criterion {num:02d} {name}: {'PASS' if ok else 'FAIL'}{suffix}")
    assert ok, f"criterion {num} {name} failed {suffix}"


def random_units(n):
    q = rng.normal(size=(n, 4))
    return q / np.linalg.norm(q, axis=1, keepdims=True)


def fibonacci_sphere(n):
    golden = (1 + np.sqrt(5)) / 2
    i = np.arange(n)
    z = 1 - 2 * (i + 0.5) / n
    theta = 2 * np.pi * i / golden
    s = np.sqrt(1 - z * z)
    return np.stack([s * np.cos(theta), s * np.sin(theta), z], axis=1)


def grid_points(n=200, cap=1e-3):
    pts = fibonacci_sphere(n)
    keep = (np.linalg.norm(pts - [1, 0, 0], axis=1) > cap) & (
        np.linalg.norm(pts - [-1, 0, 0], axis=1) > cap
    )
    return pts[keep]


def test_criterion_01_hopf_form_equivalence():
    start = time.perf_counter()
    r = random_units(10_000)
    dev = float(np.max(np.linalg.norm(fibration.hopf(r) - fibration.hopf_quat(r),
                                      axis=1)))
    elapsed = time.perf_counter() - start
    report(1, "hopf-form-equivalence", dev < 1e-12 and elapsed < 1.0,
           f"max dev {dev:.2e}, {elapsed:.2f} s")


def test_criterion_02_fiber_correctness():
    start = time.perf_counter()
    worst = 0.0
    for P in grid_points():
        fb = fibration.fiber(P, "auto", 64)
        dev = np.max(np.linalg.norm(fibration.hopf(fb.points) - P, axis=1))
        worst = max(worst, float(dev))
    elapsed = time.perf_counter() - start
    report(2, "fiber-correctness", worst < 1e-9 and elapsed < 1.0,
           f"max dev {worst:.2e}, {elapsed:.2f} s")


def test_criterion_03_gauge_equivalence():
    worst = 0.0
    for P in grid_points():
        r1, r2 = rotation.rotations_taking_x_to(P)
        w = quat.mul(quat.inv(r1), r2)
        worst = max(worst, abs(float(w[2])), abs(float(w[3])))
    report(3, "gauge-equivalence", worst < 1e-9, f"max |j|,|k| {worst:.2e}")


def test_criterion_04_rotation_homomorphism():
    r = random_units(10_000)[:, np.newaxis, :]
    s = random_units(10_000)[:, np.newaxis, :]
    p = rng.normal(size=(10_000, 10, 3))
    lhs = rotation.rotate(quat.mul(r, s), p)
    rhs = rotation.rotate(r, rotation.rotate(s, p))
    rel = np.linalg.norm(lhs - rhs, axis=-1) / np.linalg.norm(p, axis=-1)
    worst = float(np.max(rel))
    report(4, "rotation-homomorphism", worst < 1e-9, f"max rel err {worst:.2e}")


def test_criterion_05_double_cover_and_scale():
    basis = np.eye(3)
    worst_cover = 0.0
    worst_scale = 0.0
    for r in random_units(1_000):
        k = rng.uniform(0.1, 10.0) * rng.choice([-1.0, 1.0])
        base = rotation.rotate(r, basis)
        worst_cover = max(worst_cover, float(np.max(np.abs(
            rotation.rotate(-r, basis) - base))))
        worst_scale = max(worst_scale, float(np.max(np.abs(
            rotation.rotate(k * r, basis) - base))))
    report(5, "double-cover-and-scale",
           worst_cover < 1e-12 and worst_scale < 1e-9,
           f"cover {worst_cover:.2e}, scale {worst_scale:.2e}")


def test_criterion_06_axis_angle():
    samples = list(random_units(950))
    for theta in rng.uniform(0.1, 2 * np.pi - 0.1, size=50):
        samples.append(np.array([np.cos(theta / 2), 0.0, 0.0, np.sin(theta / 2)]))
    worst_eig = 0.0
    worst_angle = 0.0
    for r in samples:
        vec = r[1:]
        if np.linalg.norm(vec) > 1e-12:
            worst_eig = max(worst_eig,
                            float(np.linalg.norm(rotation.rotate(r, vec) - vec)))
        if abs(r[1]) > 1e-12 or abs(r[2]) > 1e-12:
            w = np.array([r[2], -r[1], 0.0])
        else:
            w = np.array([1.0, 0.0, 0.0])
        val = float(w @ rotation.rotate(r, w)) / float(w @ w)
        worst_angle = max(worst_angle, abs(val - (2 * r[0] ** 2 - 1)))
    report(6, "axis-angle", worst_eig < 1e-9 and worst_angle < 1e-9,
           f"eig {worst_eig:.2e}, angle {worst_angle:.2e}")


def _circle_on_s2(u, alpha, n=64):
    u = u / np.linalg.norm(u)
    probe = np.eye(3)[np.argmin(np.abs(u))]
    e1 = probe - (probe @ u) * u
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(u, e1)
    t = np.linspace(0, 2 * np.pi, n, endpoint=False)
    return np.cos(alpha) * u + np.sin(alpha) * (np.cos(t)[:, None] * e1
                                                + np.sin(t)[:, None] * e2)


def _circle_on_s3(through_pole=False, n=64):
    pole = np.array([1.0, 0.0, 0.0, 0.0])
    while True:
        if through_pole:
            u = rng.normal(size=4)
            u /= np.linalg.norm(u)
            lam = u @ pole
            if abs(lam) < 0.1:
                continue
            if lam < 0:
                u, lam = -u, -lam
            c = lam * u
            rho = np.sqrt(1 - lam * lam)
            if rho < 0.05:
                continue
            e1 = (pole - c) / rho
        else:
            basis = np.linalg.qr(rng.normal(size=(4, 3)))[0].T
            e1, c_dir = basis[0], basis[2]
            rho = rng.uniform(0.05, 0.999)
            c = np.sqrt(1 - rho * rho) * c_dir
        probe = rng.normal(size=4)
        e2 = probe - (probe @ e1) * e1
        if c @ c > 1e-12:
            e2 = e2 - (e2 @ c) * c / (c @ c)
        n2 = np.linalg.norm(e2)
        if n2 < 1e-6:
            continue
        e2 /= n2
        t = np.linspace(0, 2 * np.pi, n, endpoint=False)
        return c + rho * (np.cos(t)[:, None] * e1 + np.sin(t)[:, None] * e2)


def test_criterion_07_circle_preservation():
    pole2 = np.array([0.0, 0.0, 1.0])
    pole3 = np.array([1.0, 0.0, 0.0, 0.0])
    worst = 0.0
    done = 0
    while done < 100:
        u = rng.normal(size=3)
        u /= np.linalg.norm(u)
        pts = _circle_on_s2(u, rng.uniform(0.05, np.pi / 2))
        if np.min(np.linalg.norm(pts - pole2, axis=1)) <= 1e-3:
            continue
        flat = stereo.proj_s2(pts)
        fit = stereo.fit_circle_or_line(
            np.concatenate([flat, np.zeros((len(flat), 1))], axis=1))
        assert isinstance(fit, stereo.Circle3)
        worst = max(worst, fit.residual)
        done += 1
    done = 0
    while done < 100:
        pts = _circle_on_s3()
        if np.min(np.linalg.norm(pts - pole3, axis=1)) <= 1e-3:
            continue
        fit = stereo.fit_circle_or_line(stereo.proj_s3(pts))
        assert isinstance(fit, stereo.Circle3)
        worst = max(worst, fit.residual)
        done += 1
    worst_line = 0.0
    done = 0
    while done < 10:
        u = rng.normal(size=3)
        u /= np.linalg.norm(u)
        if abs(u[2]) > 0.98:
            continue
        alpha = np.arccos(np.clip(u @ pole2, -1, 1))
        pts = _circle_on_s2(u, alpha)
        keep = np.linalg.norm(pts - pole2, axis=1) > 1e-6
        flat = stereo.proj_s2(pts[keep])
        fit = stereo.fit_circle_or_line(
            np.concatenate([flat, np.zeros((len(flat), 1))], axis=1))
        assert isinstance(fit, stereo.Line3)
        worst_line = max(worst_line, fit.residual)
        done += 1
    for _ in range(10):
        pts = _circle_on_s3(through_pole=True)
        projected, _ = stereo.proj_s3_filtered(pts)
        fit = stereo.fit_circle_or_line(projected)
        assert isinstance(fit, stereo.Line3)
        worst_line = max(worst_line, fit.residual)
    report(7, "circle-preservation", worst < 1e-6 and worst_line < 1e-6,
           f"circle res {worst:.2e}, line res {worst_line:.2e}")


def test_criterion_08_known_projections():
    fb = fibration.fiber([-1, 0, 0], "auto", 256)
    fit = stereo.fit_circle_or_line(linkage.projected_polyline(fb))
    ok_circle = (
        isinstance(fit, stereo.Circle3)
        and np.max(np.abs(fit.center)) < 1e-9
        and abs(fit.radius - 1.0) < 1e-9
        and min(np.linalg.norm(fit.normal - [1, 0, 0]),
                np.linalg.norm(fit.normal + [1, 0, 0])) < 1e-9
    )
    fb = fibration.fiber([1, 0, 0], "auto", 256)
    fit = stereo.fit_circle_or_line(linkage.projected_polyline(fb))
    ok_line = (
        isinstance(fit, stereo.Line3)
        and np.max(np.abs(fit.point)) < 1e-9
        and min(np.linalg.norm(fit.direction - [1, 0, 0]),
                np.linalg.norm(fit.direction + [1, 0, 0])) < 1e-9
    )
    report(8, "known-projections", ok_circle and ok_line)


def test_criterion_09_linkage():
    start = time.perf_counter()
    worst_gauss = 0.0
    worst_dir = 0.0
    worst_prod = 0.0
    all_linked = True
    for _ in range(100):
        while True:
            pts = rng.normal(size=(2, 3))
            pts /= np.linalg.norm(pts, axis=1, keepdims=True)
            pa, pb = pts
            ok = all(1 - abs(p[0]) > 1e-3 for p in pts)
            if ok and np.linalg.norm(pa - pb) > 1e-2:
                break
        pair = linkage.pairwise_link_check(pa, pb, 256)
        all_linked &= pair.linked
        worst_gauss = max(worst_gauss, abs(abs(pair.gauss_direct) - 1.0))
        for P, rep in ((pa, linkage.axis_link_report(pa, 256)),
                       (pb, linkage.axis_link_report(pb, 256)),
                       (rep_base := pair.transformed_report.base,
                        pair.transformed_report)):
            all_linked &= rep.dist_inside < 1.0 < rep.dist_outside
            worst_prod = max(worst_prod,
                             abs(rep.dist_inside * rep.dist_outside - 1.0))
            expected = np.array([0.0, P[2], -P[1]])
            expected /= np.linalg.norm(expected)
            worst_dir = max(worst_dir,
                            float(np.linalg.norm(rep.line_direction - expected)))
            worst_gauss = max(worst_gauss, abs(abs(rep.gauss) - 1.0))
    elapsed = time.perf_counter() - start
    ok = (all_linked and worst_gauss <= 0.02 and worst_dir <= 1e-6
          and worst_prod <= 1e-6 and elapsed < 30.0)
    report(9, "linkage", ok,
           f"gauss {worst_gauss:.2e}, dir {worst_dir:.2e}, "
           f"prod {worst_prod:.2e}, {elapsed:.1f} s")


def test_criterion_10_carry_map_target():
    worst = 0.0
    for _ in range(50):
        r = rng.normal(size=4)
        r /= np.linalg.norm(r)
        ts = np.arange(512) * 2 * np.pi / 512
        samples = quat.mul(r, quat.exp_i(ts))
        projected, _ = stereo.proj_s3_filtered(samples)
        images = linkage.carry_to_unit_circle(projected, r)
        radial = np.hypot(images[:, 1], images[:, 2]) - 1.0
        dist = np.hypot(images[:, 0], radial)
        worst = max(worst, float(np.max(dist)))
    report(10, "carry-map-target", worst < 1e-6, f"max dist {worst:.2e}")


def test_criterion_11_golden_cli_and_service(capsys):
    client = TestClient(create_app())
    ok = True
    cases = [
        ("fiber_0_1_0.json", "0,1,0", {"p1": "0", "p2": "1", "p3": "0"}),
        ("fiber_1_0_0.json", "1,0,0", {"p1": "1", "p2": "0", "p3": "0"}),
        ("fiber_m1_0_0.json", "-1,0,0", {"p1": "-1", "p2": "0", "p3": "0"}),
    ]
    for fixture, point, params in cases:
        rc = cli_main(["fiber", "--point", point])
        out = capsys.readouterr().out
        ok &= rc == 0
        ok &= out.encode() == (FIXTURES / fixture).read_bytes()
        response = client.get("/api/fiber", params=params)
        ok &= response.content == out.encode()
    with capsys.disabled():
        report(11, "golden-cli-and-service", ok)


def test_criterion_12_worked_product():
    product = quat.mul([3, 0, 2, 0], [1, -4, 0, 1])
    report(12, "worked-product", product.tolist() == [3.0, -10.0, 2.0, 11.0],
           f"got {product.tolist()}")
