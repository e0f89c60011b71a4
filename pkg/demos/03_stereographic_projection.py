#!/usr/bin/env python3
"""Stereographic projection and the circle-preservation property.

Projects the 2-sphere to the plane and the 3-sphere to 3-space, round-trips
through the inverse maps, and fits projected circles to confirm that circles
stay circles (or become lines when they pass through the projection pole).
"""

import numpy as np

from hopf_atlas import fibration, stereo
from hopf_atlas.linkage import projected_polyline

np.set_printoptions(suppress=True, precision=6)
rng = np.random.default_rng(11)

print("== S^2 -> plane ==")
for p in ([0, 0, -1], [1, 0, 0], [0, 0.6, 0.8]):
    print(f"  {tuple(p)} -> {stereo.proj_s2(p)}")
print("inverse round trip on a random plane point:")
q = rng.normal(scale=2.0, size=2)
print(f"  {q} -> sphere {stereo.unproj_s2(q)} -> {stereo.proj_s2(stereo.unproj_s2(q))}")

print()
print("== S^3 -> 3-space ==")
for p in ([-1, 0, 0, 0], [0, 1, 0, 0], [1 / np.sqrt(2), 0, 0, 1 / np.sqrt(2)]):
    print(f"  {tuple(np.round(p, 6))} -> {stereo.proj_s3(p)}")

print()
print("== projected fiber circles ==")
fb = fibration.fiber([-1, 0, 0], "auto", 256)
fit = stereo.fit_circle_or_line(projected_polyline(fb))
print(f"fiber over (-1,0,0) projects to: center {fit.center}, radius {fit.radius:.6f},"
      f" normal {fit.normal}")
fb = fibration.fiber([1, 0, 0], "auto", 256)
fit = stereo.fit_circle_or_line(projected_polyline(fb))
print(f"fiber over (1,0,0) projects to a line: point {fit.point},"
      f" direction {fit.direction}")
fb = fibration.fiber([0, 1, 0], "auto", 256)
fit = stereo.fit_circle_or_line(projected_polyline(fb))
print(f"fiber over (0,1,0) projects to: center {fit.center}, radius {fit.radius:.6f}")

print()
print("== circles stay circles under projection ==")
worst = 0.0
for _ in range(20):
    u = rng.normal(size=3)
    u /= np.linalg.norm(u)
    alpha = rng.uniform(0.1, 1.4)
    probe = np.eye(3)[np.argmin(np.abs(u))]
    e1 = probe - (probe @ u) * u
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(u, e1)
    t = np.linspace(0, 2 * np.pi, 64, endpoint=False)
    circle = np.cos(alpha) * u + np.sin(alpha) * (np.cos(t)[:, None] * e1
                                                  + np.sin(t)[:, None] * e2)
    if np.min(np.linalg.norm(circle - [0, 0, 1], axis=1)) < 1e-2:
        continue
    flat = stereo.proj_s2(circle)
    fit = stereo.fit_circle_or_line(np.concatenate([flat, np.zeros((64, 1))], axis=1))
    worst = max(worst, fit.residual)
print(f"20 random spherical circles fitted after projection;"
      f" worst residual {worst:.2e}")
