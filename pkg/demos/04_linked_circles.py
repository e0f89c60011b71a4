#!/usr/bin/env python3
"""Every pair of projected fibers is linked: certificates two ways.

For one fiber against the reference unit circle, the certificate is the
plane-crossing report (one intersection inside the circle, one outside).
For two arbitrary fibers, a sphere-preserving map carries the first onto the
reference circle; the transported second fiber is certified the same way,
and the Gauss linking number of the original pair confirms the verdict.

Pass --plot to also write linked_fibers.png (requires matplotlib).
"""

import sys

import numpy as np

from hopf_atlas import fibration, linkage

np.set_printoptions(suppress=True, precision=6)
rng = np.random.default_rng(23)

print("== one fiber against the unit circle in the y,z-plane ==")
rep = linkage.axis_link_report([0, 1, 0], 256)
print(f"fiber over (0,1,0) crosses the y,z-plane at:")
print(f"  A = {rep.a}   |A| = {rep.dist_inside:.6f}  (inside)")
print(f"  B = {rep.b}   |B| = {rep.dist_outside:.6f}  (outside)")
print(f"both on the line through the origin with direction {rep.line_direction}")
print(f"product of distances: {rep.dist_inside * rep.dist_outside:.12f}")
print(f"Gauss linking number vs the unit circle: {rep.gauss:+.6f}")

print()
print("== an arbitrary pair ==")
pair = linkage.pairwise_link_check([0, 1, 0], [0, 0, 1], 256)
print(f"fibers over (0,1,0) and (0,0,1): linked = {pair.linked},"
      f" Gauss = {pair.gauss_direct:+.6f}")
tr = pair.transformed_report
print(f"after carrying the first onto the unit circle, the second became the"
      f" fiber over {tr.base}")
print(f"  transported crossings at distances {tr.dist_inside:.6f} / "
      f"{tr.dist_outside:.6f} from the origin")

print()
print("== the straight-line fiber passes through every circle ==")
pair = linkage.pairwise_link_check([1, 0, 0], [0, 1, 0], 256)
print(f"fiber over (1,0,0) (the x-axis) vs fiber over (0,1,0):"
      f" linked = {pair.linked}, Gauss = {pair.gauss_direct:+.6f}")

print()
print("== a random flock, all pairwise linked ==")
bases = []
while len(bases) < 5:
    p = rng.normal(size=3)
    p /= np.linalg.norm(p)
    if 1 - abs(p[0]) > 0.05 and all(np.linalg.norm(p - b) > 0.3 for b in bases):
        bases.append(p)
checked = 0
for i in range(len(bases)):
    for j in range(i + 1, len(bases)):
        pair = linkage.pairwise_link_check(bases[i], bases[j], 128)
        assert pair.linked
        checked += 1
print(f"all {checked} pairs among 5 random fibers: linked")

if "--plot" in sys.argv:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig = plt.figure(figsize=(7, 7))
    ax = fig.add_subplot(projection="3d")
    t = np.linspace(0, 2 * np.pi, 257)
    for base, color in zip(bases, plt.cm.viridis(np.linspace(0, 0.9, len(bases)))):
        poly = linkage.projected_polyline(fibration.fiber(base, "auto", 256))
        closed = np.vstack([poly, poly[:1]])
        ax.plot(*closed.T, color=color, lw=1.2)
    ax.plot(np.zeros_like(t), np.sin(t), np.cos(t), "k--", lw=0.8)
    ax.set_xlim(-3, 3), ax.set_ylim(-3, 3), ax.set_zlim(-3, 3)
    ax.set_title("projected fibers: pairwise linked circles")
    fig.savefig("linked_fibers.png", dpi=150)
    print("wrote linked_fibers.png")
