#!/usr/bin/env python3
"""Quaternion arithmetic and the rotations it encodes.

Walks through the basics: a worked product, norms and inverses, turning
quaternions into axis/angle form and back, and composing two rotations by
multiplying their quaternions.
"""

import numpy as np

from hopf_atlas import quat, rotation

np.set_printoptions(suppress=True, precision=6)

print("== multiplication ==")
p, q = [3, 0, 2, 0], [1, -4, 0, 1]
print(f"(3 + 2j)(1 - 4i + k) = {quat.mul(p, q)}   # a + bi + cj + dk order")
print(f"i*j = {quat.mul(quat.I, quat.J)},  j*i = {quat.mul(quat.J, quat.I)}"
      "   (order matters)")

print()
print("== norm and inverse ==")
print(f"||(3,0,2,0)|| = {quat.norm(p):.6f} = sqrt(13)")
print(f"norms multiply: ||p q|| = {quat.norm(quat.mul(p, q)):.6f}"
      f" = ||p|| ||q|| = {quat.norm(p) * quat.norm(q):.6f}")
w = quat.inv([1, 1, 0, 0])
print(f"(1 + i)^-1 = {w}, check product = {quat.mul([1, 1, 0, 0], w)}")

print()
print("== rotating points ==")
print("conjugation p -> r p r^-1 rotates 3-space; the quaternion i flips y and z:")
for point in ([0, 1, 0], [0, 0, 1], [1, 0, 0]):
    print(f"  R_i{tuple(point)} = {rotation.rotate(quat.I, point)}")

print()
print("== axis/angle both ways ==")
r = rotation.from_axis_angle([0, 1, 0], 2 * np.pi / 3)
print(f"axis (0,1,0), angle 2pi/3  ->  quaternion {r}")
back = rotation.to_axis_angle(r)
print(f"... and back: axis {back.axis}, angle {back.angle:.6f} rad")
print(f"matrix form:\n{rotation.to_matrix(r)}")

print()
print("== composing rotations by multiplying quaternions ==")
qa = rotation.from_axis_angle([1, 0, 0], np.pi / 2)
qb = rotation.from_axis_angle([0, 1, 0], np.pi / 2)
product = quat.mul(qa, qb)
combined = rotation.to_axis_angle(product)
print(f"quarter turn about y, then quarter turn about x = quaternion {product}")
print(f"a single rotation: axis {combined.axis}, angle {combined.angle:.6f} rad"
      f" ({np.degrees(combined.angle):.1f} degrees)")

print()
print("== the double cover ==")
r = quat.as_unit(np.array([1.0, 2.0, -1.0, 0.5]) / np.linalg.norm([1, 2, -1, 0.5]))
pt = np.array([0.2, -1.0, 0.7])
print(f"r and -r rotate identically: {rotation.rotate(r, pt)}"
      f" == {rotation.rotate(-r, pt)}")
