"""Rotation map tests: worked rotations, axis/angle round trips, group behavior."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from hopf_atlas import quat, rotation
from hopf_atlas.errors import DomainError

rng = np.random.default_rng(7151)

SQ2 = np.sqrt(2.0)


def random_units(n):
    q = rng.normal(size=(n, 4))
    return q / np.linalg.norm(q, axis=1, keepdims=True)


def test_rotate_identity_quaternion():
    p = np.array([0.3, -0.7, 2.0])
    assert_allclose(rotation.rotate(quat.ONE, p), p, rtol=0, atol=0)


def test_rotate_by_i_flips_y():
    # i * j * (-i) = -j
    assert_allclose(rotation.rotate(quat.I, [0, 1, 0]), [0, -1, 0], rtol=0, atol=1e-15)


def test_rotate_half_turn_example():
    # (1+i) j (1-i) / 2 = k
    r = np.array([1.0, 1.0, 0.0, 0.0]) / SQ2
    assert_allclose(rotation.rotate(r, [0, 1, 0]), [0, 0, 1], rtol=0, atol=1e-15)


def test_rotate_zero_quaternion_rejected():
    with pytest.raises(DomainError):
        rotation.rotate([0, 0, 0, 0], [1, 0, 0])


def test_rotate_output_is_pure_and_isometric():
    for r in random_units(100):
        p = rng.normal(size=3)
        pure = np.concatenate([[0.0], p])
        prod = quat.mul(quat.mul(r, pure), quat.inv(r))
        assert abs(prod[0]) <= 1e-12
        assert abs(np.linalg.norm(prod[1:]) - np.linalg.norm(p)) <= 1e-9


def test_to_axis_angle_identity_cases():
    assert isinstance(rotation.to_axis_angle([1, 0, 0, 0]), rotation.Identity)
    assert isinstance(rotation.to_axis_angle([-1, 0, 0, 0]), rotation.Identity)


def test_to_axis_angle_half_turn_about_z():
    aa = rotation.to_axis_angle(quat.K)
    assert isinstance(aa, rotation.AxisAngle)
    assert_allclose(aa.axis, [0, 0, 1], rtol=0, atol=0)
    assert aa.angle == pytest.approx(np.pi, abs=1e-15)


def test_to_axis_angle_quarter_turn_about_x():
    aa = rotation.to_axis_angle(np.array([1, 1, 0, 0]) / SQ2)
    assert_allclose(aa.axis, [1, 0, 0], rtol=0, atol=0)
    assert aa.angle == pytest.approx(2 * np.arccos(1 / SQ2), abs=1e-15)
    assert aa.angle == pytest.approx(np.pi / 2, abs=1e-12)


def test_to_axis_angle_arcsin_consistency():
    for r in random_units(300):
        extracted = rotation.to_axis_angle(r)
        if isinstance(extracted, rotation.Identity):
            continue
        vec_len = np.linalg.norm(r[1:])
        # sin(theta/2) must reproduce the vector-part length ...
        assert abs(np.sin(extracted.angle / 2) - vec_len) <= 1e-9
        # ... and for scalar part >= 0 the arcsin form gives the angle itself
        if r[0] >= 0:
            assert abs(2 * np.arcsin(min(vec_len, 1.0)) - extracted.angle) <= 1e-9


def test_from_axis_angle_examples():
    assert_allclose(
        rotation.from_axis_angle([1, 0, 0], np.pi / 2),
        np.array([1, 1, 0, 0]) / SQ2, rtol=0, atol=1e-15,
    )
    assert_allclose(
        rotation.from_axis_angle([0, 0, 1], np.pi), [0, 0, 0, 1], rtol=0, atol=1e-15
    )
    assert_allclose(
        rotation.from_axis_angle([0, 1, 0], 2 * np.pi / 3),
        [0.5, 0, np.sqrt(3) / 2, 0], rtol=0, atol=1e-15,
    )


def test_axis_angle_round_trip():
    for _ in range(200):
        axis = rng.normal(size=3)
        axis /= np.linalg.norm(axis)
        angle = rng.uniform(1e-4, 2 * np.pi - 1e-4)
        back = rotation.to_axis_angle(rotation.from_axis_angle(axis, angle))
        assert isinstance(back, rotation.AxisAngle)
        assert_allclose(back.axis, axis, rtol=0, atol=1e-9)
        assert abs(back.angle - angle) <= 1e-9


def test_to_matrix_known_values():
    assert_allclose(rotation.to_matrix(quat.ONE), np.eye(3), rtol=0, atol=0)
    assert_allclose(rotation.to_matrix(quat.I), np.diag([1.0, -1.0, -1.0]),
                    rtol=0, atol=0)
    m = rotation.to_matrix(np.array([1, 0, 0, 1]) / SQ2)
    expected = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
    assert_allclose(m, expected, rtol=0, atol=1e-15)


def test_to_matrix_columns_match_rotate():
    # independent route: the matrix columns must be the rotated basis vectors
    basis = np.eye(3)
    for r in random_units(100):
        m = rotation.to_matrix(r)
        for col in range(3):
            assert_allclose(m[:, col], rotation.rotate(r, basis[col]),
                            rtol=0, atol=1e-12)
        assert_allclose(m.T @ m, np.eye(3), rtol=0, atol=1e-9)
        assert np.linalg.det(m) == pytest.approx(1.0, abs=1e-9)
        p = rng.normal(size=3)
        assert_allclose(m @ p, rotation.rotate(r, p), rtol=0, atol=1e-12)


def test_rotations_taking_x_to_examples():
    r1, r2 = rotation.rotations_taking_x_to([1, 0, 0])
    assert_allclose(r1, quat.I, rtol=0, atol=0)
    assert_allclose(r2, quat.ONE, rtol=0, atol=0)

    r1, r2 = rotation.rotations_taking_x_to([0, 1, 0])
    assert_allclose(r1, np.array([0, 1, 1, 0]) / SQ2, rtol=0, atol=1e-15)
    assert_allclose(r2, np.array([1, 0, 0, 1]) / SQ2, rtol=0, atol=1e-15)

    r1, r2 = rotation.rotations_taking_x_to([0, 0, 1])
    assert_allclose(r1, np.array([0, 1, 0, 1]) / SQ2, rtol=0, atol=1e-15)
    assert_allclose(r2, np.array([1, 0, -1, 0]) / SQ2, rtol=0, atol=1e-15)


def test_rotations_taking_x_to_properties():
    x_hat = np.array([1.0, 0.0, 0.0])
    for _ in range(100):
        P = rng.normal(size=3)
        P /= np.linalg.norm(P)
        if 1 + P[0] <= 1e-3:
            continue
        r1, r2 = rotation.rotations_taking_x_to(P)
        for r in (r1, r2):
            assert abs(quat.norm(r) - 1.0) <= 1e-12
            assert_allclose(rotation.rotate(r, x_hat), P, rtol=0, atol=1e-9)
        # r1 is the half-turn about the midpoint direction
        assert abs(r1[0]) <= 1e-15
        aa1 = rotation.to_axis_angle(r1)
        assert aa1.angle == pytest.approx(np.pi, abs=1e-9)
        mid = (x_hat + P) / np.linalg.norm(x_hat + P)
        assert_allclose(aa1.axis, mid, rtol=0, atol=1e-9)
        # r2 turns about the common perpendicular by the angle between them
        aa2 = rotation.to_axis_angle(r2)
        perp = np.cross(x_hat, P)
        perp /= np.linalg.norm(perp)
        agree = min(np.linalg.norm(aa2.axis - perp), np.linalg.norm(aa2.axis + perp))
        assert agree <= 1e-9
        assert np.cos(aa2.angle) == pytest.approx(float(P[0]), abs=1e-9)


def test_rotations_taking_x_to_antipode_rejected():
    with pytest.raises(DomainError, match="k-gauge"):
        rotation.rotations_taking_x_to([-1, 0, 0])


def test_homomorphism_property():
    for _ in range(300):
        r, s = random_units(2)
        p = rng.normal(size=3)
        lhs = rotation.rotate(quat.mul(r, s), p)
        rhs = rotation.rotate(r, rotation.rotate(s, p))
        assert np.linalg.norm(lhs - rhs) <= 1e-9 * np.linalg.norm(p)


def test_scale_invariance():
    for r in random_units(100):
        k = rng.uniform(0.1, 10.0) * rng.choice([-1.0, 1.0])
        p = rng.normal(size=3)
        assert_allclose(rotation.rotate(k * r, p), rotation.rotate(r, p),
                        rtol=0, atol=1e-9 * max(1.0, np.linalg.norm(p)))


def test_rotate_inverse_undoes():
    for r in random_units(100):
        p = rng.normal(size=3)
        back = rotation.rotate(quat.inv(r), rotation.rotate(r, p))
        assert np.linalg.norm(back - p) <= 1e-9 * max(1.0, np.linalg.norm(p))


def test_double_cover():
    for r in random_units(100):
        p = rng.normal(size=3)
        assert_allclose(rotation.rotate(-r, p), rotation.rotate(r, p),
                        rtol=0, atol=1e-12 * max(1.0, np.linalg.norm(p)))


def test_axis_is_fixed_eigenvector():
    for r in random_units(200):
        vec = r[1:]
        if np.linalg.norm(vec) < 1e-6:
            continue
        assert np.linalg.norm(rotation.rotate(r, vec) - vec) <= 1e-9


def _angle_check_vector(r):
    a, b, c, d = r
    if abs(b) > 1e-12 or abs(c) > 1e-12:
        return np.array([c, -b, 0.0])
    return np.array([1.0, 0.0, 0.0])


def test_angle_check_formula():
    # (w . R w)/||w||^2 == 2 a^2 - 1 for w perpendicular to the axis
    samples = list(random_units(150))
    for _ in range(50):
        theta = rng.uniform(0, 2 * np.pi)
        samples.append(np.array([np.cos(theta / 2), 0.0, 0.0, np.sin(theta / 2)]))
    for r in samples:
        w = _angle_check_vector(r)
        val = float(w @ rotation.rotate(r, w)) / float(w @ w)
        assert abs(val - (2 * r[0] ** 2 - 1)) <= 1e-9
