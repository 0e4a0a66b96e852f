import math

import numpy as np
import pytest

from longmap.quaternions import (
    AxisAngle,
    Quaternion,
    directed_angle,
    distance,
    geodesic_distance,
    normalize,
    rotate,
    sphere_point,
)

I = np.array([1.0, 0.0, 0.0])
J = np.array([0.0, 1.0, 0.0])
K = np.array([0.0, 0.0, 1.0])


def test_exp_identities():
    assert distance(Quaternion.exp(0.0, I), Quaternion.one()) == 0.0
    qi = Quaternion.exp(math.pi / 2, I)
    assert distance(qi, Quaternion(0.0, 1.0, 0.0, 0.0)) < 1e-15
    assert distance(Quaternion.exp(math.pi, J),
                    Quaternion(-1.0, 0.0, 0.0, 0.0)) < 1e-15


def test_hamilton_products():
    qi = Quaternion(0.0, 1.0, 0.0, 0.0)
    qj = Quaternion(0.0, 0.0, 1.0, 0.0)
    qk = Quaternion(0.0, 0.0, 0.0, 1.0)
    assert distance(qi * qj, qk) < 1e-15
    assert distance(qj * qi, -qk) < 1e-15
    assert distance(qi * qi, Quaternion(-1.0, 0.0, 0.0, 0.0)) < 1e-15


def test_inverse_and_norm():
    rng = np.random.default_rng(1)
    for _ in range(50):
        v = rng.normal(size=4)
        q = Quaternion.from_components(*v)
        assert abs(q.norm - 1.0) < 1e-14
        assert distance(q * q.inverse(), Quaternion.one()) < 1e-14


def test_rotate_basis():
    # right-hand rule about the z axis
    assert np.allclose(rotate(I, math.pi / 2, K), J, atol=1e-15)
    assert np.allclose(rotate(J, math.pi / 2, K), -I, atol=1e-15)
    assert np.allclose(rotate(I, math.pi, K), -I, atol=1e-15)


def test_rotate_preserves_geometry():
    rng = np.random.default_rng(2)
    for _ in range(200):
        u = normalize(rng.normal(size=3))
        w = normalize(rng.normal(size=3))
        v = normalize(rng.normal(size=3))
        ang = rng.uniform(-10, 10)
        ur, wr = rotate(u, ang, v), rotate(w, ang, v)
        assert abs(np.linalg.norm(ur) - 1.0) <= 1e-12
        assert abs(np.dot(ur, wr) - np.dot(u, w)) <= 1e-12


def test_conjugation_matches_rotation():
    # exp(-b, v) * u * exp(b, v) acts on the pure part as the rotation by
    # -2b about v
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(1000):
        beta = rng.uniform(0, math.pi)
        u = normalize(rng.normal(size=3))
        v = normalize(rng.normal(size=3))
        q = Quaternion.exp(beta, v)
        conj = q.inverse() * Quaternion.from_vector(u) * q
        expect = Quaternion.from_vector(rotate(u, -2.0 * beta, v))
        worst = max(worst, distance(conj, expect))
    assert worst <= 1e-10


def test_conjugation_basis_example():
    # conjugating i by exp(pi/4, k) rotates it by -pi/2 about k, onto -j
    q = Quaternion.exp(math.pi / 4, K)
    got = Quaternion.from_vector(I).conjugated_by(q)
    assert distance(got, Quaternion.from_vector(-J)) < 1e-15


def test_log_exp_roundtrip():
    rng = np.random.default_rng(4)
    for _ in range(100):
        theta = rng.uniform(1e-6, math.pi - 1e-6)
        axis = normalize(rng.normal(size=3))
        aa = Quaternion.exp(theta, axis).log()
        assert abs(aa.theta - theta) < 1e-12
        assert np.allclose(aa.axis, axis, atol=1e-9)
        assert not aa.axis_arbitrary


def test_log_at_poles():
    aa = Quaternion.one().log()
    assert aa.theta == 0.0 and aa.axis_arbitrary
    aa = Quaternion(-1.0, 0.0, 0.0, 0.0).log()
    assert aa.theta == math.pi and aa.axis_arbitrary


def test_pow():
    q = Quaternion.exp(0.3, J)
    assert distance(q.pow(5), Quaternion.exp(1.5, J)) < 1e-14
    assert distance(q.pow(-2), Quaternion.exp(-0.6, J)) < 1e-14
    assert distance(q.pow(0), Quaternion.one()) == 0.0
    m = Quaternion(-1.0, 0.0, 0.0, 0.0)
    assert distance(m.pow(2), Quaternion.one()) == 0.0
    assert distance(m.pow(3), m) == 0.0
    with pytest.raises(TypeError):
        q.pow(0.5)


def test_geodesic_distance_accuracy():
    assert geodesic_distance(I, I) == 0.0
    assert abs(geodesic_distance(I, -I) - math.pi) < 1e-15
    # tiny angles survive; arccos of the dot product would not
    for t in (1e-8, 1e-10):
        u = rotate(I, t, K)
        assert abs(geodesic_distance(I, u) - t) < 1e-15


def test_directed_angle():
    assert abs(directed_angle(I, K, J) - math.pi / 2) < 1e-15
    assert abs(directed_angle(J, K, I) - 3 * math.pi / 2) < 1e-15
    got = rotate(I, 1.234, K)
    assert abs(directed_angle(I, K, got) - 1.234) < 1e-12


def test_sphere_point_and_normalize():
    p = sphere_point(3.0, 4.0, 0.0)
    assert np.allclose(p, [0.6, 0.8, 0.0])
    with pytest.raises(ValueError):
        normalize([0.0, 0.0, 0.0])


def test_axis_angle_frozen():
    aa = AxisAngle(0.5, I)
    with pytest.raises(Exception):
        aa.theta = 1.0
