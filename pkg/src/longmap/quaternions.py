"""Unit quaternion and sphere arithmetic.

Conventions
-----------
- Quaternions are written a + b*i + c*j + d*k and kept unit-norm
  (renormalized after every product chain).
- Points of S^2 are pure unit quaternions, stored as length-3 numpy arrays.
- Rotations act on the *right* of their argument with the right-hand rule:
  ``rotate(u, angle, v)`` rotates u about the axis v.  Conjugation by
  exp(beta, v) therefore acts as the rotation by -2*beta about v.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

NORM_TOL = 1e-12
POLE_TOL = 1e-12

__all__ = [
    "NORM_TOL",
    "POLE_TOL",
    "Quaternion",
    "AxisAngle",
    "sphere_point",
    "normalize",
    "geodesic_distance",
    "rotate",
    "directed_angle",
]


def sphere_point(x, y, z):
    """Unit vector in R^3 from raw components."""
    return normalize(np.array([x, y, z], dtype=float))


def normalize(u):
    u = np.asarray(u, dtype=float)
    nrm = np.linalg.norm(u, axis=-1, keepdims=True)
    if np.any(nrm == 0.0):
        raise ValueError("cannot normalize a zero vector")
    return u / nrm


def geodesic_distance(u, v):
    """Length of the shortest great-circle arc between unit vectors.

    Computed as atan2(|u x v|, u.v), which stays accurate near 0 and pi
    where arccos of the dot product loses half the significant digits.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    cross = np.linalg.norm(np.cross(u, v), axis=-1)
    dot = np.sum(u * v, axis=-1)
    return np.arctan2(cross, dot)


def rotate(u, angle, v):
    """Rodrigues rotation of u about the unit axis v (right-hand rule).

    Broadcasts over leading axes: u and v may be stacks of shape (..., 3),
    angle a scalar or matching stack.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    angle = np.asarray(angle, dtype=float)
    cos_a = np.cos(angle)[..., np.newaxis]
    sin_a = np.sin(angle)[..., np.newaxis]
    dot = np.sum(u * v, axis=-1, keepdims=True)
    return u * cos_a + np.cross(v, u) * sin_a + v * dot * (1.0 - cos_a)


def directed_angle(a, b, c):
    """The angle phi in [0, 2*pi) with c = rotate(a, phi, b).

    Requires a and c to lie at equal geodesic distance from b; the angle is
    measured right-handed about b.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    a_perp = a - np.sum(a * b, axis=-1, keepdims=True) * b
    c_perp = c - np.sum(c * b, axis=-1, keepdims=True) * b
    y = np.sum(np.cross(a_perp, c_perp) * b, axis=-1)
    x = np.sum(a_perp * c_perp, axis=-1)
    return np.mod(np.arctan2(y, x), 2.0 * math.pi)


@dataclass(frozen=True)
class AxisAngle:
    """Canonical axis-angle form: theta in [0, pi], unit axis.

    ``axis_arbitrary`` is set when the source quaternion was +-1, where the
    axis is genuinely undefined (the conventional axis i is stored).
    """

    theta: float
    axis: np.ndarray
    axis_arbitrary: bool = False


@dataclass(frozen=True)
class Quaternion:
    """Element of SU(2) as a unit quaternion a + b*i + c*j + d*k."""

    a: float
    b: float
    c: float
    d: float

    @staticmethod
    def one():
        return Quaternion(1.0, 0.0, 0.0, 0.0)

    @staticmethod
    def from_components(a, b, c, d):
        nrm = math.sqrt(a * a + b * b + c * c + d * d)
        if nrm == 0.0:
            raise ValueError("zero quaternion")
        return Quaternion(a / nrm, b / nrm, c / nrm, d / nrm)

    @staticmethod
    def exp(theta, axis):
        """cos(theta) + sin(theta) * axis for a unit axis in S^2."""
        axis = np.asarray(axis, dtype=float)
        s = math.sin(theta)
        return Quaternion.from_components(
            math.cos(theta), s * axis[0], s * axis[1], s * axis[2]
        )

    @staticmethod
    def from_vector(u):
        """Pure quaternion from a unit vector (an element of S^2)."""
        u = normalize(u)
        return Quaternion(0.0, u[0], u[1], u[2])

    @property
    def vec(self):
        return np.array([self.b, self.c, self.d])

    @property
    def norm(self):
        return math.sqrt(self.a**2 + self.b**2 + self.c**2 + self.d**2)

    def normalized(self):
        return Quaternion.from_components(self.a, self.b, self.c, self.d)

    def __mul__(self, other):
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        return Quaternion.from_components(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def inverse(self):
        # unit quaternion: inverse = conjugate
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def log(self):
        """Canonical axis-angle with theta in [0, pi].

        For q = +-1 (within POLE_TOL) the axis is arbitrary; i is returned
        with the ``axis_arbitrary`` flag set.
        """
        v = self.vec
        s = np.linalg.norm(v)
        theta = math.atan2(s, self.a)
        if s < POLE_TOL:
            return AxisAngle(0.0 if self.a > 0 else math.pi,
                             np.array([1.0, 0.0, 0.0]), axis_arbitrary=True)
        return AxisAngle(theta, v / s)

    def pow(self, k):
        """Integer power via axis-angle; q^0 = 1, poles by scalar power."""
        if not isinstance(k, (int, np.integer)):
            raise TypeError("only integer exponents are supported")
        if k == 0:
            return Quaternion.one()
        aa = self.log()
        if aa.axis_arbitrary:
            # q is +-1 up to rounding
            if aa.theta == 0.0 or k % 2 == 0:
                return Quaternion.one()
            return Quaternion(-1.0, 0.0, 0.0, 0.0)
        return Quaternion.exp(k * aa.theta, aa.axis)

    def conjugated_by(self, q):
        """q^-1 * self * q."""
        return q.inverse() * self * q

    def commutes_with(self, other, tol=1e-9):
        return distance(self * other, other * self) <= tol

    def isclose(self, other, tol=1e-9):
        return distance(self, other) <= tol


def distance(p, q):
    """Euclidean distance between two quaternions as points of S^3."""
    return math.sqrt(
        (p.a - q.a) ** 2 + (p.b - q.b) ** 2 + (p.c - q.c) ** 2 + (p.d - q.d) ** 2
    )
