"""Vector algebra of Minkowski 3-space with signature (+, +, -).

Vectors are plain numpy arrays whose last axis has length 3; every function
broadcasts over leading axes.
"""
import enum

import numpy as np

DEFAULT_TOL = 1e-10

# metric diag(1, 1, -1)
METRIC = np.array([1.0, 1.0, -1.0])


class CausalClass(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


def mvec(x1, x2, x3):
    """Build a single vector, rejecting non-finite coordinates."""
    v = np.array([x1, x2, x3], dtype=float)
    if not np.all(np.isfinite(v)):
        raise ValueError(f"non-finite coordinates {v!r}")
    return v


def minkowski_dot(u, v):
    u = np.asarray(u)
    v = np.asarray(v)
    return u[..., 0] * v[..., 0] + u[..., 1] * v[..., 1] - u[..., 2] * v[..., 2]


def det3(u, v, w):
    """Determinant of the matrix with rows u, v, w."""
    u = np.asarray(u)
    v = np.asarray(v)
    w = np.asarray(w)
    return (u[..., 0] * (v[..., 1] * w[..., 2] - v[..., 2] * w[..., 1])
            - u[..., 1] * (v[..., 0] * w[..., 2] - v[..., 2] * w[..., 0])
            + u[..., 2] * (v[..., 0] * w[..., 1] - v[..., 1] * w[..., 0]))


def lorentz_cross(u, v):
    """The vector w with minkowski_dot(w, z) == det3(u, v, z) for every z.

    This is the Euclidean cross product with its third component negated.
    """
    u = np.asarray(u)
    v = np.asarray(v)
    c1 = u[..., 1] * v[..., 2] - u[..., 2] * v[..., 1]
    c2 = u[..., 2] * v[..., 0] - u[..., 0] * v[..., 2]
    c3 = u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]
    return np.stack([c1, c2, -c3], axis=-1)


def lorentz_norm(v):
    return np.sqrt(np.abs(minkowski_dot(v, v)))


def causal_character(v, tol=DEFAULT_TOL):
    v = np.asarray(v, dtype=float)
    q = minkowski_dot(v, v)
    scale = max(1.0, float(np.dot(v, v)))
    if q > tol * scale:
        return CausalClass.SPACELIKE
    if q < -tol * scale:
        return CausalClass.TIMELIKE
    return CausalClass.LIGHTLIKE


_DUAL = {
    CausalClass.TIMELIKE: CausalClass.SPACELIKE,
    CausalClass.SPACELIKE: CausalClass.TIMELIKE,
    CausalClass.LIGHTLIKE: CausalClass.LIGHTLIKE,
}


def plane_character(normal, tol=DEFAULT_TOL):
    """Causal type of the plane orthogonal to ``normal``."""
    normal = np.asarray(normal, dtype=float)
    if not np.any(normal):
        raise ValueError("plane normal must be nonzero")
    return _DUAL[causal_character(normal, tol)]


def boost(rapidity, axis=0):
    """Lorentz boost mixing spatial axis ``axis`` (0 or 1) with x3."""
    ch, sh = np.cosh(rapidity), np.sinh(rapidity)
    L = np.eye(3)
    L[axis, axis] = ch
    L[2, 2] = ch
    L[axis, 2] = sh
    L[2, axis] = sh
    return L


def rotation(angle):
    """Rotation of the spacelike (x1, x2) plane about the x3 axis."""
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
