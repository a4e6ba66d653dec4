"""Fundamental forms, curvatures and Weingarten residuals from surface jets.

Orientation follows the unit normal ``Xu ^ Xv / |Xu ^ Xv|`` built from the
(u, v) order of the parametrization, so the sign of H is tied to that order.
"""
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import kernels
from .errors import DegeneratePointError, NonSpacelikeError
from .jets import Jet2, VecJet2
from .lorentz import lorentz_cross, lorentz_norm, minkowski_dot

DEGENERACY_TOL = 1e-12
SPACELIKE_TOL = 1e-12


@dataclass(frozen=True)
class FundamentalForms:
    E: np.ndarray
    F: np.ndarray
    G: np.ndarray
    e: np.ndarray
    f: np.ndarray
    g: np.ndarray
    W: np.ndarray


@dataclass(frozen=True)
class CurvaturePair:
    H: np.ndarray
    K: np.ndarray


@dataclass(frozen=True)
class WeingartenCoeffs:
    a: float
    b: float
    c: float

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("Weingarten coefficients need a or b nonzero")

    def flipped(self):
        return WeingartenCoeffs(-self.a, self.b, self.c)


@dataclass(frozen=True)
class Surface:
    """An evaluable parametrized surface.

    ``build(u, v)`` receives a u-jet and a v-jet and returns the three
    coordinate jets.  ``mode`` says how the rationalized residual depends on v
    along a foliation curve: ``harmonic`` (cos/sin of jv), ``hyperbolic``
    (cosh/sinh of jv) or ``monomial`` (powers of v).
    """

    name: str
    build: Callable
    domain: tuple
    mode: str = "harmonic"
    info: dict = field(default_factory=dict, compare=False)

    def jet(self, u, v):
        u = np.asarray(u, dtype=float)
        v = np.asarray(v)
        u, v = np.broadcast_arrays(u, v)
        x1, x2, x3 = self.build(Jet2.var_u(u), Jet2.var_v(v))
        return VecJet2.from_components(x1, x2, x3)

    def point(self, u, v):
        return self.jet(u, v).X

    def grid(self, nu, nv, domain=None):
        umin, umax, vmin, vmax = domain or self.domain
        U, V = np.meshgrid(np.linspace(umin, umax, nu), np.linspace(vmin, vmax, nv),
                           indexing="ij")
        return U, V


def _euclid(x):
    return np.sqrt(np.sum(np.abs(x) ** 2, axis=-1))


def gauss_map(j):
    w = lorentz_cross(j.Xu, j.Xv)
    nrm = lorentz_norm(w)
    scale = _euclid(j.Xu) * _euclid(j.Xv)
    if np.any(nrm <= DEGENERACY_TOL * np.maximum(scale, 1e-300)):
        raise DegeneratePointError("|Xu ^ Xv| vanishes at a requested point")
    return w / nrm[..., None]


def fundamental_forms(j):
    G_ = gauss_map(j)
    E = minkowski_dot(j.Xu, j.Xu)
    F = minkowski_dot(j.Xu, j.Xv)
    G = minkowski_dot(j.Xv, j.Xv)
    return FundamentalForms(E=E, F=F, G=G,
                            e=minkowski_dot(G_, j.Xuu),
                            f=minkowski_dot(G_, j.Xuv),
                            g=minkowski_dot(G_, j.Xvv),
                            W=E * G - F * F)


def _spacelike_floor(j):
    return SPACELIKE_TOL * (_euclid(j.Xu) * _euclid(j.Xv)) ** 2


def curvatures(j):
    ff = fundamental_forms(j)
    if np.any(ff.W <= _spacelike_floor(j)):
        raise NonSpacelikeError("W = EG - F^2 is not positive at a requested point")
    H = 0.5 * (ff.e * ff.G - 2.0 * ff.f * ff.F + ff.g * ff.E) / ff.W
    K = (ff.e * ff.g - ff.f * ff.f) / ff.W
    return CurvaturePair(H=H, K=K)


def weingarten_residual(cp, wc):
    return wc.a * cp.H + wc.b * cp.K - wc.c


def _brackets(j):
    X = [np.ascontiguousarray(p.reshape(-1, 3)) for p in (j.Xu, j.Xv, j.Xuu, j.Xuv, j.Xvv)]
    return kernels.bracket_terms(*X), j.shape


def bracket_P(j):
    t, shape = _brackets(j)
    E, F, G, b1, b2, b3 = t[:, 0], t[:, 1], t[:, 2], t[:, 4], t[:, 5], t[:, 6]
    return (G * b1 - 2.0 * F * b2 + E * b3).reshape(shape)


def bracket_Q(j):
    t, shape = _brackets(j)
    b1, b2, b3 = t[:, 4], t[:, 5], t[:, 6]
    return (b1 * b3 - b2 * b2).reshape(shape)


@dataclass(frozen=True)
class RationalizedTerms:
    """The residual a^2 P^2 W - 4 (c W^2 - b Q)^2 and its magnitude scale.

    Dividing the residual by W^4 leaves 4 ((aH)^2 - (c - bK)^2), so the scale
    is (2 W^2 (|a| k + |c| + |b| k^2))^2 with k^2 = H^2 + |K| read off P, Q
    and W.  It stays away from zero when one of the two terms vanishes
    identically (maximal or flat surfaces), where a scale built from the terms
    themselves would only measure round-off against round-off.
    """

    phi: np.ndarray
    scale: np.ndarray
    P: np.ndarray
    Q: np.ndarray
    W: np.ndarray


def curvature_scale(P, Q, W, wc):
    aW = np.abs(W)
    ok = aW > 0
    safe = np.where(ok, aW, 1.0)
    k2 = np.abs(P) ** 2 / (4.0 * safe ** 3) + np.abs(Q) / safe ** 2
    k = np.sqrt(k2)
    s = 2.0 * aW * aW * (abs(wc.a) * k + abs(wc.c) + abs(wc.b) * k2)
    return np.where(ok, s * s, 0.0)


def rationalized_terms(j, wc):
    t, shape = _brackets(j)
    E, F, G, W, b1, b2, b3 = (t[:, k] for k in range(7))
    P = G * b1 - 2.0 * F * b2 + E * b3
    Q = b1 * b3 - b2 * b2
    a, b, c = wc.a, wc.b, wc.c
    phi = a * a * P * P * W - 4.0 * (c * W * W - b * Q) ** 2
    scale = curvature_scale(P, Q, W, wc)
    return RationalizedTerms(phi=phi.reshape(shape), scale=scale.reshape(shape),
                             P=P.reshape(shape), Q=Q.reshape(shape), W=W.reshape(shape))


def rationalized_residual(j, wc):
    return rationalized_terms(j, wc).phi


@dataclass(frozen=True)
class GridEval:
    """Pointwise invariants on a parameter grid; NaN where not spacelike."""

    U: np.ndarray
    V: np.ndarray
    X: np.ndarray
    E: np.ndarray
    F: np.ndarray
    G: np.ndarray
    W: np.ndarray
    H: np.ndarray
    K: np.ndarray
    P: np.ndarray
    Q: np.ndarray
    spacelike: np.ndarray
    time_sign: np.ndarray = None   # sign of the x3 component of Xu ^ Xv


def evaluate_grid(surface, U, V):
    """Batch evaluation that reports non-spacelike nodes instead of raising."""
    j = surface.jet(U, V)
    shape = j.shape
    X = [np.ascontiguousarray(p.reshape(-1, 3)) for p in (j.Xu, j.Xv, j.Xuu, j.Xuv, j.Xvv)]
    t = kernels.form_terms(*X)
    E, F, G, e, f, g, W, b1, b2, b3, nrm = (t[:, k] for k in range(11))
    floor = SPACELIKE_TOL * (_euclid(X[0]) * _euclid(X[1])) ** 2
    ok = (W > floor) & np.isfinite(W)
    with np.errstate(divide="ignore", invalid="ignore"):
        H = np.where(ok, 0.5 * (e * G - 2.0 * f * F + g * E) / W, np.nan)
        K = np.where(ok, (e * g - f * f) / W, np.nan)
    P = G * b1 - 2.0 * F * b2 + E * b3
    Q = b1 * b3 - b2 * b2
    # Lorentz cross: third component is minus the Euclidean one
    n3 = -(X[0][:, 0] * X[1][:, 1] - X[0][:, 1] * X[1][:, 0])
    r = lambda a: a.reshape(shape)  # noqa: E731
    return GridEval(U=np.asarray(U), V=np.asarray(V), X=j.X, E=r(E), F=r(F), G=r(G), W=r(W),
                    H=r(H), K=r(K), P=r(P), Q=r(Q), spacelike=r(ok), time_sign=r(np.sign(n3)))


def spacelike_check(surface, nu, nv, domain=None):
    """(all nodes spacelike, minimum W) on an nu x nv grid."""
    if nu < 2 or nv < 2:
        raise ValueError("grid must be at least 2 x 2")
    U, V = surface.grid(nu, nv, domain)
    try:
        ev = evaluate_grid(surface, U, V)
    except (DegeneratePointError, ValueError):
        return False, float("nan")
    W = np.where(np.isfinite(ev.W), ev.W, -np.inf)
    return bool(np.all(ev.spacelike)), float(np.min(W))


def erode(mask):
    """Drop every node with a non-spacelike 4-neighbour; grid borders count as inside."""
    m = np.pad(mask, 1, constant_values=True)
    return (m[1:-1, 1:-1] & m[:-2, 1:-1] & m[2:, 1:-1] & m[1:-1, :-2] & m[1:-1, 2:])


def fold_crossings(ev, mask):
    """Adjacent usable node pairs whose normals have opposite time orientation.

    A spacelike normal field cannot flip continuously, so each such pair
    straddles a singular curve (W = 0) that the grid stepped over.
    """
    s = np.where(mask, ev.time_sign, 0.0)
    du = (s[1:, :] * s[:-1, :]) < 0
    dv = (s[:, 1:] * s[:, :-1]) < 0
    return int(du.sum() + dv.sum())


def spacelike_subgrid(surface, nu, nv, domain=None, shrink=True):
    """Grid evaluation plus the (optionally eroded) mask of usable spacelike nodes."""
    U, V = surface.grid(nu, nv, domain)
    ev = evaluate_grid(surface, U, V)
    mask = erode(ev.spacelike) if shrink else ev.spacelike
    return ev, mask
