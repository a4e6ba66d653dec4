"""Surface and curve families foliated by circles.

Every constructor returns a :class:`~lwcyclic.surface.Surface` whose ``build``
works on jets, so curvature data comes out exact to second order.  Profiles
(the functions f, g, r of u, and the Frenet coefficient functions) are plain
callables that accept floats or jets; :class:`Poly` is the usual choice.
"""
from dataclasses import dataclass, field

import numpy as np

from . import jets as J
from .errors import DomainError, IntegrationError
from .jets import Jet2
from .lorentz import CausalClass, det3, minkowski_dot
from .ode import DEFAULT_ATOL, DEFAULT_RTOL, IvpProblem, SplitSolution, integrate_ivp
from .surface import Surface

TWO_PI = 2.0 * np.pi
GRAM_DRIFT_LIMIT = 1e-6


class Poly:
    """Polynomial in u with coefficients in increasing degree."""

    def __init__(self, coeffs):
        coeffs = [float(c) for c in np.atleast_1d(coeffs)]
        self.coeffs = tuple(coeffs) if coeffs else (0.0,)

    def __call__(self, u):
        acc = u * 0.0 + self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * u + c
        return acc

    def deriv(self):
        if len(self.coeffs) == 1:
            return Poly([0.0])
        return Poly([k * c for k, c in enumerate(self.coeffs) if k > 0])

    def integ(self, k=0.0):
        return Poly([k] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


def as_profile(p):
    if callable(p):
        return p
    return Poly(p)


def bumped(r, bump):
    """r(u) + bump * sin(u); the standard perturbation of a radius profile."""
    if not bump:
        return r
    return lambda u: r(u) + bump * J.sin(u)


def _check_radius(rj, what="r"):
    val = np.real(J.value_of(rj))
    if np.any(val <= 0):
        raise DomainError(f"{what}(u) must stay positive on the evaluated points")


# circles ------------------------------------------------------------------

def circle(kind, r):
    """Unit-speed circle of radius ``r`` in a plane of causal type ``kind``.

    Returns ``s -> VecJet2`` with the curve parameter in the u slot, so
    ``.Xu`` and ``.Xuu`` are the first and second derivatives.
    """
    if r <= 0:
        raise ValueError("circle radius must be positive")
    kind = CausalClass(kind)

    def curve(s):
        sj = Jet2.var_u(np.asarray(s, dtype=float))
        if kind is CausalClass.SPACELIKE:
            comps = (r * J.cos(sj / r), r * J.sin(sj / r), 0.0 * sj)
        elif kind is CausalClass.TIMELIKE:
            comps = (0.0 * sj, r * J.sinh(sj / r), r * J.cosh(sj / r))
        else:
            comps = (sj, 0.5 * r * sj * sj, 0.5 * r * sj * sj)
        return J.VecJet2.from_components(*comps)

    return curve


# parallel planes -------------------------------------------------------------

_MODES = {
    CausalClass.SPACELIKE: "harmonic",
    CausalClass.TIMELIKE: "hyperbolic",
    CausalClass.LIGHTLIKE: "monomial",
}


def _parallel_build(kind, f, g, r):
    def build(uj, vj):
        fj, gj, rj = f(uj), g(uj), r(uj)
        _check_radius(rj)
        if kind is CausalClass.SPACELIKE:
            return fj + rj * J.cos(vj), gj + rj * J.sin(vj), uj + 0.0 * vj
        if kind is CausalClass.TIMELIKE:
            return uj + 0.0 * vj, fj + rj * J.sinh(vj), gj + rj * J.cosh(vj)
        half = 0.5 * rj * vj * vj
        return fj + vj, gj + uj + half, gj - uj + half
    return build


# One sheet between the fold curves (W = 0) of the default Frenet data; across
# a fold the (u, v) normal changes time orientation and H changes sign.
FRENET_V_RANGES = {
    CausalClass.SPACELIKE: (-1.7, 1.7),
    CausalClass.LIGHTLIKE: (0.45, 1.0),
}


def default_v_range(kind):
    kind = CausalClass(kind)
    if kind is CausalClass.SPACELIKE:
        return (0.0, TWO_PI)
    return (-1.0, 1.0)


def cyclic_parallel(kind, f, g, r, domain=(0.0, 1.0), bump=0.0, name=None):
    """Circles in the parallel planes x3 = u, x1 = u, or x2 - x3 = 2u.

    ``domain`` is either (umin, umax) or (umin, umax, vmin, vmax).
    """
    kind = CausalClass(kind)
    f, g, r = as_profile(f), as_profile(g), bumped(as_profile(r), bump)
    if len(domain) == 2:
        domain = tuple(domain) + default_v_range(kind)
    return Surface(name=name or f"cyclic-{kind.value}", build=_parallel_build(kind, f, g, r),
                   domain=tuple(float(x) for x in domain), mode=_MODES[kind],
                   info={"kind": kind.value, "f": f, "g": g, "r": r})


def pseudohyperbolic(r, x0=(0.0, 0.0, 0.0), domain=(0.5, 2.0, 0.0, TWO_PI), bump=0.0):
    """Upper sheet of <x - x0, x - x0> = -r^2, circles at constant x3.

    X = x0 + (R(u) cos v, R(u) sin v, r cosh u) with R = r sinh u (plus the
    optional ``bump * sin u``).
    """
    if r <= 0:
        raise ValueError("pseudohyperbolic radius must be positive")
    umin, umax = domain[0], domain[1]
    if umin <= 0.0 <= umax:
        raise DomainError("domain contains the parametrization pole u = 0")
    x0 = np.asarray(x0, dtype=float)
    radius = bumped(lambda u: r * J.sinh(u), bump)

    def build(uj, vj):
        R = radius(uj)
        return x0[0] + R * J.cos(vj), x0[1] + R * J.sin(vj), x0[2] + r * J.cosh(uj) + 0.0 * vj

    return Surface(name="pseudohyperbolic", build=build, domain=tuple(map(float, domain)),
                   mode="harmonic", info={"r": r, "x0": x0, "bump": bump})


# maximal and flat families ---------------------------------------------------

class _StateProfile:
    """Profile read off an ODE solution: value, slope and curvature from the state."""

    def __init__(self, solution, parts):
        self.solution = solution
        self.parts = parts

    def __call__(self, u):
        if isinstance(u, Jet2):
            y = self.solution(u.val.ravel()).T.reshape((-1,) + u.val.shape)
            f0, f1, f2 = self.parts(y)
            return u.chain(f0, f1, f2)
        y = self.solution(np.asarray(u, dtype=float).ravel()).T.reshape(
            (-1,) + np.shape(u))
        return self.parts(y)[0]


def riemann_rhs(eps, lam, mu):
    k = eps * lam * lam + mu * mu

    def rhs(t, y):
        r, rp = y[0], y[1]
        r2 = r * r
        return np.array([rp, (k * r2 * r2 + rp * rp - 1.0) / r, lam * r2, mu * r2])

    return rhs


def _solve_two_sided(rhs, y0, umin, umax, rtol, atol, guard):
    sols = []
    for end in (umin, umax):
        if end == 0.0:
            sols.append(None)
            continue
        sol = integrate_ivp(IvpProblem(rhs, 0.0, y0, end, rtol=rtol, atol=atol), guard=guard)
        if sol.status != "success":
            raise IntegrationError(f"integration toward u = {end} stopped: {sol.message}",
                                   reached=sol.span)
        sols.append(sol)
    back, fwd = sols
    if back is None:
        return fwd
    if fwd is None:
        return back
    return SplitSolution(back, fwd)


def riemann_maximal(eps=1, lam=0.2, mu=0.3, r0=1.0, r0p=0.0, domain=(-0.5, 0.5),
                    bump=0.0, rtol=DEFAULT_RTOL, atol=DEFAULT_ATOL):
    """Maximal circle-foliated surface over parallel planes (eps = +1 or -1).

    Solves r r'' = (eps lam^2 + mu^2) r^4 + r'^2 - 1 with f' = lam r^2,
    g' = mu r^2 from r(0) = r0, r'(0) = r0p, f(0) = g(0) = 0, then builds the
    spacelike-plane (eps = 1) or timelike-plane (eps = -1) surface.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if r0 <= 0:
        raise ValueError("r0 must be positive")
    rhs = riemann_rhs(eps, lam, mu)
    umin, umax = domain[0], domain[1]
    lo, hi = min(umin, 0.0), max(umax, 0.0)
    sol = _solve_two_sided(rhs, [r0, r0p, 0.0, 0.0], lo, hi, rtol, atol,
                           guard=lambda y: y[0])
    k = eps * lam * lam + mu * mu

    def r_parts(y):
        r, rp = y[0], y[1]
        return r, rp, (k * r ** 4 + rp * rp - 1.0) / r

    r = _StateProfile(sol, r_parts)
    f = _StateProfile(sol, lambda y: (y[2], lam * y[0] ** 2, 2.0 * lam * y[0] * y[1]))
    g = _StateProfile(sol, lambda y: (y[3], mu * y[0] ** 2, 2.0 * mu * y[0] * y[1]))
    kind = CausalClass.SPACELIKE if eps == 1 else CausalClass.TIMELIKE
    surf = cyclic_parallel(kind, f, g, r, domain=domain, bump=bump, name="riemann-maximal")
    info = dict(surf.info, solution=sol, eps=eps, lam=lam, mu=mu, r0=r0, r0p=r0p, bump=bump)
    return Surface(name=surf.name, build=surf.build, domain=surf.domain, mode=surf.mode,
                   info=info)


POLE_MARGIN = 1e-3


def lightlike_maximal(lam=1.0, mu=0.0, domain=(0.1, np.pi / 4 - 0.1, -2.0, 2.0), bump=0.0):
    """Maximal surface foliated by parabolic circles in parallel lightlike planes.

    r = tan 2u, f = lam (u + cot(2u) / 2) and
    g = (4 (4 mu - 3 lam^2) u - 4 lam^2 cot 2u - (lam^2 - 4 mu) sin 4u) / 32,
    which solve the H = 0 conditions r'' = 4 r r', (r^2 f')' = 0,
    g'' + 4 r g' + r f'^2 = 0 for every (lam, mu).
    """
    umin, umax = domain[0], domain[1]
    if umin < POLE_MARGIN or umax > np.pi / 4 - POLE_MARGIN:
        raise DomainError("u-domain must stay inside (0, pi/4) with margin 1e-3")
    if len(domain) == 2:
        domain = tuple(domain) + (-2.0, 2.0)

    def r(u):
        return J.tan(2.0 * u)

    def f(u):
        return lam * (u + 0.5 * J.cot(2.0 * u))

    def g(u):
        return (4.0 * (4.0 * mu - 3.0 * lam * lam) * u - 4.0 * lam * lam * J.cot(2.0 * u)
                - (lam * lam - 4.0 * mu) * J.sin(4.0 * u)) / 32.0

    surf = cyclic_parallel(CausalClass.LIGHTLIKE, f, g, r, domain=domain, bump=bump,
                           name="lightlike-maximal")
    return Surface(name=surf.name, build=surf.build, domain=surf.domain, mode=surf.mode,
                   info=dict(surf.info, lam=lam, mu=mu))


# Default flat instances.  Over spacelike planes W = r^2 ((f' cos v + g' sin v + r')^2 - 1),
# so r' > 1 + |(f', g')| keeps every node spacelike.
FLAT_DEFAULTS = {
    CausalClass.SPACELIKE: {"f": (0.0, 0.2), "g": (0.0, 0.1), "r": (1.0, 1.5),
                            "domain": (0.0, 1.0, 0.0, TWO_PI)},
    CausalClass.TIMELIKE: {"f": (0.0, 0.1), "g": (0.0, 0.2), "r": (1.0, 0.05),
                           "domain": (0.0, 1.0, -1.5, 1.5)},
    CausalClass.LIGHTLIKE: {"f": (0.0, 0.1), "g": (0.0, 0.5), "lam": 1.0, "mu": 2.0,
                            "domain": (0.0, 1.0, -0.3, 0.3)},
}


def flat_family(kind, f=None, g=None, r=None, lam=None, mu=None, domain=None, bump=0.0):
    """Flat (K = 0) circle-foliated surfaces over parallel planes.

    Spacelike and timelike planes take affine f, g, r (coefficient pairs);
    lightlike planes take affine f, g and r = lam / (u + mu).  Omitted
    arguments come from ``FLAT_DEFAULTS``.
    """
    kind = CausalClass(kind)
    dflt = FLAT_DEFAULTS[kind]
    f = dflt["f"] if f is None else f
    g = dflt["g"] if g is None else g
    for name, p in (("f", f), ("g", g), ("r", r)):
        if p is not None and len(np.atleast_1d(p)) > 2:
            raise ValueError(f"{name} must be affine for the flat family")
    domain = dflt["domain"] if domain is None else tuple(domain)
    if len(domain) == 2:
        domain = tuple(domain) + dflt["domain"][2:]
    if kind is CausalClass.LIGHTLIKE:
        lam = dflt["lam"] if lam is None else lam
        mu = dflt["mu"] if mu is None else mu
        umin, umax = domain[0], domain[1]
        if min(abs(umin + mu), abs(umax + mu)) < POLE_MARGIN or (umin + mu) * (umax + mu) <= 0:
            raise DomainError("u + mu must stay bounded away from zero")
        rp = lambda u: lam / (u + mu)  # noqa: E731
    else:
        rp = Poly(dflt["r"] if r is None else r)
    surf = cyclic_parallel(kind, Poly(f), Poly(g), rp, domain=domain, bump=bump, name="flat")
    return Surface(name="flat", build=surf.build, domain=surf.domain, mode=surf.mode,
                   info=dict(surf.info, family="flat"))


# Frenet-foliated ----------------------------------------------------------------

@dataclass
class FrenetState:
    """Moving frame (t, n, b) of the curve of plane normals and the circle centre c."""

    t: np.ndarray
    n: np.ndarray
    b: np.ndarray
    c: np.ndarray = field(default_factory=lambda: np.zeros(3))

    @classmethod
    def standard(cls, kind, c=(0.0, 0.0, 0.0)):
        kind = CausalClass(kind)
        if kind is CausalClass.SPACELIKE:
            return cls(np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0]),
                       np.array([0.0, 1.0, 0.0]), np.asarray(c, dtype=float))
        s = np.sqrt(0.5)
        return cls(np.array([0.0, s, s]), np.array([1.0, 0.0, 0.0]),
                   np.array([0.0, s, -s]), np.asarray(c, dtype=float))

    def vector(self):
        return np.concatenate([self.t, self.n, self.b, self.c]).astype(float)

    def gram_error(self, kind):
        return frame_gram_error(CausalClass(kind), self.t, self.n, self.b)

    def check(self, kind, tol=1e-9):
        err = self.gram_error(kind)
        if err > tol:
            raise ValueError(f"initial frame violates its Gram relations by {err:.3g}")


def _target_gram(kind):
    if kind is CausalClass.SPACELIKE:
        return np.diag([-1.0, 1.0, 1.0]), 1.0
    return np.array([[0.0, 0.0, 1.0], [0.0, 1.0, 0.0], [1.0, 0.0, 0.0]]), 1.0


def frame_gram_error(kind, t, n, b):
    """Largest deviation of the frame's Gram matrix (and determinant) from exact."""
    target, det_target = _target_gram(kind)
    vecs = [np.asarray(t), np.asarray(n), np.asarray(b)]
    err = 0.0
    for i in range(3):
        for j in range(3):
            err = max(err, float(np.max(np.abs(minkowski_dot(vecs[i], vecs[j]) - target[i, j]))))
    d = det3(*vecs)
    if kind is CausalClass.SPACELIKE:
        err = max(err, float(np.max(np.abs(np.abs(d) - 1.0))))
    else:
        err = max(err, float(np.max(np.abs(d - det_target))))
    return err


def _frenet_derivs(kind, kap, sig, t, n, b):
    if kind is CausalClass.SPACELIKE:
        return kap * n, kap * t + sig * b, -sig * n
    return kap * n, sig * t - kap * b, -sig * n


def _reorthonormalize(kind, t, n, b):
    if kind is CausalClass.SPACELIKE:
        t = t / np.sqrt(-minkowski_dot(t, t))[..., None]
        n = n + minkowski_dot(n, t)[..., None] * t
        n = n / np.sqrt(minkowski_dot(n, n))[..., None]
        b = b + minkowski_dot(b, t)[..., None] * t - minkowski_dot(b, n)[..., None] * n
        b = b / np.sqrt(minkowski_dot(b, b))[..., None]
        return t, n, b
    n = n - minkowski_dot(n, b)[..., None] * t - minkowski_dot(n, t)[..., None] * b
    n = n / np.sqrt(minkowski_dot(n, n))[..., None]
    tb = minkowski_dot(t, b)[..., None]
    b = b / tb
    b = b - 0.5 * minkowski_dot(b, b)[..., None] * t
    return t, n, b


def frenet_cyclic(kind, kappa, sigma, alpha, beta, gamma, r, init=None, domain=None,
                  bump=0.0, reorthonormalize=False, rtol=DEFAULT_RTOL, atol=DEFAULT_ATOL,
                  name=None):
    """Circles in non-parallel planes carried by a Frenet frame.

    The frame follows t' = kappa n with n' = kappa t + sigma b, b' = -sigma n
    (spacelike planes, t timelike) or n' = sigma t - kappa b, b' = -sigma n
    (lightlike planes, t and b null with <t, b> = 1), and the centre follows
    c' = alpha t + beta n + gamma b.  The surface is
    c + r (cos v n + sin v b) for spacelike planes and c + v n + r v^2 t for
    lightlike planes.  Integration starts at the lower end of the u-domain.

    Frame drift is measured, not corrected, unless ``reorthonormalize`` is set.
    """
    kind = CausalClass(kind)
    if kind is CausalClass.TIMELIKE:
        raise ValueError("timelike foliation planes are not supported")
    kappa, sigma, alpha, beta, gamma = map(as_profile, (kappa, sigma, alpha, beta, gamma))
    r = bumped(as_profile(r), bump)
    init = init or FrenetState.standard(kind)
    init.check(kind)
    if domain is None:
        domain = (0.0, 1.0) + default_v_range(kind)
    umin, umax = float(domain[0]), float(domain[1])
    probe = np.asarray(kappa(np.linspace(umin, umax, 257)), dtype=float)
    if np.any(probe == 0) or np.any(np.sign(probe) != np.sign(probe[0])):
        raise ValueError("kappa must not vanish on the domain")

    def rhs(u, y):
        t, n, b = y[0:3], y[3:6], y[6:9]
        kap, sig = kappa(u), sigma(u)
        dt, dn, db = _frenet_derivs(kind, kap, sig, t, n, b)
        dc = alpha(u) * t + beta(u) * n + gamma(u) * b
        return np.concatenate([dt, dn, db, dc])

    sol = integrate_ivp(IvpProblem(rhs, umin, init.vector(), umax, rtol=rtol, atol=atol))
    if sol.status != "success":
        raise IntegrationError(f"frame integration stopped: {sol.message}", reached=sol.span)
    mesh = sol.ys
    drift = frame_gram_error(kind, mesh[:, 0:3], mesh[:, 3:6], mesh[:, 6:9])
    if drift > GRAM_DRIFT_LIMIT and not reorthonormalize:
        raise IntegrationError(f"frame Gram drift {drift:.3g} exceeds {GRAM_DRIFT_LIMIT:g}",
                               reached=sol.span)

    def frame_at(uval):
        y = sol(uval.ravel())
        t, n, b, c = (y[:, 3 * i:3 * i + 3].reshape(uval.shape + (3,)) for i in range(4))
        if reorthonormalize:
            t, n, b = _reorthonormalize(kind, t, n, b)
        return t, n, b, c

    corrected = drift
    if reorthonormalize:
        corrected = frame_gram_error(kind, *frame_at(sol.ts)[:3])

    def build(uj, vj):
        uval = np.real(uj.val)
        t, n, b, c = frame_at(uval)
        kj, sj = kappa(uj), sigma(uj)
        aj, bj, gj = alpha(uj), beta(uj), gamma(uj)
        rj = r(uj)
        _check_radius(rj)
        k0, k1 = kj.val[..., None], kj.du[..., None]
        s0, s1 = sj.val[..., None], sj.du[..., None]
        dt, dn, db = _frenet_derivs(kind, k0, s0, t, n, b)
        # second derivatives from differentiating the frame equations once more
        ddt, ddn, ddb = (k1 * n + k0 * dn,
                         *((k1 * t + k0 * dt + s1 * b + s0 * db, -s1 * n - s0 * dn)
                           if kind is CausalClass.SPACELIKE else
                           (s1 * t + s0 * dt - k1 * b - k0 * db, -s1 * n - s0 * dn)))
        a0, b0, g0 = (x.val[..., None] for x in (aj, bj, gj))
        a1, b1, g1 = (x.du[..., None] for x in (aj, bj, gj))
        dc = a0 * t + b0 * n + g0 * b
        ddc = a1 * t + a0 * dt + b1 * n + b0 * dn + g1 * b + g0 * db

        def vjet(val, d1, d2, i):
            return Jet2.from_u(val[..., i], d1[..., i], d2[..., i])

        out = []
        for i in range(3):
            cj, tj, nj, bj_ = (vjet(c, dc, ddc, i), vjet(t, dt, ddt, i),
                               vjet(n, dn, ddn, i), vjet(b, db, ddb, i))
            if kind is CausalClass.SPACELIKE:
                out.append(cj + rj * (J.cos(vj) * nj + J.sin(vj) * bj_))
            else:
                out.append(cj + vj * nj + rj * vj * vj * tj)
        return tuple(out)

    return Surface(name=name or f"frenet-{kind.value}", build=build,
                   domain=(umin, umax, float(domain[2]), float(domain[3])),
                   mode="harmonic" if kind is CausalClass.SPACELIKE else "monomial",
                   info={"kind": kind.value, "solution": sol, "gram_drift": drift,
                         "gram_drift_corrected": corrected, "frame_at": frame_at})


def frenet_pseudohyperbolic(kind, a=1.0, kappa=(1.0,), r=(0.5, 0.2), sigma=(0.0,),
                            beta=(0.3,), init=None, domain=None, bump=0.0,
                            reorthonormalize=False, rtol=DEFAULT_RTOL, atol=DEFAULT_ATOL):
    """Frenet-foliated surface whose data make it part of a pseudohyperbolic surface.

    Spacelike planes: gamma = 0, beta = kappa sqrt(rho^2 + r^2),
    alpha = r r' / sqrt(rho^2 + r^2) with rho^2 = 1 / (4 a^2); the centre
    starts at c0 + sqrt(rho^2 + r^2) t.  ``sigma`` is free.

    Lightlike planes: sigma = (4 a^2 r beta - r^2 kappa) / (2 a^2),
    gamma = r' / (2 r^2), alpha = r' / (4 a^2); the centre starts at
    c0 + r t / (4 a^2) - b / (2 r).  ``beta`` is free.

    In both cases <X - c0, X - c0> = -1 / (4 a^2) identically, with c0 the
    origin.  ``info["center"]`` and ``info["expected"]`` record both.
    """
    kind = CausalClass(kind)
    if a == 0:
        raise ValueError("a must be nonzero")
    kappa, sigma, beta = map(as_profile, (kappa, sigma, beta))
    r = as_profile(r)
    if not hasattr(r, "deriv"):
        raise TypeError("r must be a Poly (its derivative enters the frame data)")
    rp = r.deriv()
    a2 = a * a
    rho2 = 1.0 / (4.0 * a2)
    if domain is None:
        domain = (0.0, 1.0) + FRENET_V_RANGES.get(kind, (-1.0, 1.0))
    u0 = float(domain[0])
    base = init or FrenetState.standard(kind)
    c0 = np.zeros(3)
    r0 = float(r(u0))

    if kind is CausalClass.SPACELIKE:
        gamma = Poly([0.0])
        beta = lambda u: kappa(u) * J.sqrt(rho2 + r(u) ** 2)  # noqa: E731
        alpha = lambda u: r(u) * rp(u) / J.sqrt(rho2 + r(u) ** 2)  # noqa: E731
        start = c0 + np.sqrt(rho2 + r0 * r0) * base.t
    elif kind is CausalClass.LIGHTLIKE:
        sigma = lambda u: (4.0 * a2 * r(u) * beta(u) - r(u) ** 2 * kappa(u)) / (2.0 * a2)  # noqa: E731
        gamma = lambda u: rp(u) / (2.0 * r(u) ** 2)  # noqa: E731
        alpha = lambda u: rp(u) / (4.0 * a2)  # noqa: E731
        start = c0 + r0 / (4.0 * a2) * base.t - base.b / (2.0 * r0)
    else:
        raise ValueError("timelike foliation planes are not supported")

    init = FrenetState(base.t, base.n, base.b, start)
    surf = frenet_cyclic(kind, kappa, sigma, alpha, beta, gamma, r, init=init, domain=domain,
                         bump=bump, reorthonormalize=reorthonormalize, rtol=rtol, atol=atol,
                         name=f"frenet-{kind.value}")
    # residual is polynomial in v on all of R; fit it on a fixed window
    info = dict(surf.info, center=c0, expected=-rho2, a=a, coeff_interval=(-1.0, 1.0))
    return Surface(name=surf.name, build=surf.build, domain=surf.domain, mode=surf.mode,
                   info=info)


# specs ---------------------------------------------------------------------------

FAMILIES = (
    "cyclic-spacelike", "cyclic-timelike", "cyclic-lightlike", "pseudohyperbolic",
    "riemann-maximal", "lightlike-maximal", "flat", "frenet-spacelike", "frenet-lightlike",
)


@dataclass(frozen=True)
class SurfaceSpec:
    """A family name plus its parameters, as read from a config file or CLI."""

    family: str
    params: dict = field(default_factory=dict)
    domain: tuple = None
    bump: float = 0.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown surface family {self.family!r}; choose from {FAMILIES}")
        for key in ("r", "r0"):
            val = self.params.get(key)
            if isinstance(val, (int, float)) and val <= 0:
                raise ValueError(f"{key} must be positive")

    def to_dict(self):
        out = {"family": self.family, "params": _plain(self.params), "bump": self.bump}
        if self.domain is not None:
            out["domain"] = list(self.domain)
        return out


def _plain(obj):
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in sorted(obj.items())}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


DEFAULT_DOMAINS = {
    "cyclic-spacelike": (0.0, 1.0, 0.0, TWO_PI),
    "cyclic-timelike": (0.0, 1.0, -1.0, 1.0),
    "cyclic-lightlike": (0.0, 1.0, -1.0, 1.0),
    "pseudohyperbolic": (0.5, 2.0, 0.0, TWO_PI),
    "riemann-maximal": (-0.5, 0.5, 0.0, TWO_PI),
    "lightlike-maximal": (0.1, np.pi / 4 - 0.1, -2.0, 2.0),
    "frenet-spacelike": (0.0, 1.0) + FRENET_V_RANGES[CausalClass.SPACELIKE],
    "frenet-lightlike": (0.0, 1.0) + FRENET_V_RANGES[CausalClass.LIGHTLIKE],
}


def default_domain(family, params=None):
    """Parameter rectangle used when a spec gives none."""
    params = params or {}
    if family == "riemann-maximal" and int(params.get("eps", 1)) == -1:
        return (-0.5, 0.5, -1.0, 1.0)
    if family == "flat":
        return FLAT_DEFAULTS[CausalClass(params.get("kind", "spacelike"))]["domain"]
    return DEFAULT_DOMAINS[family]


def build_surface(spec):
    """Instantiate a :class:`SurfaceSpec`."""
    p = dict(spec.params)
    fam = spec.family
    dom = tuple(spec.domain) if spec.domain is not None else default_domain(fam, p)
    bump = spec.bump
    if fam.startswith("cyclic-"):
        kind = CausalClass(fam.split("-", 1)[1])
        return cyclic_parallel(kind, p.get("f", [0.0]), p.get("g", [0.0]), p.get("r", [1.0]),
                               domain=dom, bump=bump)
    if fam == "pseudohyperbolic":
        return pseudohyperbolic(_scalar(p.get("r", 1.0)), p.get("x0", (0.0, 0.0, 0.0)),
                                domain=dom, bump=bump)
    if fam == "riemann-maximal":
        return riemann_maximal(int(p.get("eps", 1)), p.get("lam", 0.2), p.get("mu", 0.3),
                               p.get("r0", 1.0), p.get("r0p", 0.0), domain=dom, bump=bump)
    if fam == "lightlike-maximal":
        return lightlike_maximal(p.get("lam", 1.0), p.get("mu", 0.0), domain=dom, bump=bump)
    if fam == "flat":
        kind = CausalClass(p.get("kind", "spacelike"))
        kw = {k: p[k] for k in ("f", "g", "r", "lam", "mu") if k in p}
        return flat_family(kind, domain=dom, bump=bump, **kw)
    kind = CausalClass(fam.split("-", 1)[1])
    kw = {k: p[k] for k in ("kappa", "r", "sigma", "beta") if k in p}
    return frenet_pseudohyperbolic(kind, a=p.get("a", 1.0), domain=dom, bump=bump, **kw)


def _scalar(x):
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    if arr.size != 1:
        raise ValueError("expected a single radius value")
    return float(arr[0])
