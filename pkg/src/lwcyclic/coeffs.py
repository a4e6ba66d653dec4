"""Coefficients of the rationalized residual along each foliation circle.

Along a circle of the foliation the residual is an exact finite expansion in v:

* ``harmonic``   sum A_j cos(jv) + B_j sin(jv)
* ``hyperbolic`` sum A_j cosh(jv) + B_j sinh(jv)
* ``monomial``   sum A_j v^j

Harmonic spectra come from a DFT over one period.  A hyperbolic polynomial
evaluated at v = i*theta becomes sum A_j cos(j theta) + i B_j sin(j theta), so
the same DFT recovers it from complex samples.  Monomial spectra come from a
least-squares fit on Chebyshev nodes.
"""
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ConditioningError
from .surface import rationalized_terms

N_SAMPLES = 64
J_HARMONIC = 16
J_MONOMIAL = 12
J_MONOMIAL_MAX = 16
COND_LIMIT = 1e12
MODES = ("harmonic", "hyperbolic", "monomial")


@dataclass(frozen=True)
class CoefficientSpectrum:
    """A_0..A_J (and B_0..B_J, B_0 = 0, for the trig modes) at one u."""

    mode: str
    J: int
    A: np.ndarray
    B: np.ndarray
    u: float
    scale: float

    def normalized(self):
        s = self.scale if self.scale > 0 else 1.0
        A = np.abs(self.A) / s
        B = np.abs(self.B) / s if self.B is not None else np.zeros(0)
        return A, B

    def max_normalized(self, jmin=0):
        A, B = self.normalized()
        vals = np.concatenate([A[jmin:], B[jmin:]])
        return float(vals.max()) if vals.size else 0.0

    def coefficient(self, name, j):
        arr = self.A if name == "A" else self.B
        if arr is None or j > self.J:
            return 0.0
        return float(arr[j])

    def to_dict(self):
        out = {"mode": self.mode, "J": self.J, "u": self.u, "scale": self.scale,
               "A": [float(x) for x in self.A]}
        if self.B is not None:
            out["B"] = [float(x) for x in self.B]
        return out


def harmonic_nodes(N=N_SAMPLES):
    return 2.0 * np.pi * np.arange(N) / N


def chebyshev_nodes(n, interval=(-1.0, 1.0)):
    k = np.arange(n)
    t = np.cos(np.pi * (2 * k + 1) / (2 * n))[::-1]
    lo, hi = interval
    return 0.5 * (lo + hi) + 0.5 * (hi - lo) * t


def _check_finite(samples, nodes):
    bad = ~np.isfinite(samples)
    if np.any(bad):
        idx = np.argwhere(bad)[0]
        raise ValueError(f"non-finite residual sample at v = {nodes[idx[-1]]!r}")


def _trig_rows(samples, J, hyperbolic):
    """(m, N) samples -> A, B of shape (m, J+1)."""
    N = samples.shape[1]
    if J > N // 2 - 1:
        raise ValueError(f"J = {J} needs at least {2 * J + 2} samples, got {N}")
    if hyperbolic:
        A, _ = kernels.trig_project(np.ascontiguousarray(samples.real), J)
        _, B = kernels.trig_project(np.ascontiguousarray(samples.imag), J)
        return A, B
    return kernels.trig_project(np.ascontiguousarray(np.real(samples)), J)


def extract_harmonics(residual_at_u, J=J_HARMONIC, N=N_SAMPLES, hyperbolic=False,
                      scale=None, u=float("nan")):
    """Trig spectrum of ``residual_at_u`` (a vectorized map of v).

    With ``hyperbolic=True`` the map is sampled at v = i*theta and the result
    holds cosh/sinh coefficients.  ``scale`` defaults to the largest sample
    magnitude.
    """
    theta = harmonic_nodes(N)
    nodes = 1j * theta if hyperbolic else theta
    samples = np.asarray(residual_at_u(nodes))
    _check_finite(samples, nodes)
    A, B = _trig_rows(samples[None, :], J, hyperbolic)
    s = float(np.max(np.abs(samples))) if scale is None else float(scale)
    return CoefficientSpectrum("hyperbolic" if hyperbolic else "harmonic", J, A[0], B[0],
                               float(u), s)


def _monomial_fit_matrix(J, interval):
    if J > J_MONOMIAL_MAX:
        raise ValueError(f"J = {J} exceeds the monomial limit {J_MONOMIAL_MAX}")
    lo, hi = interval
    if not hi > lo:
        raise ValueError("empty v-interval")
    nodes = chebyshev_nodes(J + 5, interval)
    mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    t = (nodes - mid) / half
    V = np.vander(t, J + 1, increasing=True)
    cond = np.linalg.cond(np.vander(nodes, J + 1, increasing=True))
    if cond > COND_LIMIT:
        raise ConditioningError(f"monomial fit condition {cond:.3g} exceeds {COND_LIMIT:g}; "
                                "use a smaller J or a shorter v-interval")
    return nodes, V, mid, half


def _shift_scale(ct, mid, half):
    """Coefficients in t = (v - mid) / half -> coefficients in v."""
    J = len(ct) - 1
    out = np.zeros(J + 1, dtype=ct.dtype)
    for k in range(J + 1):
        # (v - mid)^k / half^k expanded binomially
        ck = ct[k] / half ** k
        for i in range(k + 1):
            out[i] += ck * _binom(k, i) * (-mid) ** (k - i)
    return out


def _binom(n, k):
    from math import comb
    return comb(n, k)


def _monomial_rows(samples, V, mid, half):
    coef_t, *_ = np.linalg.lstsq(V, samples.T, rcond=None)
    return np.stack([_shift_scale(coef_t[:, i], mid, half) for i in range(samples.shape[0])])


def extract_poly_coeffs(residual_at_u, J=J_MONOMIAL, interval=(-1.0, 1.0), scale=None,
                        u=float("nan")):
    """Monomial spectrum A_0..A_J of ``residual_at_u`` fitted on Chebyshev nodes."""
    nodes, V, mid, half = _monomial_fit_matrix(J, interval)
    samples = np.asarray(residual_at_u(nodes), dtype=float)
    _check_finite(samples, nodes)
    A = _monomial_rows(samples[None, :], V, mid, half)[0]
    s = float(np.max(np.abs(samples))) if scale is None else float(scale)
    return CoefficientSpectrum("monomial", J, A, None, float(u), s)


def default_J(mode):
    return J_MONOMIAL if mode == "monomial" else J_HARMONIC


def surface_v_interval(surface):
    iv = surface.info.get("coeff_interval")
    return tuple(iv) if iv is not None else (surface.domain[2], surface.domain[3])


def spectra_at(surface, wc, u_values, J=None, N=N_SAMPLES, interval=None):
    """Spectra of the rationalized residual of ``surface`` at each u."""
    mode = surface.mode
    if mode not in MODES:
        raise ValueError(f"unknown expansion mode {mode!r}")
    J = default_J(mode) if J is None else J
    u_values = np.atleast_1d(np.asarray(u_values, dtype=float))
    if mode == "monomial":
        nodes, V, mid, half = _monomial_fit_matrix(J, interval or surface_v_interval(surface))
    else:
        theta = harmonic_nodes(N)
        nodes = 1j * theta if mode == "hyperbolic" else theta
    U, Vn = np.meshgrid(u_values, nodes, indexing="ij")
    terms = rationalized_terms(surface.jet(U, Vn), wc)
    phi = terms.phi
    for row in phi:
        _check_finite(row, nodes)
    scales = np.max(np.abs(terms.scale), axis=1)
    if mode == "monomial":
        A = _monomial_rows(np.real(phi), V, mid, half)
        B = [None] * len(u_values)
    else:
        A, B = _trig_rows(phi, J, mode == "hyperbolic")
    return [CoefficientSpectrum(mode, J, A[i], B[i], float(u_values[i]), float(scales[i]))
            for i in range(len(u_values))]


@dataclass(frozen=True)
class ScanResult:
    spectra: list
    summary: float
    argmax_u: float

    def to_dict(self):
        return {"summary": self.summary, "argmax_u": self.argmax_u,
                "spectra": [s.to_dict() for s in self.spectra]}


def coefficient_scan(surface, wc, u_grid=None, J=None, nu=9, interval=None):
    """Spectra along ``u_grid`` plus the largest normalized coefficient."""
    if u_grid is None:
        u_grid = np.linspace(surface.domain[0], surface.domain[1], nu)
    spectra = spectra_at(surface, wc, u_grid, J=J, interval=interval)
    vals = [s.max_normalized() for s in spectra]
    k = int(np.argmax(vals))
    return ScanResult(spectra, float(vals[k]), spectra[k].u)
