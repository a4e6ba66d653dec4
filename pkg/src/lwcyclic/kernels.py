"""Hot per-point kernels, each in a numba loop form and a numpy form.

``form_terms`` and ``bracket_terms`` take the tangent and second-derivative
vectors of a surface flattened to shape (n, 3).  ``trig_project`` turns rows
of uniform samples over one period into cosine/sine coefficients.

``form_terms`` and ``bracket_terms`` dispatch to the loop form when numba is
active and to the numpy form otherwise; both forms stay importable for
comparison.
"""
import numpy as np

from ._accel import USE_NUMBA, njit

# columns of form_terms
FORM_COLUMNS = ("E", "F", "G", "e", "f", "g", "W", "b1", "b2", "b3", "normal_norm")
# columns of bracket_terms
BRACKET_COLUMNS = ("E", "F", "G", "W", "b1", "b2", "b3")


def _mdot(a, b):
    return a[:, 0] * b[:, 0] + a[:, 1] * b[:, 1] - a[:, 2] * b[:, 2]


def _det(a, b, c):
    return (a[:, 0] * (b[:, 1] * c[:, 2] - b[:, 2] * c[:, 1])
            - a[:, 1] * (b[:, 0] * c[:, 2] - b[:, 2] * c[:, 0])
            + a[:, 2] * (b[:, 0] * c[:, 1] - b[:, 1] * c[:, 0]))


def bracket_terms_numpy(Xu, Xv, Xuu, Xuv, Xvv):
    out = np.empty((Xu.shape[0], 7), dtype=np.result_type(Xu, Xv, Xuu, Xuv, Xvv))
    E = _mdot(Xu, Xu)
    F = _mdot(Xu, Xv)
    G = _mdot(Xv, Xv)
    out[:, 0], out[:, 1], out[:, 2] = E, F, G
    out[:, 3] = E * G - F * F
    out[:, 4] = _det(Xu, Xv, Xuu)
    out[:, 5] = _det(Xu, Xv, Xuv)
    out[:, 6] = _det(Xu, Xv, Xvv)
    return out


def form_terms_numpy(Xu, Xv, Xuu, Xuv, Xvv):
    n = Xu.shape[0]
    out = np.empty((n, 11))
    out[:, [0, 1, 2, 6, 7, 8, 9]] = bracket_terms_numpy(Xu, Xv, Xuu, Xuv, Xvv)
    w = np.empty_like(Xu)
    w[:, 0] = Xu[:, 1] * Xv[:, 2] - Xu[:, 2] * Xv[:, 1]
    w[:, 1] = Xu[:, 2] * Xv[:, 0] - Xu[:, 0] * Xv[:, 2]
    w[:, 2] = -(Xu[:, 0] * Xv[:, 1] - Xu[:, 1] * Xv[:, 0])
    nrm = np.sqrt(np.abs(_mdot(w, w)))
    with np.errstate(divide="ignore", invalid="ignore"):
        unit = w / nrm[:, None]
    out[:, 3] = _mdot(unit, Xuu)
    out[:, 4] = _mdot(unit, Xuv)
    out[:, 5] = _mdot(unit, Xvv)
    out[:, 10] = nrm
    return out


@njit
def bracket_terms_loop(Xu, Xv, Xuu, Xuv, Xvv):
    n = Xu.shape[0]
    out = np.empty((n, 7), dtype=Xu.dtype)
    for i in range(n):
        a0, a1, a2 = Xu[i, 0], Xu[i, 1], Xu[i, 2]
        b0, b1, b2 = Xv[i, 0], Xv[i, 1], Xv[i, 2]
        E = a0 * a0 + a1 * a1 - a2 * a2
        F = a0 * b0 + a1 * b1 - a2 * b2
        G = b0 * b0 + b1 * b1 - b2 * b2
        # cofactors of the first two rows; det(Xu, Xv, z) = m0 z0 + m1 z1 + m2 z2
        m0 = a1 * b2 - a2 * b1
        m1 = a2 * b0 - a0 * b2
        m2 = a0 * b1 - a1 * b0
        out[i, 0] = E
        out[i, 1] = F
        out[i, 2] = G
        out[i, 3] = E * G - F * F
        out[i, 4] = m0 * Xuu[i, 0] + m1 * Xuu[i, 1] + m2 * Xuu[i, 2]
        out[i, 5] = m0 * Xuv[i, 0] + m1 * Xuv[i, 1] + m2 * Xuv[i, 2]
        out[i, 6] = m0 * Xvv[i, 0] + m1 * Xvv[i, 1] + m2 * Xvv[i, 2]
    return out


@njit
def form_terms_loop(Xu, Xv, Xuu, Xuv, Xvv):
    n = Xu.shape[0]
    out = np.empty((n, 11))
    br = bracket_terms_loop(Xu, Xv, Xuu, Xuv, Xvv)
    for i in range(n):
        out[i, 0] = br[i, 0]
        out[i, 1] = br[i, 1]
        out[i, 2] = br[i, 2]
        out[i, 6] = br[i, 3]
        out[i, 7] = br[i, 4]
        out[i, 8] = br[i, 5]
        out[i, 9] = br[i, 6]
        w0 = Xu[i, 1] * Xv[i, 2] - Xu[i, 2] * Xv[i, 1]
        w1 = Xu[i, 2] * Xv[i, 0] - Xu[i, 0] * Xv[i, 2]
        w2 = -(Xu[i, 0] * Xv[i, 1] - Xu[i, 1] * Xv[i, 0])
        nrm = np.sqrt(abs(w0 * w0 + w1 * w1 - w2 * w2))
        out[i, 10] = nrm
        if nrm > 0.0:
            g0, g1, g2 = w0 / nrm, w1 / nrm, w2 / nrm
            out[i, 3] = g0 * Xuu[i, 0] + g1 * Xuu[i, 1] - g2 * Xuu[i, 2]
            out[i, 4] = g0 * Xuv[i, 0] + g1 * Xuv[i, 1] - g2 * Xuv[i, 2]
            out[i, 5] = g0 * Xvv[i, 0] + g1 * Xvv[i, 1] - g2 * Xvv[i, 2]
        else:
            out[i, 3] = np.nan
            out[i, 4] = np.nan
            out[i, 5] = np.nan
    return out


def trig_project_numpy(samples, J):
    """Rows of N uniform samples on [0, 2pi) -> (A, B), each (m, J+1); B[:, 0] = 0."""
    N = samples.shape[1]
    spec = np.fft.rfft(samples, axis=1) / N
    A = 2.0 * spec[:, :J + 1].real
    B = -2.0 * spec[:, :J + 1].imag
    A[:, 0] *= 0.5
    B[:, 0] = 0.0
    if 2 * J == N:
        A[:, J] *= 0.5
        B[:, J] = 0.0
    return A, B


@njit
def trig_project_loop(samples, J):
    m, N = samples.shape
    A = np.zeros((m, J + 1))
    B = np.zeros((m, J + 1))
    cos_tab = np.empty((J + 1, N))
    sin_tab = np.empty((J + 1, N))
    for j in range(J + 1):
        for k in range(N):
            # reduce j*k mod N first so the angle stays in [0, 2pi)
            ang = 2.0 * np.pi * ((j * k) % N) / N
            cos_tab[j, k] = np.cos(ang)
            sin_tab[j, k] = np.sin(ang)
    for i in range(m):
        for j in range(J + 1):
            sa = 0.0
            sb = 0.0
            for k in range(N):
                sa += samples[i, k] * cos_tab[j, k]
                sb += samples[i, k] * sin_tab[j, k]
            wgt = 1.0 / N if (j == 0 or 2 * j == N) else 2.0 / N
            A[i, j] = wgt * sa
            B[i, j] = 0.0 if (j == 0 or 2 * j == N) else wgt * sb
    return A, B


# rfft beats the compiled O(N J) loop (see benchmarks/), so the projection
# always uses numpy; the loop stays as an independent cross-check
trig_project = trig_project_numpy
if USE_NUMBA:
    bracket_terms = bracket_terms_loop
    form_terms = form_terms_loop
else:
    bracket_terms = bracket_terms_numpy
    form_terms = form_terms_numpy
