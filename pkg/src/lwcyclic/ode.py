"""Adaptive Dormand-Prince 5(4) integration with continuous output.

Steps are accepted under the mixed criterion

    rms( err_i / (atol + rtol * max(|y0_i|, |y1_i|)) ) <= 1

and every accepted step keeps the coefficients of the free fourth-order
interpolant, so the solution can be queried anywhere inside the reached span.
Integration may run backwards (``t_end < t0``).
"""
from dataclasses import dataclass

import numpy as np

from .errors import IntegrationError

DEFAULT_RTOL = 1e-10
DEFAULT_ATOL = 1e-12
EVENT_TOL = 1e-12

C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
A = [
    [],
    [1 / 5],
    [3 / 40, 9 / 40],
    [44 / 45, -56 / 15, 32 / 9],
    [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
    [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
    [35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
]
# fifth-order solution minus embedded fourth-order solution
ERR = np.array([71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40])
DENSE = np.array([-12715105075 / 11282082432, 0.0, 87487479700 / 32700410799,
                  -10690763975 / 1880347072, 701980252875 / 199316789632,
                  -1453857185 / 822651844, 69997945 / 29380423])


@dataclass
class IvpProblem:
    fun: object
    t0: float
    y0: np.ndarray
    t_end: float
    rtol: float = DEFAULT_RTOL
    atol: float = DEFAULT_ATOL
    max_steps: int = 200_000
    blowup: float = 1e12

    def __post_init__(self):
        self.y0 = np.atleast_1d(np.asarray(self.y0, dtype=float))
        if self.rtol <= 0 or self.atol <= 0:
            raise ValueError("tolerances must be positive")
        if not self.t_end != self.t0:
            raise ValueError("integration span is degenerate")

    @property
    def dim(self):
        return self.y0.size


class DenseSolution:
    """Accepted mesh plus per-step interpolant coefficients.

    ``status`` is ``"success"``, ``"event"`` (guard crossed zero at
    ``t_stop``) or ``"blowup"`` (state left the finite range).
    """

    def __init__(self, ts, ys, rcont, status, message, nfev, t_stop):
        self.ts = ts
        self.ys = ys
        self.rcont = rcont
        self.status = status
        self.message = message
        self.nfev = nfev
        self.t_start = float(ts[0])
        self.t_stop = float(t_stop)
        self.direction = 1.0 if ts[-1] > ts[0] else -1.0

    @property
    def span(self):
        return (min(self.t_start, self.t_stop), max(self.t_start, self.t_stop))

    def _locate(self, t):
        lo, hi = self.span
        if np.any((t < lo) | (t > hi)) or not np.all(np.isfinite(t)):
            raise ValueError(f"query outside solved span [{lo}, {hi}]")
        key = self.direction * self.ts
        k = np.searchsorted(key, self.direction * t, side="right") - 1
        return np.clip(k, 0, len(self.ts) - 2)

    def eval(self, t):
        """State and time derivative of the interpolant at scalar or array ``t``."""
        t = np.asarray(t, dtype=float)
        scalar = t.ndim == 0
        t = np.atleast_1d(t)
        k = self._locate(t)
        h = self.ts[k + 1] - self.ts[k]
        th = ((t - self.ts[k]) / h)[:, None]
        r1, r2, r3, r4, r5 = (self.rcont[k, i] for i in range(5))
        y = r1 + th * (r2 + (1 - th) * (r3 + th * (r4 + (1 - th) * r5)))
        # d/dtheta of the nested form above
        dth = (r2 + (1 - 2 * th) * (r3 + th * (r4 + (1 - th) * r5))
               + th * (1 - th) * (r4 + (1 - 2 * th) * r5))
        dy = dth / h[:, None]
        exact = self.ts[k + 1] == t
        y[exact] = self.ys[k[exact] + 1]
        exact0 = self.ts[k] == t
        y[exact0] = self.ys[k[exact0]]
        if scalar:
            return y[0], dy[0]
        return y, dy

    def __call__(self, t):
        return self.eval(t)[0]


class SplitSolution:
    """Two solutions sharing an initial time, one integrated each way."""

    def __init__(self, backward, forward):
        self.backward = backward
        self.forward = forward
        self.t0 = forward.t_start
        self.span = (backward.span[0], forward.span[1])

    def eval(self, t):
        t = np.asarray(t, dtype=float)
        scalar = t.ndim == 0
        t = np.atleast_1d(t)
        y = np.empty((t.size, self.forward.ys.shape[1]))
        dy = np.empty_like(y)
        fw = t >= self.t0
        if np.any(fw):
            y[fw], dy[fw] = self.forward.eval(t[fw])
        if np.any(~fw):
            y[~fw], dy[~fw] = self.backward.eval(t[~fw])
        if scalar:
            return y[0], dy[0]
        return y, dy

    def __call__(self, t):
        return self.eval(t)[0]


def _rms(x):
    return float(np.sqrt(np.mean(x * x)))


def _initial_step(fun, t0, y0, f0, direction, rtol, atol, span):
    sc = atol + rtol * np.abs(y0)
    d0, d1 = _rms(y0 / sc), _rms(f0 / sc)
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    h0 = min(h0, span)
    y1 = y0 + direction * h0 * f0
    f1 = np.asarray(fun(t0 + direction * h0, y1), dtype=float)
    d2 = _rms((f1 - f0) / sc) / h0
    if max(d1, d2) <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** 0.2
    return min(100 * h0, h1, span)


def _bisect_event(guard, interp, ta, tb):
    ga = guard(interp(ta))
    while abs(tb - ta) > EVENT_TOL:
        tm = 0.5 * (ta + tb)
        gm = guard(interp(tm))
        if (gm > 0) == (ga > 0):
            ta, ga = tm, gm
        else:
            tb = tm
    return tb


def integrate_ivp(problem, guard=None):
    """Integrate ``problem`` over its span; see :class:`DenseSolution`.

    If ``guard`` is given, integration halts at the first zero crossing of
    ``guard(state)`` (located by bisection on the interpolant).
    """
    fun = problem.fun
    t = float(problem.t0)
    t_end = float(problem.t_end)
    direction = 1.0 if t_end > t else -1.0
    y = problem.y0.copy()
    rtol, atol = problem.rtol, problem.atol
    f = np.asarray(fun(t, y), dtype=float)
    nfev = 1
    if not np.all(np.isfinite(f)):
        raise ValueError("right-hand side is not finite at the initial state")
    if guard is not None and not guard(y) > 0:
        raise ValueError("guard must be positive at the initial state")

    h = _initial_step(fun, t, y, f, direction, rtol, atol, abs(t_end - t))
    nfev += 1
    ts, ys, rconts = [t], [y.copy()], []
    status, message = "success", "reached end of span"
    t_stop = t_end
    k = np.empty((7, y.size))
    rejected = False

    for _ in range(problem.max_steps):
        if direction * (t_end - t) <= 0:
            break
        h = min(h, abs(t_end - t))
        if h < 16 * np.finfo(float).eps * max(1.0, abs(t)):
            raise IntegrationError(f"step size underflow at t = {t!r}",
                                   reached=(problem.t0, t))
        hs = direction * h
        k[0] = f
        for s in range(1, 7):
            ys_ = y + hs * (np.asarray(A[s]) @ k[:s])
            k[s] = fun(t + C[s] * hs, ys_)
        nfev += 6
        y_new = ys_  # stage 7 is evaluated at the fifth-order solution
        err_vec = hs * (ERR @ k)
        sc = atol + rtol * np.maximum(np.abs(y), np.abs(y_new))
        err = _rms(err_vec / sc)
        if not np.isfinite(err):
            h *= 0.2
            rejected = True
            continue
        if err > 1.0:
            h *= max(0.2, 0.9 * err ** -0.2)
            rejected = True
            continue

        r1 = y
        r2 = y_new - y
        r3 = hs * k[0] - r2
        r4 = r2 - hs * k[6] - r3
        r5 = hs * (DENSE @ k)
        rconts.append(np.stack([r1, r2, r3, r4, r5]))
        t_new = t + hs if direction * (t_end - (t + hs)) > 0 else t_end
        ts.append(t_new)
        ys.append(y_new.copy())

        if not np.all(np.isfinite(y_new)) or np.max(np.abs(y_new)) > problem.blowup:
            status, message, t_stop = "blowup", f"state exceeded {problem.blowup:g}", t_new
            break
        if guard is not None and not guard(y_new) > 0:
            seg = np.stack([r1, r2, r3, r4, r5])
            ta, hh = t, t_new - t

            def interp(tq, seg=seg, ta=ta, hh=hh):
                th = (tq - ta) / hh
                return seg[0] + th * (seg[1] + (1 - th) * (seg[2] + th * (seg[3] + (1 - th) * seg[4])))

            t_stop = _bisect_event(guard, interp, t, t_new)
            status, message = "event", f"guard crossed zero at t = {t_stop!r}"
            break

        fac = 10.0 if not rejected else 1.0
        h *= min(fac, max(0.2, 0.9 * max(err, 1e-10) ** -0.2))
        rejected = False
        t, y, f = t_new, y_new, k[6].copy()
    else:
        raise IntegrationError(f"exceeded {problem.max_steps} steps", reached=(problem.t0, t))

    return DenseSolution(np.array(ts), np.array(ys), np.array(rconts), status, message,
                         nfev, t_stop)


def dense_eval(solution, t):
    return solution.eval(t)


def event_stop(problem, guard):
    return integrate_ivp(problem, guard=guard)
