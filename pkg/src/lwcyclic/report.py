"""Verification suite and its JSON report.

Checks run in a fixed order and each record carries the value it measured
and the threshold it was compared with.  The report is plain JSON with a
stable key order, so identical configs give byte-identical files.
"""
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from ._accel import BACKEND
from .catalog import GRAM_DRIFT_LIMIT, build_surface
from .coeffs import coefficient_scan
from .errors import IntegrationError
from .lorentz import minkowski_dot
from .ode import DEFAULT_ATOL, DEFAULT_RTOL
from .surface import fold_crossings, spacelike_subgrid

PASS, FAIL = "pass", "fail"


def _num(x):
    if x is None:
        return None
    x = float(x)
    if math.isfinite(x):
        return x
    return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")


@dataclass
class Check:
    name: str
    status: str
    measured: object
    threshold: object
    note: str = ""
    extra: dict = field(default_factory=dict)

    def to_dict(self):
        d = {"name": self.name, "status": self.status, "measured": _num(self.measured),
             "threshold": _num(self.threshold), "note": self.note}
        for k, v in self.extra.items():
            d[k] = _num(v) if isinstance(v, (int, float, np.floating)) else v
        return d


def _le(name, measured, threshold, note="", **extra):
    ok = measured is not None and math.isfinite(measured) and measured <= threshold
    return Check(name, PASS if ok else FAIL, measured, threshold, note, extra)


@dataclass
class VerificationReport:
    config: dict
    checks: list
    coefficients: dict = None
    environment: dict = field(default_factory=dict)
    construction_failed: bool = False

    @property
    def status(self):
        return PASS if self.checks and all(c.status == PASS for c in self.checks) else FAIL

    def to_dict(self):
        return {"tool": "lwcyclic", "version": __version__, "status": self.status,
                "config": self.config, "checks": [c.to_dict() for c in self.checks],
                "coefficients": self.coefficients, "environment": self.environment}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def failed(self):
        return [c.name for c in self.checks if c.status != PASS]


def environment(cfg):
    return {
        "tolerances": dict(sorted(cfg.tolerances.items())),
        "integrator": {"method": "dormand-prince-5(4)", "rtol": DEFAULT_RTOL,
                       "atol": DEFAULT_ATOL, "frame_drift_limit": GRAM_DRIFT_LIMIT},
        "w_power": "single",
        "orientation": "unit normal Xu ^ Xv / |Xu ^ Xv| in the catalog (u, v) order",
        "backend": BACKEND,
    }


def _family_checks(cfg, surface, ev, mask):
    fam = cfg.surface.family
    p = cfg.surface.params
    tol = cfg.tol("curvature")
    H, K = ev.H[mask], ev.K[mask]
    out = []
    if fam == "pseudohyperbolic":
        r = float(np.atleast_1d(p.get("r", 1.0))[0])
        out.append(_le("gauss_curvature", float(np.max(np.abs(K - 1.0 / r ** 2))), tol,
                       "K = 1/r^2 on every spacelike node", value=float(np.mean(K)),
                       expected=1.0 / r ** 2))
        out.append(_le("mean_curvature", float(np.max(np.abs(np.abs(H) - 1.0 / r))), tol,
                       "|H| = 1/r on every spacelike node", value=float(np.mean(H)),
                       expected=1.0 / r))
    elif fam in ("riemann-maximal", "lightlike-maximal"):
        out.append(_le("max_abs_H", float(np.max(np.abs(H))), 1e-6 if tol < 1e-6 else tol,
                       "maximal surface"))
    elif fam == "flat":
        out.append(_le("max_abs_K", float(np.max(np.abs(K))), tol, "flat surface"))
    elif fam.startswith("frenet-"):
        c0 = surface.info["center"]
        X = ev.X[mask] - c0
        q = minkowski_dot(X, X)
        expected = surface.info["expected"]
        out.append(_le("center_spread", float(np.ptp(q)), cfg.tol("center"),
                       "<X - c0, X - c0> constant", value=float(np.mean(q)), expected=expected))
        out.append(_le("center_value", float(abs(np.mean(q) - expected)), cfg.tol("center"),
                       "<X - c0, X - c0> = -1/(4 a^2)"))
        out.append(_le("frame_gram_drift", float(surface.info["gram_drift"]), cfg.tol("frame"),
                       "frame Gram relations over the span"))
    return out


def _inputs(cfg):
    # the output path is not an input; leaving it out keeps reports comparable
    d = cfg.to_dict()
    d.pop("out", None)
    return d


def run_suite(cfg):
    """Build the configured surface and run every applicable check."""
    env = environment(cfg)
    checks = []
    try:
        surface = build_surface(cfg.surface)
    except (ValueError, IntegrationError, ArithmeticError) as exc:
        checks.append(Check("construct", FAIL, None, None, f"{type(exc).__name__}: {exc}"))
        return VerificationReport(_inputs(cfg), checks, None, env, construction_failed=True)
    checks.append(Check("construct", PASS, None, None, surface.name))

    ev, mask = spacelike_subgrid(surface, cfg.nu, cfg.nv, cfg.domain)
    count = int(mask.sum())
    checks.append(Check("spacelike_nodes", PASS if count > 0 else FAIL, count, 1,
                        f"eroded spacelike nodes of a {cfg.nu} x {cfg.nv} grid",
                        {"min_W": float(np.nanmin(ev.W))}))
    folds = fold_crossings(ev, mask)
    checks.append(Check("single_sheet", PASS if folds == 0 else FAIL, folds, 0,
                        "neighbouring nodes with opposite normal time orientation"))
    wc = cfg.weingarten
    if count:
        res = wc.a * ev.H[mask] + wc.b * ev.K[mask] - wc.c
        flip = -wc.a * ev.H[mask] + wc.b * ev.K[mask] - wc.c
        checks.append(_le("weingarten_residual", float(np.max(np.abs(res))), cfg.tol("residual"),
                          "max |aH + bK - c| on spacelike nodes",
                          flipped_measured=float(np.max(np.abs(flip)))))
        checks.extend(_family_checks(cfg, surface, ev, mask))
    else:
        checks.append(Check("weingarten_residual", FAIL, None, cfg.tol("residual"),
                            "no spacelike nodes to evaluate"))

    try:
        scan = coefficient_scan(surface, wc, J=cfg.J, nu=cfg.scan_nu)
    except (ValueError, ArithmeticError) as exc:
        checks.append(Check("coefficient_summary", FAIL, None, cfg.tol("summary"),
                            f"{type(exc).__name__}: {exc}"))
        return VerificationReport(_inputs(cfg), checks, None, env)
    checks.append(_le("coefficient_summary", scan.summary, cfg.tol("summary"),
                      f"largest normalized {surface.mode} coefficient of the rationalized residual",
                      argmax_u=scan.argmax_u))
    coeffs = scan.to_dict()
    coeffs["spectra"] = [{k: ([_num(x) for x in v] if isinstance(v, list) else _num(v)
                               if isinstance(v, float) else v) for k, v in s.items()}
                         for s in coeffs["spectra"]]
    coeffs["summary"] = _num(coeffs["summary"])
    return VerificationReport(_inputs(cfg), checks, coeffs, env)
