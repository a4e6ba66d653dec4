"""Run configuration: a JSON file mirroring :class:`RunConfig`, plus CLI overrides."""
import json
from dataclasses import dataclass, field, replace

from .catalog import FAMILIES, SurfaceSpec, default_domain
from .surface import WeingartenCoeffs

DEFAULT_TOLERANCES = {
    "residual": 1e-8,      # |aH + bK - c| on spacelike nodes
    "curvature": 1e-8,     # family anchors: |K - 1/r^2|, max |H| or max |K|
    "summary": 1e-8,       # largest normalized residual coefficient
    "center": 1e-7,        # spread of <X - c0, X - c0> on Frenet surfaces
    "frame": 1e-6,         # Frenet frame Gram drift
}
FORMATS = ("json", "obj", "csv")


@dataclass(frozen=True)
class RunConfig:
    surface: SurfaceSpec
    weingarten: WeingartenCoeffs = WeingartenCoeffs(1.0, 0.0, 0.0)
    nu: int = 20
    nv: int = 20
    scan_nu: int = 9
    J: int = None
    tolerances: dict = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    out: str = None
    format: str = "json"

    def __post_init__(self):
        if self.nu < 2 or self.nv < 2:
            raise ValueError("grid sizes must be at least 2")
        if self.scan_nu < 1:
            raise ValueError("scan_nu must be positive")
        for k, v in self.tolerances.items():
            if not v > 0:
                raise ValueError(f"tolerance {k!r} must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")

    def tol(self, key):
        return self.tolerances.get(key, DEFAULT_TOLERANCES[key])

    @property
    def domain(self):
        spec = self.surface
        if spec.domain is not None:
            return tuple(spec.domain)
        return default_domain(spec.family, spec.params)

    def to_dict(self):
        wc = self.weingarten
        return {
            "surface": self.surface.to_dict(),
            "weingarten": {"a": wc.a, "b": wc.b, "c": wc.c},
            "nu": self.nu, "nv": self.nv, "scan_nu": self.scan_nu, "J": self.J,
            "tolerances": dict(sorted(self.tolerances.items())),
            "out": self.out, "format": self.format,
        }

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        s = d.pop("surface", {"family": "pseudohyperbolic"})
        if isinstance(s, str):
            s = {"family": s}
        dom = s.get("domain")
        spec = SurfaceSpec(s["family"], dict(s.get("params", {})),
                           tuple(dom) if dom is not None else None, float(s.get("bump", 0.0)))
        w = d.pop("weingarten", {"a": 1.0, "b": 0.0, "c": 0.0})
        tol = dict(DEFAULT_TOLERANCES)
        tol.update(d.pop("tolerances", {}) or {})
        unknown = set(d) - {"nu", "nv", "scan_nu", "J", "out", "format"}
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(surface=spec,
                   weingarten=WeingartenCoeffs(float(w.get("a", 0.0)), float(w.get("b", 0.0)),
                                               float(w.get("c", 0.0))),
                   tolerances=tol, **d)


def load_config(path):
    with open(path, encoding="utf-8") as fh:
        return RunConfig.from_dict(json.load(fh))


def with_overrides(cfg, *, family=None, params=None, a=None, b=None, c=None, domain=None,
                   bump=None, nu=None, nv=None, tol=None, out=None, fmt=None, J=None):
    """Apply CLI-style overrides; ``domain`` is a 4-tuple with None for unchanged entries."""
    spec = cfg.surface
    if family is not None and family != spec.family:
        if family not in FAMILIES:
            raise ValueError(f"unknown surface family {family!r}")
        spec = SurfaceSpec(family, {}, None, spec.bump)
    if params:
        merged = dict(spec.params)
        merged.update(params)
        spec = SurfaceSpec(spec.family, merged, spec.domain, spec.bump)
    if bump is not None:
        spec = SurfaceSpec(spec.family, spec.params, spec.domain, float(bump))
    if domain is not None and any(x is not None for x in domain):
        base = spec.domain if spec.domain is not None else default_domain(spec.family, spec.params)
        dom = tuple(float(n) if n is not None else o for n, o in zip(domain, base))
        spec = SurfaceSpec(spec.family, spec.params, dom, spec.bump)
    wc = cfg.weingarten
    if a is not None or b is not None or c is not None:
        wc = WeingartenCoeffs(wc.a if a is None else a, wc.b if b is None else b,
                              wc.c if c is None else c)
    tols = dict(cfg.tolerances)
    if tol is not None:
        tols["residual"] = tols["curvature"] = float(tol)
    kw = {"surface": spec, "weingarten": wc, "tolerances": tols}
    if nu is not None:
        kw["nu"] = nu
    if nv is not None:
        kw["nv"] = nv
    if J is not None:
        kw["J"] = J
    if out is not None:
        kw["out"] = out
    if fmt is not None:
        kw["format"] = fmt
    return replace(cfg, **kw)
