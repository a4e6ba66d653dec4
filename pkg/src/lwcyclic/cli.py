"""Command-line entry point.

Exit codes: 0 pass, 1 a check failed, 2 usage error, 3 the surface could not
be constructed or integrated.
"""
import argparse
import json
import sys

import numpy as np

from .catalog import FAMILIES, SurfaceSpec, build_surface
from .coeffs import coefficient_scan
from .config import FORMATS, RunConfig, load_config, with_overrides
from .errors import ConditioningError, IntegrationError
from .mesh import mesh_lines
from .report import _num, run_suite
from .surface import evaluate_grid, erode, rationalized_terms

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_BUILD = 0, 1, 2, 3

# flag name -> surface parameter key
_PARAM_FLAGS = {"r": "r", "x0": "x0", "lam": "lam", "mu": "mu", "eps": "eps", "r0": "r0",
                "r0p": "r0p", "kind": "kind", "f": "f", "g": "g", "kappa": "kappa",
                "sigma": "sigma", "beta": "beta", "frame_a": "a"}


class _UsageError(Exception):
    pass


class _BuildError(Exception):
    pass


def _common():
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("run")
    g.add_argument("--config", help="JSON run config; flags override it")
    g.add_argument("--surface", choices=FAMILIES, help="surface family")
    g.add_argument("--a", type=float)
    g.add_argument("--b", type=float)
    g.add_argument("--c", type=float)
    for k in ("umin", "umax", "vmin", "vmax"):
        g.add_argument(f"--{k}", type=float)
    g.add_argument("--nu", type=int)
    g.add_argument("--nv", type=int)
    g.add_argument("--J", type=int, help="coefficient index / degree cap")
    g.add_argument("--tol", type=float, help="residual and curvature tolerance")
    g.add_argument("--out", help="output path (default stdout)")
    g.add_argument("--format", choices=FORMATS)
    s = p.add_argument_group("surface parameters")
    s.add_argument("--r", type=float, nargs="+", help="radius, or profile polynomial coefficients")
    s.add_argument("--x0", type=float, nargs=3)
    s.add_argument("--lam", type=float)
    s.add_argument("--mu", type=float)
    s.add_argument("--eps", type=int, choices=(1, -1))
    s.add_argument("--r0", type=float)
    s.add_argument("--r0p", type=float)
    s.add_argument("--kind", choices=("spacelike", "timelike", "lightlike"))
    s.add_argument("--f", type=float, nargs="+")
    s.add_argument("--g", type=float, nargs="+")
    s.add_argument("--kappa", type=float, nargs="+")
    s.add_argument("--sigma", type=float, nargs="+")
    s.add_argument("--beta", type=float, nargs="+")
    s.add_argument("--frame-a", dest="frame_a", type=float)
    s.add_argument("--bump", type=float, help="add bump * sin(u) to the radius profile")
    return p


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="lwcyclic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    cur = sub.add_parser("curvature", parents=[common], help="H and K at a point or on a grid")
    cur.add_argument("--u", type=float)
    cur.add_argument("--v", type=float)
    sub.add_parser("residual", parents=[common], help="Weingarten and rationalized residual scan")
    sub.add_parser("coeffs", parents=[common], help="coefficient scan of the residual")
    sub.add_parser("mesh", parents=[common], help="export OBJ or CSV")
    sub.add_parser("verify", parents=[common], help="run the verification suite")
    return parser


def _params(args):
    out = {}
    for flag, key in _PARAM_FLAGS.items():
        val = getattr(args, flag)
        if val is None:
            continue
        if isinstance(val, list) and len(val) == 1 and flag in ("r",):
            val = val[0]
        out[key] = list(val) if isinstance(val, list) else val
    return out


def resolve_config(args):
    try:
        if args.config:
            cfg = load_config(args.config)
        else:
            cfg = RunConfig(SurfaceSpec(args.surface or "pseudohyperbolic"))
        return with_overrides(
            cfg, family=args.surface, params=_params(args), a=args.a, b=args.b, c=args.c,
            domain=(args.umin, args.umax, args.vmin, args.vmax), bump=args.bump,
            nu=args.nu, nv=args.nv, tol=args.tol, out=args.out, fmt=args.format,
            J=args.J)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise _UsageError(str(exc)) from exc


def _surface(cfg):
    try:
        return build_surface(cfg.surface)
    except (ValueError, IntegrationError, ArithmeticError) as exc:
        raise _BuildError(f"{type(exc).__name__}: {exc}") from exc


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj):
    return json.dumps(obj, indent=2) + "\n"


def _grid(cfg, surface):
    return surface.grid(cfg.nu, cfg.nv, cfg.domain)


def _nums(a):
    return [[_num(x) for x in row] for row in np.atleast_2d(a)]


def cmd_curvature(args, cfg):
    surface = _surface(cfg)
    if (args.u is None) != (args.v is None):
        raise _UsageError("--u and --v go together")
    if args.u is not None:
        U, V = np.array([[args.u]]), np.array([[args.v]])
    else:
        U, V = _grid(cfg, surface)
    ev = evaluate_grid(surface, U, V)
    if cfg.format == "csv":
        from .mesh import csv_lines
        _emit("\n".join(csv_lines(ev, cfg.weingarten)) + "\n", cfg.out)
    else:
        _emit(_json({"surface": surface.name, "u": _nums(U), "v": _nums(V), "H": _nums(ev.H),
                     "K": _nums(ev.K), "W": _nums(ev.W),
                     "spacelike": np.atleast_2d(ev.spacelike).tolist()}), cfg.out)
    return EXIT_PASS if np.any(ev.spacelike) else EXIT_FAIL


def cmd_residual(args, cfg):
    surface = _surface(cfg)
    U, V = _grid(cfg, surface)
    ev = evaluate_grid(surface, U, V)
    mask = erode(ev.spacelike)
    wc = cfg.weingarten
    rt = rationalized_terms(surface.jet(U, V), wc)
    with np.errstate(divide="ignore", invalid="ignore"):
        norm = np.abs(rt.phi) / rt.scale
    res = np.abs(wc.a * ev.H + wc.b * ev.K - wc.c)
    flip = np.abs(-wc.a * ev.H + wc.b * ev.K - wc.c)
    count = int(mask.sum())
    measured = float(np.max(res[mask])) if count else float("nan")
    tol = cfg.tol("residual")
    ok = count > 0 and measured <= tol
    _emit(_json({
        "surface": surface.name, "weingarten": cfg.to_dict()["weingarten"],
        "spacelike_nodes": count,
        "weingarten_residual": {"measured": _num(measured), "threshold": tol,
                                "flipped_measured": _num(np.max(flip[mask]) if count else None)},
        "rationalized_residual": {"max_normalized": _num(np.max(norm[mask]) if count else None),
                                  "max_abs": _num(np.max(np.abs(rt.phi[mask])) if count else None)},
        "status": "pass" if ok else "fail",
    }), cfg.out)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_coeffs(args, cfg):
    surface = _surface(cfg)
    try:
        scan = coefficient_scan(surface, cfg.weingarten, J=cfg.J, nu=cfg.scan_nu)
    except ConditioningError as exc:
        raise _UsageError(str(exc)) from exc
    except ValueError as exc:
        raise _BuildError(str(exc)) from exc
    d = scan.to_dict()
    tol = cfg.tol("summary")
    ok = scan.summary <= tol
    d["spectra"] = [{k: ([_num(x) for x in v] if isinstance(v, list) else v)
                     for k, v in s.items()} for s in d["spectra"]]
    out = {"surface": surface.name, "mode": surface.mode,
           "weingarten": cfg.to_dict()["weingarten"], "summary": _num(scan.summary),
           "threshold": tol, "argmax_u": scan.argmax_u, "status": "pass" if ok else "fail",
           "spectra": d["spectra"]}
    _emit(_json(out), cfg.out)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_mesh(args, cfg):
    fmt = args.format or "obj"
    if fmt == "json":
        raise _UsageError("mesh writes obj or csv")
    surface = _surface(cfg)
    U, V = _grid(cfg, surface)
    try:
        lines = mesh_lines(surface, U, V, fmt, cfg.weingarten)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_PASS


def cmd_verify(args, cfg):
    report = run_suite(cfg)
    _emit(report.to_json(), cfg.out)
    if report.construction_failed:
        return EXIT_BUILD
    if report.status != "pass":
        print("failed checks: " + ", ".join(report.failed()), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_PASS


COMMANDS = {"curvature": cmd_curvature, "residual": cmd_residual, "coeffs": cmd_coeffs,
            "mesh": cmd_mesh, "verify": cmd_verify}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_PASS
    try:
        cfg = resolve_config(args)
        return COMMANDS[args.command](args, cfg)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"lwcyclic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _BuildError as exc:
        print(f"lwcyclic: construction failed: {exc}", file=sys.stderr)
        return EXIT_BUILD
    except OSError as exc:
        print(f"lwcyclic: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
