"""OBJ and CSV export of a sampled surface.

OBJ writes the Euclidean coordinates (x1, x2, x3) as they are, so a viewer
shows x3 (the time axis) as an ordinary spatial axis.
"""
import numpy as np

from .surface import evaluate_grid

CSV_HEADER = "u,v,x1,x2,x3,E,F,G,W,H,K,residual"


def _fmt(x):
    return repr(float(x))


def obj_lines(X):
    """Vertex lines then triangle lines (1-based) for an (nu, nv, 3) node array."""
    nu, nv = X.shape[:2]
    lines = ["v " + " ".join(_fmt(c) for c in X[i, j]) for i in range(nu) for j in range(nv)]
    for i in range(nu - 1):
        for j in range(nv - 1):
            p = i * nv + j + 1
            q, s, t = p + nv, p + nv + 1, p + 1
            lines.append(f"f {p} {q} {s}")
            lines.append(f"f {p} {s} {t}")
    return lines


def csv_lines(ev, wc=None):
    rows = [CSV_HEADER]
    res = (wc.a * ev.H + wc.b * ev.K - wc.c) if wc is not None else np.full(ev.H.shape, np.nan)
    nu, nv = ev.U.shape
    for i in range(nu):
        for j in range(nv):
            vals = (ev.U[i, j], ev.V[i, j], *ev.X[i, j], ev.E[i, j], ev.F[i, j], ev.G[i, j],
                    ev.W[i, j], ev.H[i, j], ev.K[i, j], res[i, j])
            rows.append(",".join(_fmt(x) for x in vals))
    return rows


def mesh_lines(surface, U, V, fmt="obj", wc=None):
    """OBJ or CSV lines for the grid (U, V) of ``surface``."""
    if fmt not in ("obj", "csv"):
        raise ValueError("mesh format must be obj or csv")
    umin, umax, vmin, vmax = surface.domain
    if np.min(U) < umin or np.max(U) > umax or np.min(V) < vmin or np.max(V) > vmax:
        raise ValueError("grid leaves the surface domain")
    ev = evaluate_grid(surface, U, V)
    return obj_lines(ev.X) if fmt == "obj" else csv_lines(ev, wc)


def export_mesh(surface, U, V, path, fmt="obj", wc=None):
    """Write the grid (U, V) of ``surface`` to ``path``; returns the line count."""
    lines = mesh_lines(surface, U, V, fmt, wc)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    return len(lines)
