"""Time the numba loop kernels against their numpy twins.

    python benchmarks/bench_kernels.py --n 200000 --repeat 5

Both forms are imported directly, so the result does not depend on
LWCYCLIC_DISABLE_NUMBA.  The first numba call (compilation) is excluded.
"""
import argparse
import time

import numpy as np

from lwcyclic import kernels
from lwcyclic._accel import HAS_NUMBA


def _best(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=200_000, help="points per call")
    ap.add_argument("--rows", type=int, default=2_000, help="sample rows for trig_project")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    vecs = tuple(rng.normal(size=(args.n, 3)) for _ in range(5))
    samples = rng.normal(size=(args.rows, 64))
    cases = [
        ("form_terms", kernels.form_terms_numpy, kernels.form_terms_loop, vecs),
        ("bracket_terms", kernels.bracket_terms_numpy, kernels.bracket_terms_loop, vecs),
        ("trig_project", kernels.trig_project_numpy, kernels.trig_project_loop, (samples, 16)),
    ]
    print(f"numba available: {HAS_NUMBA}")
    print(f"{'kernel':<15}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>10}{'max diff':>12}")
    for name, np_fn, loop_fn, a in cases:
        if HAS_NUMBA:
            loop_fn(*a)  # compile
        t_np = _best(np_fn, a, args.repeat)
        t_lp = _best(loop_fn, a, args.repeat)
        ref, got = np_fn(*a), loop_fn(*a)
        ref = np.concatenate([np.ravel(x) for x in (ref if isinstance(ref, tuple) else (ref,))])
        got = np.concatenate([np.ravel(x) for x in (got if isinstance(got, tuple) else (got,))])
        ok = np.isfinite(ref) & np.isfinite(got)
        diff = float(np.max(np.abs(ref[ok] - got[ok]) / np.maximum(1.0, np.abs(ref[ok]))))
        print(f"{name:<15}{1e3 * t_np:>12.2f}{1e3 * t_lp:>12.2f}{t_np / t_lp:>10.2f}{diff:>12.1e}")


if __name__ == "__main__":
    main()
