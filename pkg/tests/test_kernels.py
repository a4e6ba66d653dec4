import os
import subprocess
import sys

import numpy as np
import pytest

from lwcyclic import kernels
from lwcyclic._accel import HAS_NUMBA


def _vecs(n, seed=0):
    rng = np.random.default_rng(seed)
    return tuple(rng.normal(size=(n, 3)) for _ in range(5))


@pytest.mark.parametrize("name", ["form_terms", "bracket_terms"])
def test_loop_matches_numpy(name):
    args = _vecs(500)
    a = getattr(kernels, name + "_numpy")(*args)
    loop = getattr(kernels, name + "_loop")
    for fn in (loop, loop.py_func):
        b = fn(*args)
        ok = np.isfinite(a)
        np.testing.assert_array_equal(ok, np.isfinite(b))
        np.testing.assert_allclose(b[ok], a[ok], rtol=1e-12, atol=1e-12)


def test_trig_project_loop_matches_fft():
    s = np.random.default_rng(1).normal(size=(20, 64))
    A, B = kernels.trig_project_numpy(s, 16)
    for fn in (kernels.trig_project_loop, kernels.trig_project_loop.py_func):
        A2, B2 = fn(s, 16)
        np.testing.assert_allclose(A2, A, atol=1e-13)
        np.testing.assert_allclose(B2, B, atol=1e-13)


def test_backend_flag():
    code = "from lwcyclic._accel import BACKEND; print(BACKEND)"
    env = dict(os.environ, LWCYCLIC_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "numpy"
    if HAS_NUMBA:
        env["LWCYCLIC_DISABLE_NUMBA"] = "0"
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
        assert out.stdout.strip() == "numba"
