import numpy as np
import pytest

from lwcyclic.catalog import cyclic_parallel, flat_family, lightlike_maximal, pseudohyperbolic
from lwcyclic.errors import DegeneratePointError, NonSpacelikeError
from lwcyclic.lorentz import CausalClass, minkowski_dot
from lwcyclic.surface import (CurvaturePair, Surface, WeingartenCoeffs, bracket_P, bracket_Q,
                              curvatures, evaluate_grid, fundamental_forms, gauss_map,
                              rationalized_residual, spacelike_check, weingarten_residual)

plane = Surface("plane", lambda u, v: (u, v, 0.0 * u), (-1.0, 1.0, -1.0, 1.0))
graph = Surface("graph", lambda u, v: (u, v, 0.1 * (u * u + v * v)), (-1.0, 1.0, -1.0, 1.0))


def test_gauss_map_examples():
    G = gauss_map(plane.jet(0.2, 0.3))
    assert abs(G[2]) == pytest.approx(1.0) and G[0] == 0 and G[1] == 0
    assert minkowski_dot(G, G) == pytest.approx(-1.0)
    G = gauss_map(pseudohyperbolic(1.0).jet(1.0, 0.0))
    np.testing.assert_allclose(np.abs(G), [np.sinh(1), 0.0, np.cosh(1)], atol=1e-14)
    assert minkowski_dot(G, G) == pytest.approx(-1.0)
    G = gauss_map(graph.jet(0.0, 0.0))
    np.testing.assert_allclose(np.abs(G), [0, 0, 1], atol=1e-15)


def test_gauss_map_degenerate():
    line = Surface("line", lambda u, v: (u + v, 0.0 * u, 0.0 * u), (0, 1, 0, 1))
    with pytest.raises(DegeneratePointError):
        gauss_map(line.jet(0.5, 0.5))


def test_fundamental_forms_examples():
    ff = fundamental_forms(pseudohyperbolic(1.0).jet(1.0, 0.0))
    assert (ff.E, ff.F) == (pytest.approx(1.0), pytest.approx(0.0, abs=1e-15))
    assert ff.G == pytest.approx(np.sinh(1) ** 2)
    assert ff.G == pytest.approx(1.38109, abs=1e-5)
    ff = fundamental_forms(plane.jet(0.1, 0.2))
    assert (ff.E, ff.F, ff.G, ff.e, ff.f, ff.g) == (1, 0, 1, 0, 0, 0)
    s = cyclic_parallel("spacelike", [0.0], [0.0], [1.0])
    for u, v in [(0.1, 0.0), (0.5, 2.0), (0.9, 4.0)]:
        ff = fundamental_forms(s.jet(u, v))
        assert ff.G == pytest.approx(1.0) and ff.F == pytest.approx(0.0, abs=1e-15)
        assert ff.W == pytest.approx(ff.E * ff.G - ff.F ** 2, rel=1e-12)


def test_curvature_examples():
    s = pseudohyperbolic(2.0)
    U, V = s.grid(7, 9)
    cp = curvatures(s.jet(U, V))
    np.testing.assert_allclose(cp.K, 0.25, rtol=1e-12)
    np.testing.assert_allclose(np.abs(cp.H), 0.5, rtol=1e-12)
    cp = curvatures(plane.jet(0.3, 0.4))
    assert cp.H == 0 and cp.K == 0
    fl = flat_family("spacelike")
    ev = evaluate_grid(fl, *fl.grid(12, 12))
    m = ev.spacelike
    assert m.sum() > 20
    assert np.max(np.abs(ev.K[m])) < 1e-12
    assert np.min(np.abs(ev.H[m])) > 1e-3


def test_curvatures_reject_timelike():
    s = cyclic_parallel("spacelike", [0.0], [0.0], [1.0])
    with pytest.raises(NonSpacelikeError):
        curvatures(s.jet(0.5, 1.0))  # E = 1 - r'^2 ... r' = 0 gives Xu = (0,0,1), timelike


def test_spacelike_check_examples():
    ok, _ = spacelike_check(pseudohyperbolic(1.0, domain=(0.5, 2.0, 0.0, 2 * np.pi)), 20, 20)
    assert ok
    ok, _ = spacelike_check(lightlike_maximal(1.0, 0.0, domain=(0.01, np.pi / 4 - 0.01, -2, 2)), 40, 40)
    assert not ok
    ok, wmin = spacelike_check(plane, 5, 5)
    assert ok and wmin == 1.0


def test_weingarten_residual_examples():
    assert weingarten_residual(CurvaturePair(0.5, 0.25), WeingartenCoeffs(2, -4, 0)) == 0
    assert weingarten_residual(CurvaturePair(0.0, 0.0), WeingartenCoeffs(3, 7, 0)) == 0
    s = pseudohyperbolic(0.5, domain=(0.5, 2.0, 0.0, 2 * np.pi))
    U, V = s.grid(8, 8)
    res = weingarten_residual(curvatures(s.jet(U, V)), WeingartenCoeffs(1, -0.5, 0))
    assert np.max(np.abs(res)) < 1e-12
    with pytest.raises(ValueError):
        WeingartenCoeffs(0, 0, 1)


def test_brackets():
    j = plane.jet(0.2, 0.1)
    assert bracket_P(j) == 0 and bracket_Q(j) == 0
    j = pseudohyperbolic(2.0).jet(1.0, 0.0)
    cp, W = curvatures(j), fundamental_forms(j).W
    assert bracket_P(j) == pytest.approx(2 * cp.H * W ** 1.5, rel=1e-12)
    j = cyclic_parallel("spacelike", [0.3, 2.0], [0.3], [1.0, 0.4, 0.2]).jet(0.6, 0.3)
    cp, W = curvatures(j), fundamental_forms(j).W
    assert bracket_Q(j) == pytest.approx(cp.K * W ** 2, rel=1e-12)


def test_rationalized_residual_examples():
    from lwcyclic.catalog import riemann_maximal
    s = riemann_maximal(1, 0.2, 0.3, r0p=1.5)
    U, V = s.grid(5, 5)
    j = s.jet(U, V)
    phi = rationalized_residual(j, WeingartenCoeffs(1, 0, 0))
    W = fundamental_forms(j).W
    assert np.max(np.abs(phi)) < 1e-12 * np.max(W ** 4 * 1e2)
    s = pseudohyperbolic(0.5, domain=(0.5, 2.0, 0.0, 2 * np.pi))
    U, V = s.grid(6, 6)
    j = s.jet(U, V)
    phi = rationalized_residual(j, WeingartenCoeffs(1, -0.5, 0))
    assert np.max(np.abs(phi / fundamental_forms(j).W ** 4)) < 1e-10
    assert rationalized_residual(plane.jet(0.1, 0.1), WeingartenCoeffs(0, 1, 1)) == pytest.approx(-4.0)


def test_evaluate_grid_marks_timelike():
    s = lightlike_maximal(1.0, 0.0, domain=(0.01, np.pi / 4 - 0.01, -2, 2))
    U, V = s.grid(30, 30)
    ev = evaluate_grid(s, U, V)
    assert np.any(~ev.spacelike) and np.any(ev.spacelike)
    assert np.all(np.isnan(ev.H[~ev.spacelike]))
