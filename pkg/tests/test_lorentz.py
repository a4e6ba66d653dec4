import numpy as np
import pytest

from lwcyclic.lorentz import (CausalClass, boost, causal_character, det3, lorentz_cross,
                              lorentz_norm, minkowski_dot, mvec, plane_character, rotation)

e1, e2, e3 = np.eye(3)


@pytest.mark.parametrize("u, v, expected", [
    ((0, 0, 1), (0, 0, 1), -1.0),
    ((1, 2, 3), (4, 5, 6), -4.0),
    ((1, 1, np.sqrt(2)), (1, 1, np.sqrt(2)), 0.0),
])
def test_minkowski_dot_examples(u, v, expected):
    assert minkowski_dot(np.array(u, float), np.array(v, float)) == pytest.approx(expected, abs=1e-15)


def test_cross_examples():
    np.testing.assert_array_equal(lorentz_cross(e1, e2), [0, 0, -1])
    np.testing.assert_array_equal(lorentz_cross(e2, e3), [1, 0, 0])
    v = np.array([0.3, -1.2, 2.0])
    np.testing.assert_array_equal(lorentz_cross(v, v), [0, 0, 0])


def test_cross_defining_identity_on_basis():
    # <u ^ v, z> = det(u, v, z) for every basis triple
    for u in np.eye(3):
        for v in np.eye(3):
            for z in np.eye(3):
                assert minkowski_dot(lorentz_cross(u, v), z) == pytest.approx(det3(u, v, z))


def test_det3_examples():
    assert det3(e1, e2, e3) == 1.0
    assert det3(e1, e1, e3) == 0.0
    assert det3(np.array([1., 2, 3]), np.array([0., 1, 4]), np.array([5., 6, 0])) == pytest.approx(1.0)


@pytest.mark.parametrize("v, n", [((0, 0, 2), 2.0), ((3, 4, 0), 5.0), ((1, 0, 1), 0.0)])
def test_norm_examples(v, n):
    assert lorentz_norm(np.array(v, float)) == pytest.approx(n)


def test_causal_examples():
    assert causal_character(e1) is CausalClass.SPACELIKE
    assert causal_character(e3) is CausalClass.TIMELIKE
    assert causal_character(np.array([1.0, 0, 1])) is CausalClass.LIGHTLIKE


def test_plane_examples():
    assert plane_character(e3) is CausalClass.SPACELIKE
    assert plane_character(e1) is CausalClass.TIMELIKE
    assert plane_character(np.array([0.0, 1, 1])) is CausalClass.LIGHTLIKE
    with pytest.raises(ValueError):
        plane_character(np.zeros(3))


def test_mvec_rejects_nonfinite():
    with pytest.raises(ValueError):
        mvec(1.0, np.nan, 0.0)


def test_boost_and_rotation_preserve_metric():
    eta = np.diag([1.0, 1.0, -1.0])
    for L in (boost(1.3), boost(-0.7, axis=1), rotation(2.1), boost(0.4) @ rotation(0.3)):
        np.testing.assert_allclose(L.T @ eta @ L, eta, atol=1e-12)
