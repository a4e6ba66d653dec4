import numpy as np
import pytest

from lwcyclic import jets as J
from lwcyclic.errors import DomainError
from lwcyclic.jets import Jet2, VecJet2


def tup(j):
    return tuple(np.asarray(j.c, dtype=float).ravel())


def test_seeds():
    assert tup(Jet2.constant(7.0)) == (7, 0, 0, 0, 0, 0)
    assert tup(Jet2.var_u(2.0)) == (2, 1, 0, 0, 0, 0)
    assert tup(Jet2.var_v(-1.0)) == (-1, 0, 1, 0, 0, 0)


def test_arith_examples():
    u, v = Jet2.var_u(2.0), Jet2.var_v(5.0)
    assert tup(u * u) == (4, 4, 0, 2, 0, 0)
    assert tup(u * v) == (10, 5, 2, 0, 1, 0)
    np.testing.assert_allclose(tup(Jet2.var_u(3.0) / Jet2.var_u(3.0)), (1, 0, 0, 0, 0, 0), atol=1e-15)
    assert tup(-u) == (-2, -1, 0, 0, 0, 0)
    assert tup(u - v) == (-3, 1, -1, 0, 0, 0)


def test_elementary_examples():
    assert tup(J.sin(Jet2.var_v(0.0))) == (0, 0, 1, 0, 0, 0)
    assert tup(J.cosh(Jet2.var_u(0.0))) == (1, 0, 0, 1, 0, 0)
    assert tup(J.sqrt(Jet2.constant(4.0))) == (2, 0, 0, 0, 0, 0)


def test_half_integer_power_matches_sqrt():
    x = Jet2.var_u(2.0) * Jet2.var_v(1.5)
    np.testing.assert_allclose(tup(x ** 1.5), tup(x * J.sqrt(x)), rtol=1e-14)
    np.testing.assert_allclose(tup(x ** -2), tup(1.0 / (x * x)), rtol=1e-14)


def test_general_real_power_rejected():
    with pytest.raises(ValueError):
        Jet2.var_u(2.0) ** 0.3


def test_domain_errors():
    with pytest.raises(DomainError):
        J.sqrt(Jet2.constant(-1.0))
    with pytest.raises(DomainError):
        Jet2.var_u(0.0).reciprocal()
    with pytest.raises(DomainError):
        J.tan(Jet2.constant(np.pi / 2))
    with pytest.raises(DomainError):
        J.cot(Jet2.constant(0.0))


def test_mixed_slot_is_single():
    j = Jet2.var_u(np.array([1.0, 2.0])) * Jet2.var_v(np.array([2.0, 3.0]))
    assert j.c.shape == (6, 2)
    assert np.shares_memory(j.duv, j.dvu)
    np.testing.assert_array_equal(j.duv, [1.0, 1.0])


def test_vecjet_swap_and_transform():
    u, v = Jet2.var_u(0.3), Jet2.var_v(0.7)
    X = VecJet2.from_components(u * v, u * u, v)
    S = X.swapped()
    np.testing.assert_array_equal(S.Xu, X.Xv)
    np.testing.assert_array_equal(S.Xuu, X.Xvv)
    L = np.diag([2.0, 3.0, 4.0])
    T = X.transformed(L, shift=np.ones(3))
    np.testing.assert_allclose(T.X, L @ X.X + 1.0)
    np.testing.assert_allclose(T.Xuv, L @ X.Xuv)
