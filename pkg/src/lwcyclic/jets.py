"""Second-order forward-mode jets in two variables (u, v).

A :class:`Jet2` carries the value and the partials ``du, dv, duu, duv, dvv``
of a scalar map at one or many evaluation points.  The six slots live on the
leading axis of one array, so a jet over a whole grid costs the same number
of numpy calls as a jet at a single point.

The elementary functions below accept jets or plain numbers/arrays, which lets
profile functions such as ``lambda u: 1 + 0.05 * u`` serve both the ODE
right-hand sides (floats) and surface assembly (jets).
"""
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

POLE_GUARD = 1e-8

VAL, DU, DV, DUU, DUV, DVV = range(6)


class Jet2:
    __slots__ = ("c",)
    # make ndarray <op> Jet2 dispatch to the reflected Jet2 methods
    __array_ufunc__ = None

    def __init__(self, c):
        c = np.asarray(c)
        if c.shape[:1] != (6,):
            raise ValueError("jet storage must have leading axis of length 6")
        self.c = c

    # construction
    @classmethod
    def constant(cls, value):
        value = np.asarray(value)
        c = np.zeros((6,) + value.shape, dtype=np.result_type(value, float))
        c[VAL] = value
        return cls(c)

    @classmethod
    def var_u(cls, u0):
        j = cls.constant(u0)
        j.c[DU] = 1.0
        return j

    @classmethod
    def var_v(cls, v0):
        j = cls.constant(v0)
        j.c[DV] = 1.0
        return j

    @classmethod
    def from_u(cls, val, d1, d2):
        """Jet of a function of u alone with given first and second derivative."""
        val, d1, d2 = np.broadcast_arrays(*map(np.asarray, (val, d1, d2)))
        c = np.zeros((6,) + val.shape, dtype=np.result_type(val, d1, d2, float))
        c[VAL], c[DU], c[DUU] = val, d1, d2
        return cls(c)

    # slots
    val = property(lambda self: self.c[VAL])
    du = property(lambda self: self.c[DU])
    dv = property(lambda self: self.c[DV])
    duu = property(lambda self: self.c[DUU])
    duv = property(lambda self: self.c[DUV])
    dvv = property(lambda self: self.c[DVV])

    @property
    def dvu(self):
        return self.c[DUV]

    @property
    def shape(self):
        return self.c.shape[1:]

    def __repr__(self):
        return f"Jet2({self.c.tolist()!r})"

    def chain(self, f0, f1, f2):
        """Apply a scalar function given its value and first two derivatives at ``val``."""
        a = self.c
        out = np.empty(np.broadcast_shapes(a.shape, (6,) + np.shape(f0)),
                       dtype=np.result_type(a, f0, f1, f2))
        out[VAL] = f0
        out[DU] = f1 * a[DU]
        out[DV] = f1 * a[DV]
        out[DUU] = f2 * a[DU] * a[DU] + f1 * a[DUU]
        out[DUV] = f2 * a[DU] * a[DV] + f1 * a[DUV]
        out[DVV] = f2 * a[DV] * a[DV] + f1 * a[DVV]
        return Jet2(out)

    # arithmetic
    def __neg__(self):
        return Jet2(-self.c)

    def __pos__(self):
        return self

    def __add__(self, other):
        a, b = _pair(self, other)
        return Jet2(a + b)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = _pair(self, other)
        return Jet2(a - b)

    def __rsub__(self, other):
        a, b = _pair(self, other)
        return Jet2(b - a)

    def __mul__(self, other):
        if not isinstance(other, Jet2):
            a, b = _pair(self, other)
            return Jet2(a * b[VAL])
        a, b = _pair(self, other)
        out = np.empty(np.broadcast_shapes(a.shape, b.shape), dtype=np.result_type(a, b))
        out[VAL] = a[VAL] * b[VAL]
        out[DU] = a[DU] * b[VAL] + a[VAL] * b[DU]
        out[DV] = a[DV] * b[VAL] + a[VAL] * b[DV]
        out[DUU] = a[DUU] * b[VAL] + 2.0 * a[DU] * b[DU] + a[VAL] * b[DUU]
        out[DUV] = (a[DUV] * b[VAL] + a[DU] * b[DV] + a[DV] * b[DU]
                    + a[VAL] * b[DUV])
        out[DVV] = a[DVV] * b[VAL] + 2.0 * a[DV] * b[DV] + a[VAL] * b[DVV]
        return Jet2(out)

    __rmul__ = __mul__

    def reciprocal(self):
        x = self.val
        if np.any(x == 0):
            raise DomainError("division by a jet with zero value")
        inv = 1.0 / x
        return self.chain(inv, -inv * inv, 2.0 * inv * inv * inv)

    def __truediv__(self, other):
        if isinstance(other, Jet2):
            return self * other.reciprocal()
        if np.any(np.asarray(other) == 0):
            raise DomainError("division by zero")
        a, b = _pair(self, other)
        return Jet2(a / b[VAL])

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, k):
        return jpow(self, k)


def _storage(x):
    if isinstance(x, Jet2):
        return x.c
    x = np.asarray(x)
    c = np.zeros((6,) + x.shape, dtype=np.result_type(x, float))
    c[VAL] = x
    return c


def _pair(x, y):
    """Storage arrays of two operands, padded so point axes broadcast."""
    a, b = _storage(x), _storage(y)
    nd = max(a.ndim, b.ndim)
    a = a.reshape((6,) + (1,) * (nd - a.ndim) + a.shape[1:])
    b = b.reshape((6,) + (1,) * (nd - b.ndim) + b.shape[1:])
    return a, b


def _is_jet(x):
    return isinstance(x, Jet2)


def jpow(x, k):
    """Integer or half-integer power."""
    if float(2 * k) != round(2 * k):
        raise ValueError(f"exponent {k} is not an integer or half-integer")
    is_int = float(k) == round(k)
    if not _is_jet(x):
        x = np.asarray(x)
        if (not is_int and np.any(np.real(x) <= 0)) or (k < 0 and np.any(x == 0)):
            raise DomainError(f"power {k} outside its real domain")
        return x ** k
    val = x.val
    if not is_int and np.any(np.real(val) <= 0):
        raise DomainError(f"half-integer power {k} of a non-positive jet")
    if k < 0 and np.any(val == 0):
        raise DomainError(f"negative power {k} of a zero jet")
    if is_int and k >= 0:
        k = int(k)
        if k == 0:
            return Jet2.constant(np.ones_like(val))
        f1 = k * val ** (k - 1)
        f2 = k * (k - 1) * val ** (k - 2) if k >= 2 else np.zeros_like(val)
        return x.chain(val ** k, f1, f2)
    return x.chain(val ** k, k * val ** (k - 1), k * (k - 1) * val ** (k - 2))


def sin(x):
    if not _is_jet(x):
        return np.sin(x)
    s, c = np.sin(x.val), np.cos(x.val)
    return x.chain(s, c, -s)


def cos(x):
    if not _is_jet(x):
        return np.cos(x)
    s, c = np.sin(x.val), np.cos(x.val)
    return x.chain(c, -s, -c)


def sinh(x):
    if not _is_jet(x):
        return np.sinh(x)
    s, c = np.sinh(x.val), np.cosh(x.val)
    return x.chain(s, c, s)


def cosh(x):
    if not _is_jet(x):
        return np.cosh(x)
    s, c = np.sinh(x.val), np.cosh(x.val)
    return x.chain(c, s, c)


def exp(x):
    if not _is_jet(x):
        return np.exp(x)
    e = np.exp(x.val)
    return x.chain(e, e, e)


def sqrt(x):
    if not _is_jet(x):
        if np.any(np.real(x) <= 0):
            raise DomainError("sqrt of a non-positive value")
        return np.sqrt(x)
    return jpow(x, 0.5)


def _pole_check(val, offset, name):
    d = np.abs(np.remainder(np.real(val) - offset + np.pi / 2, np.pi) - np.pi / 2)
    if np.any(d < POLE_GUARD):
        raise DomainError(f"{name} evaluated within {POLE_GUARD:g} of a pole")


def tan(x):
    val = x.val if _is_jet(x) else x
    _pole_check(val, np.pi / 2, "tan")
    t = np.tan(val)
    if not _is_jet(x):
        return t
    sec2 = 1.0 + t * t
    return x.chain(t, sec2, 2.0 * t * sec2)


def cot(x):
    val = x.val if _is_jet(x) else x
    _pole_check(val, 0.0, "cot")
    ct = 1.0 / np.tan(val)
    if not _is_jet(x):
        return ct
    csc2 = 1.0 + ct * ct
    return x.chain(ct, -csc2, 2.0 * ct * csc2)


ELEMENTARY = {
    "sin": sin, "cos": cos, "sinh": sinh, "cosh": cosh, "tan": tan,
    "cot": cot, "exp": exp, "sqrt": sqrt,
}


def value_of(x):
    return x.val if _is_jet(x) else np.asarray(x)


@dataclass(frozen=True)
class VecJet2:
    """Jet of a map into 3-space; ``c`` has shape (6, *points, 3)."""

    c: np.ndarray

    @classmethod
    def from_components(cls, x1, x2, x3):
        parts = [x if _is_jet(x) else Jet2.constant(x) for x in (x1, x2, x3)]
        shape = np.broadcast_shapes(*(p.c.shape for p in parts))
        return cls(np.stack([np.broadcast_to(p.c, shape) for p in parts], axis=-1))

    @classmethod
    def from_parts(cls, X, Xu, Xv, Xuu, Xuv, Xvv):
        return cls(np.stack(np.broadcast_arrays(X, Xu, Xv, Xuu, Xuv, Xvv)))

    X = property(lambda self: self.c[VAL])
    Xu = property(lambda self: self.c[DU])
    Xv = property(lambda self: self.c[DV])
    Xuu = property(lambda self: self.c[DUU])
    Xuv = property(lambda self: self.c[DUV])
    Xvv = property(lambda self: self.c[DVV])

    @property
    def shape(self):
        return self.c.shape[1:-1]

    def component(self, i):
        return Jet2(self.c[..., i])

    def parts(self):
        return tuple(self.c[k] for k in range(6))

    def transformed(self, L, shift=None):
        """Apply x -> L x + shift to the map (derivatives ignore the shift)."""
        c = np.einsum("ij,k...j->k...i", L, self.c)
        if shift is not None:
            c[VAL] += shift
        return VecJet2(c)

    def scaled(self, rho):
        return VecJet2(rho * self.c)

    def swapped(self):
        """Jet of (s, t) -> X(t, s)."""
        return VecJet2(self.c[[VAL, DV, DU, DVV, DUV, DUU]])
