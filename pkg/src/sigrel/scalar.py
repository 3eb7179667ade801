"""Quantities of the coordinate field, with an exact and an approximate backend.

The exact backend stores :class:`fractions.Fraction` values and refuses square
roots that leave the rationals.  The approximate backend stores binary64 floats
and compares them with a mixed relative/absolute tolerance::

    |a - b| <= eps * max(1, |a|, |b|)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational, Real
from typing import Union

from .errors import BackendMismatch, DomainError, NonConstructibleExact

DEFAULT_EPS = 1e-12

Number = Union[int, float, Fraction, str]


@dataclass(frozen=True)
class Backend:
    name: str
    eps: float = 0.0
    exact: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.name not in ("exact", "approx"):
            raise ValueError(f"unknown backend {self.name!r}")
        if self.name == "approx" and not self.eps > 0:
            raise ValueError("approximate backend needs eps > 0")
        object.__setattr__(self, "exact", self.name == "exact")

    def __call__(self, value) -> "Scalar":
        return Scalar.of(value, self)

    def zero(self) -> "Scalar":
        return Scalar.of(0, self)

    def one(self) -> "Scalar":
        return Scalar.of(1, self)

    def to_json(self) -> dict:
        return {"name": self.name, "eps": self.eps}


EXACT = Backend("exact")


def approx_backend(eps: float = DEFAULT_EPS) -> Backend:
    return Backend("approx", eps)


APPROX = approx_backend()


def backend_named(name: str, eps: float = DEFAULT_EPS) -> Backend:
    return EXACT if name == "exact" else approx_backend(eps)


def _coerce(value, backend: Backend):
    if isinstance(value, Scalar):
        if value.backend != backend:
            raise BackendMismatch(f"cannot mix {value.backend.name} and {backend.name} scalars")
        return value.value
    if backend.exact:
        if isinstance(value, float):
            # floats enter the exact backend only when they are dyadic literals
            return Fraction(value)
        if isinstance(value, (int, Rational, str)):
            return Fraction(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to an exact scalar")
    if isinstance(value, str):
        return float(Fraction(value)) if "/" in value else float(value)
    if isinstance(value, Real):
        return float(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to an approximate scalar")


class Scalar:
    """An immutable element of the quantity field."""

    __slots__ = ("value", "backend")

    def __init__(self, value, backend: Backend = EXACT):
        object.__setattr__(self, "value", _coerce(value, backend))
        object.__setattr__(self, "backend", backend)

    @classmethod
    def of(cls, value, backend: Backend = EXACT) -> "Scalar":
        if isinstance(value, Scalar) and value.backend == backend:
            return value
        return cls(value, backend)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _wrap(self, value) -> "Scalar":
        s = _new(Scalar)
        _set_value(s, value)
        _set_backend(s, self.backend)
        return s

    def _other(self, other):
        if type(other) is Scalar:
            if other.backend is not self.backend and other.backend != self.backend:
                raise BackendMismatch(
                    f"cannot mix {self.backend.name} and {other.backend.name} scalars"
                )
            return other.value
        if isinstance(other, (int, float, Fraction)):
            return _coerce(other, self.backend)
        return NotImplemented

    # arithmetic

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if o == 0 or (not self.backend.exact and abs(o) <= self.backend.eps):
            raise ZeroDivisionError("division by zero scalar")
        return self._wrap(self.value / o)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if self.value == 0:
            raise ZeroDivisionError("division by zero scalar")
        return self._wrap(o / self.value)

    def __neg__(self):
        return self._wrap(-self.value)

    def __pos__(self):
        return self

    def __abs__(self):
        return self._wrap(abs(self.value))

    def sqrt(self) -> "Scalar":
        return sqrt(self)

    # order

    def cmp(self, other) -> int:
        o = self._other(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare Scalar with {type(other).__name__}")
        a = self.value
        if self.backend.exact:
            return (a > o) - (a < o)
        if abs(a - o) <= self.backend.eps * max(1.0, abs(a), abs(o)):
            return 0
        return 1 if a > o else -1

    def __eq__(self, other):
        if not isinstance(other, (Scalar, int, float, Fraction)):
            return NotImplemented
        return self.cmp(other) == 0

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    def __hash__(self):
        if not self.backend.exact:
            raise TypeError("approximate scalars are unhashable (equality is tolerance based)")
        return hash(self.value)

    def __bool__(self):
        return self.cmp(0) != 0


    def sign(self) -> int:
        return self.cmp(0)

    def is_zero(self) -> bool:
        return self.cmp(0) == 0

    def __float__(self):
        return float(self.value)

    # serialization

    def to_json(self) -> str:
        if self.backend.exact:
            f = self.value
            return f"{f.numerator}/{f.denominator}"
        return repr(float(self.value))

    @classmethod
    def from_json(cls, text: str, backend: Backend) -> "Scalar":
        return cls(text, backend)

    def __repr__(self):
        if self.backend.exact:
            return f"Scalar({str(self.value)!r})"
        return f"Scalar({self.value!r}, approx)"

    def __str__(self):
        return str(self.value)



_new = object.__new__
_set_value = Scalar.value.__set__  # type: ignore[attr-defined]
_set_backend = Scalar.backend.__set__  # type: ignore[attr-defined]

def sqrt(a: Scalar) -> Scalar:
    """Square root; raises :class:`NonConstructibleExact` when the exact root is irrational."""
    sgn = a.sign()
    if sgn < 0:
        raise DomainError(f"square root of negative quantity {a}")
    if sgn == 0:
        return a._wrap(a.value * 0)
    if a.backend.exact:
        f: Fraction = a.value
        n, d = f.numerator, f.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn != n or rd * rd != d:
            raise NonConstructibleExact(f"sqrt({f}) is not rational")
        return a._wrap(Fraction(rn, rd))
    return a._wrap(math.sqrt(a.value))


def field_ops(op: str, a: Scalar, b: Scalar) -> Scalar:
    """Dispatch one of ``add``, ``sub``, ``mul``, ``div``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def cmp(a: Scalar, b: Scalar) -> int:
    return a.cmp(b)
