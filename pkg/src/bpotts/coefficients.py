"""Exact arithmetic in the quadratic extension Q(sqrt(f)).

A value is stored as ``a + b*sqrt(f)`` with rational ``a`` and ``b``.  When
``f`` is a perfect square the radical part is folded into ``a`` so that
equality stays a plain comparison of the ``(a, b)`` pair.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Union[int, Fraction]


class RingMismatchError(ValueError):
    """Two scalars from different extensions Q(sqrt(f)) were combined."""


@lru_cache(maxsize=None)
def _square_root(f: int) -> int | None:
    r = math.isqrt(f)
    return r if r * r == f else None


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction."""
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ValueError(f"not a rational number: {text!r}")
    return Fraction(text)


class QfScalar:
    __slots__ = ("a", "b", "f")

    def __init__(self, a: Rational = 0, b: Rational = 0, f: int = 1) -> None:
        if not isinstance(f, int) or f < 1:
            raise ValueError(f"f must be a positive integer, got {f!r}")
        a = Fraction(a)
        b = Fraction(b)
        if b:
            r = _square_root(f)
            if r is not None:
                a += b * r
                b = Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "f", f)

    def __setattr__(self, name, value):
        raise AttributeError("QfScalar is immutable")

    @classmethod
    def sqrt(cls, f: int) -> QfScalar:
        return cls(0, 1, f)

    @classmethod
    def parse(cls, text: str, f: int) -> QfScalar:
        """Inverse of ``str``; also accepts a bare rational."""
        s = text.replace(" ", "")
        m = re.fullmatch(
            r"(?:([+-]?\d+(?:/\d+)?)(?=$|[+-]))?"
            r"(?:([+-]?)(\d+(?:/\d+)?)?\*?sqrt\((\d+)\))?",
            s,
        )
        if not s or m is None or m.group(0) != s:
            raise ValueError(f"cannot parse {text!r} as an element of Q(sqrt({f}))")
        a = Fraction(m.group(1)) if m.group(1) else Fraction(0)
        b = Fraction(0)
        if m.group(4) is not None:
            if int(m.group(4)) != f:
                raise RingMismatchError(f"sqrt({m.group(4)}) in a Q(sqrt({f})) value")
            b = Fraction(m.group(3)) if m.group(3) else Fraction(1)
            if m.group(2) == "-":
                b = -b
        return cls(a, b, f)

    def _coerce(self, other) -> QfScalar:
        if isinstance(other, QfScalar):
            if other.f != self.f:
                raise RingMismatchError(f"f={self.f} combined with f={other.f}")
            return other
        if isinstance(other, (int, Fraction)):
            return QfScalar(other, 0, self.f)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QfScalar(self.a + other.a, self.b + other.b, self.f)

    __radd__ = __add__

    def __neg__(self) -> QfScalar:
        return QfScalar(-self.a, -self.b, self.f)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QfScalar(self.a - other.a, self.b - other.b, self.f)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return QfScalar(a1 * a2 + b1 * b2 * self.f, a1 * b2 + a2 * b1, self.f)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.f

    def conjugate(self) -> QfScalar:
        return QfScalar(self.a, -self.b, self.f)

    def inverse(self) -> QfScalar:
        n = self.norm()
        if n == 0:
            # canonical form never has zero norm unless the value is zero
            raise ZeroDivisionError(f"{self} is not invertible")
        return QfScalar(self.a / n, -self.b / n, self.f)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int) -> QfScalar:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QfScalar(1, 0, self.f)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, QfScalar):
            return self.f == other.f and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.f))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.f)

    def __repr__(self) -> str:
        return f"QfScalar({self.a}, {self.b}, f={self.f})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        mag = abs(self.b)
        radical = f"sqrt({self.f})" if mag == 1 else f"{mag}*sqrt({self.f})"
        if not self.a:
            return radical if self.b > 0 else f"-{radical}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {radical}"


def qf_add(x: QfScalar, y: QfScalar) -> QfScalar:
    return x + y


def qf_mul(x: QfScalar, y: QfScalar) -> QfScalar:
    return x * y


def qf_inv(x: QfScalar) -> QfScalar:
    return x.inverse()


def qf_to_float(x: QfScalar) -> float:
    return float(x)
