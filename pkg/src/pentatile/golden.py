"""Exact arithmetic in the quadratic field Q(sqrt 5)."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from typing import Union

Rational = Union[int, Fraction]

SQRT5 = math.sqrt(5.0)


def _q(x: Rational) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@total_ordering
class GoldenNumber:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a: Rational = 0, b: Rational = 0) -> None:
        object.__setattr__(self, "a", _q(a))
        object.__setattr__(self, "b", _q(b))

    def __setattr__(self, name, value):
        raise AttributeError("GoldenNumber is immutable")

    @classmethod
    def coerce(cls, x: GoldenNumber | Rational) -> GoldenNumber:
        if isinstance(x, GoldenNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to GoldenNumber")

    def __repr__(self) -> str:
        return f"GoldenNumber({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt5"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*sqrt5"

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GoldenNumber):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __lt__(self, other: GoldenNumber | Rational) -> bool:
        try:
            other = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).sign() < 0

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * SQRT5

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self.a, -self.b)

    def __pos__(self) -> GoldenNumber:
        return self

    def __abs__(self) -> GoldenNumber:
        return -self if self.sign() < 0 else self

    def __add__(self, other):
        if isinstance(other, GoldenNumber):
            return GoldenNumber(self.a + other.a, self.b + other.b)
        if isinstance(other, (int, Fraction)):
            return GoldenNumber(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GoldenNumber):
            return GoldenNumber(self.a - other.a, self.b - other.b)
        if isinstance(other, (int, Fraction)):
            return GoldenNumber(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GoldenNumber):
            return GoldenNumber(
                self.a * other.a + 5 * self.b * other.b,
                self.a * other.b + self.b * other.a,
            )
        if isinstance(other, (int, Fraction)):
            return GoldenNumber(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> GoldenNumber:
        """Galois conjugate ``a - b*sqrt(5)``."""
        return GoldenNumber(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm ``a**2 - 5*b**2``."""
        return self.a * self.a - 5 * self.b * self.b

    def inverse(self) -> GoldenNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        return GoldenNumber(self.a / n, -self.b / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(sqrt5)")
            return GoldenNumber(self.a / other, self.b / other)
        if isinstance(other, GoldenNumber):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return GoldenNumber.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> GoldenNumber:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(5)``.

        When ``a`` and ``b`` disagree in sign the answer follows from
        comparing ``a**2`` with ``5*b**2``.
        """
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        diff = self.a * self.a - 5 * self.b * self.b
        return sa if diff > 0 else sb


ZERO = GoldenNumber(0, 0)
ONE = GoldenNumber(1, 0)
TAU = GoldenNumber(Fraction(1, 2), Fraction(1, 2))
SIGMA = GoldenNumber(Fraction(1, 2), Fraction(-1, 2))
