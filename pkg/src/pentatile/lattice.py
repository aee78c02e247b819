"""Pentagrid coordinates for the A4 lattice and its Coxeter-plane images.

A point of the 4D span is written ``sum(c[i] * k[i])`` over the five vectors
``k1..k5`` of a regular 4-simplex, which satisfy ``k1 + ... + k5 = 0``.  The
representation is therefore unique only modulo the all-ones tuple; ``Coord5``
always stores the representative whose smallest component is zero.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .golden import SIGMA, TAU, GoldenNumber

__all__ = [
    "Coord5",
    "canonical",
    "k",
    "K",
    "ORIGIN",
    "inner4",
    "plane_norm2",
    "plane_norm2_perp",
    "plane_inner",
    "embed",
    "embed4",
    "tau_scale_par",
    "cross_par",
    "cross_tau",
    "tau_sign",
    "in_root_lattice",
    "in_weight_lattice",
    "SQRT_2_5",
]

SQRT_2_5 = math.sqrt(2.0 / 5.0)

_COS = [math.cos(2 * math.pi * j / 5) for j in range(5)]
_SIN = [math.sin(2 * math.pi * j / 5) for j in range(5)]


def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        raise TypeError("Coord5 components must be exact (int or Fraction)")
    return _num(Fraction(x))


class Coord5:
    """Exact point ``sum(c_i k_i)`` held in canonical form (minimum component 0)."""

    __slots__ = ("c", "_hash")

    def __init__(self, values: Iterable) -> None:
        vals = [_num(v) for v in values]
        if len(vals) != 5:
            raise ValueError(f"Coord5 needs 5 components, got {len(vals)}")
        m = min(vals)
        if m != 0:
            vals = [_num(v - m) for v in vals]
        object.__setattr__(self, "c", tuple(vals))
        object.__setattr__(self, "_hash", hash(self.c))

    def __setattr__(self, name, value):
        raise AttributeError("Coord5 is immutable")

    def __repr__(self) -> str:
        return "Coord5(" + ", ".join(str(x) for x in self.c) + ")"

    def __iter__(self):
        return iter(self.c)

    def __getitem__(self, i: int):
        return self.c[i]

    def __len__(self) -> int:
        return 5

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Coord5):
            return self.c == other.c
        return NotImplemented

    def __lt__(self, other: Coord5) -> bool:
        return self.c < other.c

    def __le__(self, other: Coord5) -> bool:
        return self.c <= other.c

    def __gt__(self, other: Coord5) -> bool:
        return self.c > other.c

    def __ge__(self, other: Coord5) -> bool:
        return self.c >= other.c

    def __add__(self, other: Coord5) -> Coord5:
        if not isinstance(other, Coord5):
            return NotImplemented
        return Coord5(a + b for a, b in zip(self.c, other.c))

    def __sub__(self, other: Coord5) -> Coord5:
        if not isinstance(other, Coord5):
            return NotImplemented
        return Coord5(a - b for a, b in zip(self.c, other.c))

    def __neg__(self) -> Coord5:
        return Coord5(-a for a in self.c)

    def __mul__(self, s) -> Coord5:
        if not isinstance(s, (int, Fraction)):
            return NotImplemented
        return Coord5(s * a for a in self.c)

    __rmul__ = __mul__

    def __truediv__(self, s) -> Coord5:
        if not isinstance(s, (int, Fraction)):
            return NotImplemented
        return Coord5(Fraction(a) / s for a in self.c)

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_integral(self) -> bool:
        return all(isinstance(a, int) for a in self.c)

    def as_strings(self) -> list[str]:
        return [str(a) for a in self.c]


def canonical(raw: Sequence) -> Coord5:
    return Coord5(raw)


def k(i: int) -> Coord5:
    """The simplex vector ``k_i`` for ``i`` in 1..5."""
    if not 1 <= i <= 5:
        raise ValueError(f"k index must be in 1..5, got {i}")
    v = [0] * 5
    v[i - 1] = 1
    return Coord5(v)


K = {i: k(i) for i in range(1, 6)}
ORIGIN = Coord5((0, 0, 0, 0, 0))


def inner4(v: Coord5, w: Coord5) -> Fraction:
    sv = sum(v.c)
    sw = sum(w.c)
    return Fraction(sum(a * b for a, b in zip(v.c, w.c))) - Fraction(sv * sw, 5)


def in_root_lattice(v: Coord5) -> bool:
    return v.is_integral() and sum(v.c) % 5 == 0


def in_weight_lattice(v: Coord5) -> bool:
    return v.is_integral()


def _cyclic_sums(u: Sequence, v: Sequence) -> list:
    # d-th entry: sum_i u_i v_{i+d}, indices mod 5
    return [sum(u[i] * v[(i + d) % 5] for i in range(5)) for d in range(5)]


def plane_inner(u: Coord5, v: Coord5) -> GoldenNumber:
    """Exact inner product of the Coxeter-plane images of ``u`` and ``v``."""
    s = _cyclic_sums(u.c, v.c)
    # cos 72 = -sigma/2, cos 144 = -tau/2
    return (GoldenNumber(s[0]) - SIGMA * Fraction(s[1] + s[4], 2)
            - TAU * Fraction(s[2] + s[3], 2)) * Fraction(2, 5)


def plane_norm2(v: Coord5) -> GoldenNumber:
    return plane_inner(v, v)


def plane_norm2_perp(v: Coord5) -> GoldenNumber:
    s = _cyclic_sums(v.c, v.c)
    return (GoldenNumber(s[0]) - TAU * Fraction(s[1] + s[4], 2)
            - SIGMA * Fraction(s[2] + s[3], 2)) * Fraction(2, 5)


def embed(v: Coord5, which: str = "parallel") -> tuple[float, float]:
    """Numeric image of ``v`` in the Coxeter plane or its orthogonal complement."""
    if which in ("parallel", "par"):
        m = 1
    elif which in ("perpendicular", "perp"):
        m = 2
    else:
        raise ValueError(f"unknown subspace {which!r}")
    x = y = 0.0
    for j, cj in enumerate(v.c, start=1):
        if cj:
            f = float(cj)
            x += f * _COS[(j * m) % 5]
            y += f * _SIN[(j * m) % 5]
    return (SQRT_2_5 * x, SQRT_2_5 * y)


def embed4(v: Coord5) -> tuple[float, float, float, float]:
    """Orthonormal 4D coordinates: parallel (x, y) followed by perpendicular (z, w)."""
    return embed(v, "parallel") + embed(v, "perpendicular")


def tau_scale_par(v: Coord5) -> Coord5:
    """Lattice vector whose plane image is tau times the plane image of ``v``.

    Uses ``tau * z**j = -(z**(j+2) + z**(j+3))`` for a primitive fifth root
    of unity ``z``.
    """
    c = v.c
    return Coord5(-(c[(m - 2) % 5] + c[(m - 3) % 5]) for m in range(5))


def cross_tau(u: Sequence, v: Sequence) -> tuple:
    """Plane cross product of raw 5-tuples as ``(p, q)`` meaning ``p + q*tau``.

    Same units as :func:`cross_par`; avoids building GoldenNumber objects in
    inner loops.
    """
    u0, u1, u2, u3, u4 = u
    v0, v1, v2, v3, v4 = v
    # sin(72 j) / sin 36 for j = 1..4 is tau, 1, -1, -tau
    d1 = u0 * v1 + u1 * v2 + u2 * v3 + u3 * v4 + u4 * v0
    d2 = u0 * v2 + u1 * v3 + u2 * v4 + u3 * v0 + u4 * v1
    d3 = u0 * v3 + u1 * v4 + u2 * v0 + u3 * v1 + u4 * v2
    d4 = u0 * v4 + u1 * v0 + u2 * v1 + u3 * v2 + u4 * v3
    return (d2 - d3, d1 - d4)


def tau_sign(p, q) -> int:
    """Exact sign of ``p + q*tau``."""
    # 2(p + q tau) = (2p + q) + q sqrt5
    a = 2 * p + q
    sa = (a > 0) - (a < 0)
    sb = (q > 0) - (q < 0)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    return sa if a * a > 5 * q * q else sb


def tau_to_golden(p, q) -> GoldenNumber:
    half = Fraction(q) / 2
    return GoldenNumber(p + half, half)


def cross_par(u: Coord5, v: Coord5) -> GoldenNumber:
    """Signed cross product of plane images, in units of ``(2/5) sin 36``."""
    return tau_to_golden(*cross_tau(u.c, v.c))


def permute_positions(v: Coord5, perm: Sequence[int]) -> Coord5:
    """Send ``k_i`` to ``k_perm[i]`` (0-based positions)."""
    out = [0] * 5
    for i, ci in enumerate(v.c):
        out[perm[i]] = ci
    return Coord5(out)


class RootSystemData:
    """Simple roots, weights, Cartan matrix and the Coxeter-plane frame of A4."""

    def __init__(self) -> None:
        self.alpha = {i: K[i] - K[i + 1] for i in range(1, 5)}
        self.alpha[0] = K[5] - K[1]
        self.omega = {
            1: K[1],
            2: K[1] + K[2],
            3: -(K[4] + K[5]),
            4: -K[5],
        }
        self.cartan = [[inner4(self.alpha[i], self.alpha[j]) for j in range(1, 5)]
                       for i in range(1, 5)]

        # S = r4 r3 conjugates the Coxeter element into the cyclic one.
        r3 = (0, 1, 3, 2, 4)
        r4 = (0, 1, 2, 4, 3)
        s_perm = tuple(r4[r3[i]] for i in range(5))
        self.conjugator = s_perm
        self.alpha_prime = {i: permute_positions(self.alpha[i], s_perm) for i in range(1, 5)}

        t, s = float(TAU), float(SIGMA)
        ap = {i: embed4(self.alpha_prime[i]) for i in range(1, 5)}

        def lin(c1, v1, c2, v2, scale):
            return tuple(scale * (c1 * a + c2 * b) for a, b in zip(v1, v2))

        self.beta1 = lin(1.0, ap[1], t, ap[3], 1 / math.sqrt(2 + t))
        self.beta2 = lin(t, ap[2], 1.0, ap[4], 1 / math.sqrt(2 + t))
        self.gamma1 = lin(1.0, ap[1], s, ap[3], -1 / math.sqrt(2 + s))
        self.gamma2 = lin(s, ap[2], 1.0, ap[4], -1 / math.sqrt(2 + s))
        self.xhat = lin(1.0, self.beta1, -1.0, self.beta2, 1 / math.sqrt(2 * (2 + t)))
        self.yhat = lin(1.0, self.beta1, 1.0, self.beta2, t / math.sqrt(2))
        self.zhat = lin(1.0, self.gamma1, -1.0, self.gamma2, 1 / math.sqrt(2 * (2 + s)))
        self.what = lin(1.0, self.gamma1, 1.0, self.gamma2, s / math.sqrt(2))


ROOTS = RootSystemData()
