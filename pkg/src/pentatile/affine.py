"""Affine A4 and its affine H2 subgroup acting on pentagrid coordinates.

An element is stored exactly as ``(eps, perm, t)`` and acts by
``v -> eps * perm(v) + t`` where ``perm`` sends ``k_i`` to ``k_perm(i)``.
``eps = -1`` is the diagram flip that extends H2 to H2:Z2.  Matrices are
numeric exports of this action and never feed back into it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .lattice import (
    K,
    ORIGIN,
    Coord5,
    embed,
    embed4,
    in_root_lattice,
    in_weight_lattice,
    inner4,
    permute_positions,
)

IDENTITY_PERM = (0, 1, 2, 3, 4)
# 5-cycle k1 -> k2 -> ... -> k5 -> k1 (0-based positions)
ROTATION_PERM = (1, 2, 3, 4, 0)
# (14)(23): the mirror through the origin, k5 and k2 + k3
MIRROR_PERM = (3, 2, 1, 0, 4)


class NotARoot(ValueError):
    pass


class NotFivefoldCenter(ValueError):
    pass


class NotPlaneCompatible(ValueError):
    pass


def perm_compose(p: tuple, q: tuple) -> tuple:
    """``p o q``: apply ``q`` first."""
    return tuple(p[q[i]] for i in range(5))


def perm_inverse(p: tuple) -> tuple:
    inv = [0] * 5
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_power(p: tuple, m: int) -> tuple:
    out = IDENTITY_PERM
    for _ in range(m):
        out = perm_compose(p, out)
    return out


@dataclass(frozen=True)
class AffineElement:
    eps: int
    perm: tuple
    t: Coord5

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        if sorted(self.perm) != list(range(5)):
            raise ValueError(f"not a permutation of 0..4: {self.perm}")

    def linear(self, v: Coord5) -> Coord5:
        w = permute_positions(v, self.perm)
        return -w if self.eps < 0 else w

    def __call__(self, v: Coord5) -> Coord5:
        return self.linear(v) + self.t

    def __matmul__(self, other: AffineElement) -> AffineElement:
        return compose(self, other)

    @cached_property
    def plane_form(self) -> tuple[int, int] | None:
        """``(s, c)`` with ``perm(j) = s*j + c (mod 5)``, or None if the plane is not preserved."""
        for s in (1, -1):
            c = (self.perm[4] + 1 - s * 5) % 5
            if all((self.perm[i] + 1) % 5 == (s * (i + 1) + c) % 5 for i in range(5)):
                return (s, c)
        return None

    def is_plane_compatible(self) -> bool:
        return self.plane_form is not None

    def is_identity(self) -> bool:
        return self.eps == 1 and self.perm == IDENTITY_PERM and self.t.is_zero()

    def describe(self) -> str:
        cyc = _cycles(self.perm)
        sign = "-" if self.eps < 0 else ""
        return f"({sign}{cyc}, t={list(self.t.c)})"


def _cycles(p: tuple) -> str:
    seen = set()
    parts = []
    for i in range(5):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        parts.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) or "1"


IDENTITY = AffineElement(1, IDENTITY_PERM, ORIGIN)


def apply(e: AffineElement, v: Coord5) -> Coord5:
    return e(v)


def compose(e1: AffineElement, e2: AffineElement) -> AffineElement:
    """``e1 o e2`` (``e2`` acts first)."""
    return AffineElement(e1.eps * e2.eps, perm_compose(e1.perm, e2.perm), e1.linear(e2.t) + e1.t)


def inverse(e: AffineElement) -> AffineElement:
    pinv = perm_inverse(e.perm)
    lin = AffineElement(e.eps, pinv, ORIGIN)
    return AffineElement(e.eps, pinv, -lin.linear(e.t))


def translation(v: Coord5) -> AffineElement:
    return AffineElement(1, IDENTITY_PERM, v)


def root_indices(root: Coord5) -> tuple[int, int]:
    """``(i, j)`` (1-based) with ``root == k_i - k_j``; raises NotARoot otherwise."""
    c = root.c
    if sorted(c) == [0, 1, 1, 1, 2]:
        return c.index(2) + 1, c.index(0) + 1
    raise NotARoot(f"{root!r} is not of the form k_i - k_j")


def reflection(root: Coord5, n: int = 0) -> AffineElement:
    """Affine reflection in the hyperplane ``(x, root) = n``."""
    i, j = root_indices(root)
    p = list(IDENTITY_PERM)
    p[i - 1], p[j - 1] = j - 1, i - 1
    return AffineElement(1, tuple(p), root * n)


def reflection_formula(root: Coord5, n, lam: Coord5) -> Coord5:
    """Direct evaluation of ``lam - ((lam, root) - n) root``."""
    return lam - root * (inner4(lam, root) - n)


# Simple roots used for the H2 generators (pairs (1,3) and (2,4) commute).
SHIFT_ROOTS = {
    1: K[1] - K[2],
    2: K[2] - K[5],
    3: K[5] - K[3],
    4: K[3] - K[4],
}


def h2_generators(n1: int, n2: int, n3: int, n4: int) -> tuple[AffineElement, AffineElement]:
    a = SHIFT_ROOTS
    r1 = compose(reflection(a[1], n1), reflection(a[3], n3))
    r2 = compose(reflection(a[2], n2), reflection(a[4], n4))
    return r1, r2


def coxeter(n1: int, n2: int, n3: int, n4: int) -> AffineElement:
    r1, r2 = h2_generators(n1, n2, n3, n4)
    return compose(r1, r2)


def coxeter_formula(n: tuple, lam: Coord5) -> Coord5:
    """Expanded action of ``coxeter(*n)`` written out term by term."""
    n1, n2, n3, n4 = n
    a1, a2, a3, a4 = (SHIFT_ROOTS[i] for i in range(1, 5))
    out = lam
    out = out - a1 * inner4(lam, a1 + a2)
    out = out - a2 * inner4(lam, a2)
    out = out - a3 * inner4(lam, a2 + a3 + a4)
    out = out - a4 * inner4(lam, a4)
    return out + a1 * (n1 + n2) + a2 * n2 + a3 * (n2 + n3 + n4) + a4 * n4


def fixed_point(n1: int, n2: int, n3: int, n4: int) -> Coord5:
    """Common fixed point of the four affine generators with shifts ``n1..n4``."""
    return Coord5(((n1 + n2), n2, -n3, -(n3 + n4), 0))


def power(e: AffineElement, m: int) -> AffineElement:
    out = IDENTITY
    for _ in range(m):
        out = compose(e, out)
    return out


def rotation_center(e: AffineElement) -> Coord5:
    """Fixed point of an affine map whose linear part has order 5 and no fixed vector."""
    acc = [Fraction(0)] * 5
    x = ORIGIN
    for _ in range(5):
        acc = [a + b for a, b in zip(acc, x.c)]
        x = e(x)
    if x != ORIGIN:
        raise ValueError("element does not have order 5")
    return Coord5(a / 5 for a in acc)


def _solve_fixing(p: Coord5, eps: int, perm: tuple) -> AffineElement:
    lin = AffineElement(eps, perm, ORIGIN)
    return AffineElement(eps, perm, p - lin.linear(p))


def stabilizer_of(p: Coord5) -> list[AffineElement]:
    """The ten elements of affine H2 fixing ``p``: five rotations, then five reflections.

    Translations are solved from ``t = p - g(p)``; a point is a five-fold
    center when these land in the root lattice.
    """
    out = []
    for m in range(5):
        g = perm_power(ROTATION_PERM, m)
        e = _solve_fixing(p, 1, g)
        if not in_root_lattice(e.t):
            raise NotFivefoldCenter(f"{p!r}: translation {e.t!r} is not a root-lattice vector")
        out.append(e)
    for m in range(5):
        g = perm_compose(perm_power(ROTATION_PERM, m), MIRROR_PERM)
        out.append(_solve_fixing(p, 1, g))
    return out


def extend_order20(stab: list[AffineElement]) -> list[AffineElement]:
    """Adjoin the diagram-flipped elements fixing the same center (order 20)."""
    if len(stab) != 10:
        raise NotFivefoldCenter("expected an order-10 stabilizer")
    rot = next((e for e in stab if e.perm == ROTATION_PERM and e.eps == 1), None)
    if rot is None:
        raise NotFivefoldCenter("stabilizer has no order-5 rotation")
    p = rotation_center(rot)
    for e in stab:
        if e(p) != p:
            raise NotFivefoldCenter(f"{e.describe()} does not fix {p!r}")
    flipped = []
    for e in stab:
        f = _solve_fixing(p, -e.eps, e.perm)
        if not in_weight_lattice(f.t):
            raise NotFivefoldCenter(f"{p!r}: flipped translation {f.t!r} is not a lattice vector")
        flipped.append(f)
    return list(stab) + flipped


def translation_h2(m1: int, m2: int) -> AffineElement:
    base = compose(reflection(K[1] - K[4], 0), reflection(K[2] - K[3], 0))
    shifted = compose(reflection(K[1] - K[4], m1), reflection(K[2] - K[3], m2))
    return compose(shifted, base)


def decompose_reflection_pair(e: AffineElement) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """Write ``e`` as ``r_{k_i-k_j, n} r_{k_k-k_l, m}`` for two commuting root reflections.

    Returns ``((i, j, n), (k, l, m))`` with ``i < j`` and ``k < l``, pairs
    sorted.  ``e`` must be a product of two disjoint transpositions.
    """
    if e.eps != 1:
        raise ValueError("not a product of reflections")
    moved = [i for i in range(5) if e.perm[i] != i]
    pairs = sorted({tuple(sorted((i, e.perm[i]))) for i in moved})
    if len(pairs) != 2 or any(e.perm[b] != a for a, b in pairs):
        raise ValueError(f"{e.describe()} is not a pair of commuting reflections")
    (i, j), (kk, ll) = pairs
    fixed = next(x for x in range(5) if e.perm[x] == x)
    c = e.t.c
    base = c[fixed]
    n = c[i] - base
    m = c[kk] - base
    root1 = K[i + 1] - K[j + 1]
    root2 = K[kk + 1] - K[ll + 1]
    if root1 * n + root2 * m != e.t:
        raise ValueError("translation is not a combination of the two roots")
    return (i + 1, j + 1, n), (kk + 1, ll + 1, m)


# ----------------------------------------------------------------------
# numeric exports


def _rot(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def plane_matrix(e: AffineElement) -> np.ndarray:
    """Homogeneous 3x3 matrix of ``e`` acting on the Coxeter plane."""
    form = e.plane_form
    if form is None:
        raise NotPlaneCompatible(f"{e.describe()} does not preserve the Coxeter plane")
    s, c = form
    lin = _rot(2 * math.pi * c / 5) @ np.diag([1.0, float(s)]) * e.eps
    m = np.eye(3)
    m[:2, :2] = lin
    m[:2, 2] = embed(e.t, "parallel")
    return m


_E4 = np.array([embed4(K[j]) for j in range(1, 6)]).T  # 4x5
_E4_PINV = np.linalg.pinv(_E4)


def full_matrix(e: AffineElement) -> np.ndarray:
    """Homogeneous 5x5 matrix of ``e`` in the orthonormal (par x, par y, perp x, perp y) frame."""
    images = np.array([embed4(permute_positions(K[j], e.perm)) for j in range(1, 6)]).T
    m = np.eye(5)
    m[:4, :4] = e.eps * (images @ _E4_PINV)
    m[:4, 4] = embed4(e.t)
    return m


def matrix_export(e: AffineElement) -> tuple[np.ndarray | None, np.ndarray]:
    plane = plane_matrix(e) if e.is_plane_compatible() else None
    return plane, full_matrix(e)


# ----------------------------------------------------------------------
# named elements

C1 = compose(reflection(K[1] - K[3], 0), reflection(K[5] - K[4], 1))
C2 = compose(reflection(K[1] - K[4], 0), reflection(K[2] - K[3], 0))
C3 = compose(reflection(K[2] - K[4], 1), reflection(K[1] - K[5], 0))
P = AffineElement(1, ROTATION_PERM, ORIGIN)
ETA = AffineElement(-1, MIRROR_PERM, ORIGIN)
CONJUGATOR_S = compose(reflection(K[4] - K[5], 0), reflection(K[3] - K[4], 0))
COXETER_CYCLIC = compose(
    compose(reflection(K[1] - K[2]), reflection(K[2] - K[3])),
    compose(reflection(K[3] - K[4]), reflection(K[4] - K[5])),
)


def named_elements() -> dict[str, AffineElement]:
    r1, r2 = h2_generators(0, 0, 0, 0)
    a = SHIFT_ROOTS
    return {
        "C1": C1,
        "C2": C2,
        "C3": C3,
        "P": P,
        "eta": ETA,
        "R1": r1,
        "R2": r2,
        "T": translation_h2(1, 0),
        "R10": compose(reflection(K[4] - K[1], 1), reflection(K[2] - K[3], 0)),
        "r1": reflection(a[1], 0),
        "r2": reflection(a[2], 0),
        "r3": reflection(a[3], 0),
        "r4": reflection(a[4], 0),
        "r0": reflection(K[4] - K[1], 1),
    }
