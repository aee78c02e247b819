"""Published matrix forms of the named group elements, for numeric cross-checks.

Plane matrices are homogeneous 3x3; full matrices are homogeneous 5x5 in the
orthonormal (par x, par y, perp x, perp y) frame.  Entries are transcribed
as printed, so they are compared against exports, never used to act.
"""
from __future__ import annotations

import math

import numpy as np

t = (1 + math.sqrt(5)) / 2
s = (1 - math.sqrt(5)) / 2
a = math.sqrt(2 + t)
b = math.sqrt(2 + s)
r2 = math.sqrt(2)

PLANE = {
    "C1": 0.5 * np.array([
        [-s, -a, -s * r2],
        [-a, s, math.sqrt(2 / (2 + s))],
        [0, 0, 2],
    ]),
    "C2": np.diag([1.0, -1.0, 1.0]),
    # rotation about k5: the product C2 C1
    "C2C1": 0.5 * np.array([
        [-s, -a, -s * r2],
        [a, -s, -math.sqrt(2 / (2 + s))],
        [0, 0, 2],
    ]),
    "P": np.array([
        [-s / 2, -a / 2, 0],
        [a / 2, -s / 2, 0],
        [0, 0, 1],
    ]),
    "C3": 0.5 * np.array([
        [-s, a, -r2],
        [a, s, t * r2 / b],
        [0, 0, 2],
    ]),
    "eta": np.diag([-1.0, 1.0, 1.0]),
    "R1": np.array([
        [-t / 2, -b / 2, 0],
        [-b / 2, t / 2, 0],
        [0, 0, 1],
    ]),
    "R2": np.array([
        [-t / 2, b / 2, 0],
        [b / 2, t / 2, 0],
        [0, 0, 1],
    ]),
    "R10": np.array([
        [1, 0, 0],
        [0, -1, -math.sqrt(2 / (2 + s))],
        [0, 0, 1],
    ]),
}


def _gen(rows):
    return np.array(rows, dtype=float) / (2 * a)


FULL = {
    "r1": _gen([
        [a, s, a, -t**2, 0],
        [s, t**4 / a, -s, -t / a, 0],
        [a, -s, a, t**2, 0],
        [-t**2, -t / a, t**2, s**2 / a, 0],
        [0, 0, 0, 0, 2 * a],
    ]),
    "r2": _gen([
        [s * a, t, -a, -t**2, 0],
        [t, (2 * t + 3) / a, -s, t / a, 0],
        [-a, -s, a * t, -1, 0],
        [-t**2, t / a, -1, (t + 3) / a, 0],
        [0, 0, 0, 0, 2 * a],
    ]),
    "r3": _gen([
        [s * a, -t, -a, t**2, 0],
        [-t, (2 * t + 3) / a, s, t / a, 0],
        [-a, s, a * t, 1, 0],
        [t**2, t / a, 1, (t + 3) / a, 0],
        [0, 0, 0, 0, 2 * a],
    ]),
    "r4": _gen([
        [a, -s, a, t**2, 0],
        [-s, t**4 / a, s, -t / a, 0],
        [a, s, a, -t**2, 0],
        [t**2, -t / a, -t**2, s**2 / a, 0],
        [0, 0, 0, 0, 2 * a],
    ]),
    "r0": np.array([
        [1, 0, 0, 0, 0],
        [0, -t / a**2, 0, -2 * t / a**2, -t * r2 / a],
        [0, 0, 1, 0, 0],
        [0, -2 * t / a**2, 0, t / a**2, -r2 / a],
        [0, 0, 0, 0, 1],
    ]),
    "eta": np.diag([-1.0, 1.0, -1.0, 1.0, 1.0]),
    "R1": np.array([
        [-t / 2, -b / 2, 0, 0, 0],
        [-b / 2, t / 2, 0, 0, 0],
        [0, 0, -s / 2, a / 2, 0],
        [0, 0, a / 2, s / 2, 0],
        [0, 0, 0, 0, 1],
    ]),
    "R2": np.array([
        [-t / 2, b / 2, 0, 0, 0],
        [b / 2, t / 2, 0, 0, 0],
        [0, 0, -s / 2, -a / 2, 0],
        [0, 0, -a / 2, s / 2, 0],
        [0, 0, 0, 0, 1],
    ]),
    "R10": np.array([
        [1, 0, 0, 0, 0],
        [0, -1, 0, 0, -t * r2 / a],
        [0, 0, 1, 0, 0],
        [0, 0, 0, -1, -r2 / a],
        [0, 0, 0, 0, 1],
    ]),
}

# Printed index sums for products of the H2 generators: word -> two
# (root (i, j) meaning k_i - k_j, shift as a function of n1..n4).
REFLECTION_WORDS = {
    "R1R2R1": (((1, 3), lambda n: n[0] + n[1] + n[2]), ((5, 4), lambda n: n[2] + n[3])),
    "R2R1R2": (((2, 4), lambda n: n[1] + n[2] + n[3]), ((1, 5), lambda n: n[0] + n[1])),
    "R1R2R1R2R1": (((2, 3), lambda n: n[1] + n[2]), ((1, 4), lambda n: n[0] + n[1] + n[2] + n[3])),
}
