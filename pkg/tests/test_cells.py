from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import comb

import pytest

from pentatile.cells import (
    BadIndices,
    PermutoFace,
    all_rhombohedra,
    boundary_cycle,
    cell_summary,
    census_formula,
    partition_vertices,
    permutohedron_edges,
    permutohedron_faces,
    permutohedron_facets,
    permutohedron_vertices,
    radius_classes,
    rhombohedron,
    root_cell_summary,
    root_cell_vertices,
    root_polytope_vertices,
    simplex_count,
    thick_thin_angle,
)
from pentatile.golden import TAU, GoldenNumber
from pentatile.lattice import K, Coord5, canonical, inner4

EQ6 = {K[1], K[1] + K[2], K[1] + K[3], K[1] + K[4], -(K[2] + K[5]), -(K[3] + K[5]), -(K[4] + K[5]), -K[5]}
EQ21 = ["54321", "45321", "35421", "34521", "43521", "53421"]
EQ22 = ["52431", "42531", "32541", "32451", "42351", "52341"]


def _labels(tuples):
    return ["".join(map(str, t)) for t in tuples]


def test_root_cell_vertices():
    vs = root_cell_vertices()
    assert len(vs) == len(set(vs)) == 30
    assert -K[5] in vs and K[1] + K[2] + K[3] + K[4] in vs


def test_radius_classes():
    classes = radius_classes()
    two_fifths = Fraction(2, 5)
    assert {k: len(v) for k, v in classes.items()} == {
        GoldenNumber(two_fifths) * TAU ** -2: 10,
        GoldenNumber(two_fifths): 10,
        GoldenNumber(two_fifths) * TAU ** 2: 10,
    }


def test_rhombohedra():
    rs = all_rhombohedra()
    assert len(rs) == 20
    cell = set(root_cell_vertices())
    for r in rs:
        assert len(set(r.vertices)) == 8
        assert set(r.vertices) <= cell
        assert all(inner4(v, r.root) == 1 for v in r.vertices)
        mean = Coord5(sum(Fraction(v.c[i]) for v in r.vertices) / 8 for i in range(5))
        assert mean == r.root / 2 == r.center


def test_eq6_facet():
    assert set(rhombohedron(1, 5).vertices) == EQ6


def test_bad_indices():
    for i, j in ((1, 1), (0, 2), (3, 6)):
        with pytest.raises(BadIndices):
            rhombohedron(i, j)


def test_incidence_table():
    # brute force: facet membership is the hyperplane condition
    inc = Counter(v for r in all_rhombohedra() for v in r.vertices)
    assert set(inc) == set(root_cell_vertices())
    assert sorted(inc.values()) == [4] * 10 + [6] * 20
    assert all(inc[K[i]] == 4 and inc[-K[i]] == 4 for i in range(1, 6))
    assert all(inc[K[i] + K[j]] == 6 for i in range(1, 6) for j in range(i + 1, 6))


def test_root_cell_census():
    s = root_cell_summary()
    assert (s.n0, s.n1, s.n2, s.n3) == (30, 70, 60, 20)
    assert s.euler == 0
    assert simplex_count() == 120


def test_root_polytope_duality():
    roots = root_polytope_vertices()
    assert len(roots) == 20
    assert sorted(r.root for r in all_rhombohedra()) == roots


def test_thick_thin_angle():
    assert thick_thin_angle(1, 2) == "thick"
    assert thick_thin_angle(5, 1) == "thick"
    assert thick_thin_angle(1, 3) == "thin"


def test_permutohedron_vertices():
    vs = permutohedron_vertices()
    assert len(vs) == len({v.point for v in vs}) == 120
    assert canonical((5, 4, 3, 2, 1)) in {v.point for v in vs}
    ident = next(v for v in vs if v.assignment == (5, 4, 3, 2, 1))
    assert ident.point == Coord5((4, 3, 2, 1, 0))  # five times the barycentre of 0, w1..w4


def test_permutohedron_census():
    s = cell_summary()
    assert (s.n0, s.n1, s.n2, s.n3) == (120, 240, 150, 30)
    assert s.euler == 0
    assert s.sub == {
        "faces.hexagon": 60,
        "faces.square": 90,
        "facets.truncated_octahedron": 10,
        "facets.hexagonal_prism": 20,
    }
    assert [census_formula(d) for d in range(5)] == [120, 240, 150, 30, 1]
    # independent count of ordered partitions: hexagon faces choose the 3-block and order 3 blocks
    assert comb(5, 3) * 6 == 60
    assert comb(5, 2) * comb(3, 2) * 3 == 90


def test_face_kinds_and_boundaries():
    for f in permutohedron_faces():
        b = f.boundary
        assert len(b) == (6 if f.kind == "hexagon" else 4)
        for u, v in zip(b, b[1:] + b[:1]):
            diff = [i for i in range(5) if u[i] != v[i]]
            assert len(diff) == 2 and abs(u[diff[0]] - u[diff[1]]) == 1


def test_edges_are_root_steps():
    for e in permutohedron_edges():
        verts = partition_vertices(e)
        assert len(verts) == 2
        d = Coord5(a - b for a, b in zip(*verts))
        assert inner4(d, d) == 2


def test_eq21_eq22_verbatim():
    f21 = PermutoFace((frozenset({1, 2, 3}), frozenset({4}), frozenset({5})))
    f22 = PermutoFace((frozenset({1, 3, 4}), frozenset({2}), frozenset({5})))
    assert _labels(f21.boundary) == EQ21
    assert _labels(f22.boundary) == EQ22


def test_facets():
    kinds = Counter(f.kind for f in permutohedron_facets())
    assert kinds == {"truncated octahedron": 10, "hexagonal prism": 20}


def test_boundary_cycle_rejects_non_polygon():
    with pytest.raises(ValueError):
        boundary_cycle([(5, 4, 3, 2, 1), (1, 2, 3, 4, 5)])


def test_summary_lines():
    lines = cell_summary().lines()
    assert lines[:4] == ["N0\t120", "N1\t240", "N2\t150", "N3\t30"]
    assert lines[-1] == "euler\t0"
