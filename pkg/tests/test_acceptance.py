"""Acceptance criteria, one test each.

Every criterion collects all of its sub-check failures before asserting, so a
failing line names each broken property.  The terminal summary (see conftest)
prints one PASS/FAIL line per criterion.
"""
from __future__ import annotations

import math
import os
import random
import subprocess
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from pentatile import reference
from pentatile.affine import (
    C1,
    C2,
    ETA,
    IDENTITY,
    compose,
    extend_order20,
    fixed_point,
    full_matrix,
    h2_generators,
    named_elements,
    plane_matrix,
    power,
    reflection,
    stabilizer_of,
    translation,
)
from pentatile.cells import (
    PermutoFace,
    all_rhombohedra,
    cell_summary,
    permutohedron_faces,
    radius_classes,
    rhombohedron,
    root_cell_vertices,
)
from pentatile.golden import TAU, GoldenNumber
from pentatile.lattice import K, ORIGIN, ROOTS, Coord5, embed, embed4, inner4
from pentatile.tiling import (
    CENTER_K5,
    CENTER_K23,
    DEFAULT_RADIUS,
    TileKind,
    audit_disjoint,
    audit_edges,
    classify_and_project,
    decagon_root,
    decagon_weight,
    fig5_patch,
    fig6_patch,
    fig7_patch,
    five_fold_centers,
    is_invariant,
    polygon_area,
    rotation_about,
    weight_decagon_circumradius,
    weight_hull,
    weight_tessellation,
)

RESULTS: dict[int, tuple[str, str, list[str]]] = {}

ROOT_LIST = [K[i] - K[j] for i in range(1, 6) for j in range(1, 6) if i != j]


class Checks:
    def __init__(self) -> None:
        self.failures: list[str] = []

    def __call__(self, ok: bool, what: str) -> None:
        if not ok:
            self.failures.append(what)


def _run(n: int, title: str, body) -> None:
    check = Checks()
    try:
        body(check)
    except Exception as exc:  # a crash is a failure of the criterion, not of the harness
        check.failures.append(f"{type(exc).__name__}: {exc}")
    status = "PASS" if not check.failures else "FAIL"
    RESULTS[n] = (status, title, check.failures)
    line = f"ACCEPTANCE {n:2d} {status} {title}"
    if check.failures:
        line += " :: " + "; ".join(check.failures)
    print(line)
    assert not check.failures, line


def _closed(group) -> bool:
    s = set(group)
    return all(compose(a, b) in s for a in group for b in group)


# ----------------------------------------------------------------------


def test_01_root_data():
    def body(check):
        for i in range(1, 6):
            for j in range(1, 6):
                want = Fraction(4, 5) if i == j else Fraction(-1, 5)
                check(inner4(K[i], K[j]) == want, f"(k{i},k{j})")
        w = ROOTS.omega
        check(w[1] == K[1] and w[2] == K[1] + K[2], "omega1/omega2")
        check(w[3] == K[1] + K[2] + K[3] == -(K[4] + K[5]), "omega3")
        check(w[4] == -K[5], "omega4")
        for i in range(1, 5):
            for j in range(1, 5):
                check(inner4(w[i], ROOTS.alpha[j]) == (1 if i == j else 0), f"(w{i},a{j})")

    _run(1, "root data: inner products and weights exact", body)


def test_02_root_voronoi_cell():
    def body(check):
        vs = root_cell_vertices()
        check(len(vs) == len(set(vs)) == 30, "30 distinct vertices")
        two_fifths = GoldenNumber(Fraction(2, 5))
        sizes = {k: len(v) for k, v in radius_classes().items()}
        check(sizes == {two_fifths * TAU ** -2: 10, two_fifths: 10, two_fifths * TAU ** 2: 10}, f"radius classes {sizes}")
        rs = all_rhombohedra()
        check(len(rs) == 20, "20 facets")
        for r in rs:
            check(len(set(r.vertices)) == 8 and all(inner4(v, r.root) == 1 for v in r.vertices), f"facet {r.root}")
        eq6 = {K[1], K[1] + K[2], K[1] + K[3], K[1] + K[4],
               -(K[2] + K[5]), -(K[3] + K[5]), -(K[4] + K[5]), -K[5]}
        check(set(rhombohedron(1, 5).vertices) == eq6, "facet (1,5) vertex list")

    _run(2, "root Voronoi cell: 30 vertices, 3 radius classes, 20 facets", body)


def test_03_weight_voronoi_cell():
    def labels(face):
        return ["".join(map(str, t)) for t in face.boundary]

    def body(check):
        s = cell_summary()
        check((s.n0, s.n1, s.n2, s.n3) == (120, 240, 150, 30), "census")
        check(s.sub.get("faces.hexagon") == 60 and s.sub.get("faces.square") == 90, "face split")
        check(s.sub.get("facets.truncated_octahedron") == 10 and s.sub.get("facets.hexagonal_prism") == 20,
              "facet split")
        check(s.euler == 0, "Euler characteristic")
        f1 = PermutoFace((frozenset({1, 2, 3}), frozenset({4}), frozenset({5})))
        f2 = PermutoFace((frozenset({1, 3, 4}), frozenset({2}), frozenset({5})))
        check(labels(f1) == ["54321", "45321", "35421", "34521", "43521", "53421"], "({1,2,3},{4},{5}) list")
        check(labels(f2) == ["52431", "42531", "32541", "32451", "42351", "52341"], "({1,3,4},{2},{5}) list")

    _run(3, "permutohedron census and hexagon vertex lists", body)


def test_04_group_algebra():
    def body(check):
        rng = random.Random(4)
        for t in range(1000):
            lam = Coord5(rng.randint(-6, 6) for _ in range(5))
            a, b = rng.choice(ROOT_LIST), rng.choice(ROOT_LIST)
            while inner4(a, b) not in (0, -1):
                b = rng.choice(ROOT_LIST)
            na, nb = rng.randint(-5, 5), rng.randint(-5, 5)
            ra, rb = reflection(a, na), reflection(b, nb)
            if inner4(a, b) == 0:
                check(compose(ra, rb) == compose(rb, ra), f"commuting pair {t}")
            else:
                check(compose(compose(ra, rb), ra) == compose(compose(rb, ra), rb), f"braid {t}")
                check(compose(compose(ra, rb), ra) == reflection(a + b, na + nb), f"sum root {t}")
            # translation of the base point is a similarity on the shift
            lhs = compose(compose(translation(lam), ra), translation(-lam))
            check(lhs == reflection(a, na + int(inner4(lam, a))), f"similarity {t}")
        for t in range(100):
            n = [rng.randint(-6, 6) for _ in range(4)]
            r1, r2 = h2_generators(*n)
            check(compose(r1, r1) == IDENTITY and compose(r2, r2) == IDENTITY, f"involutions {n}")
            check(power(compose(r1, r2), 5) == IDENTITY, f"order five {n}")

    _run(4, "group algebra identities exact", body)


def test_05_matrices():
    def body(check):
        check(np.array_equal(plane_matrix(C2), reference.PLANE["C2"]), "C2 exact")
        check(np.array_equal(plane_matrix(ETA), reference.PLANE["eta"]), "eta exact")
        m = plane_matrix(C1)
        k5 = np.array([*embed(K[5]), 1.0])
        check(np.allclose(m @ m, np.eye(3), atol=1e-10), "C1 squared")
        check(np.allclose(m @ k5, k5, atol=1e-10), "C1 fixes k5")
        check(np.allclose(m[:2, 2], embed(K[5] - K[4]), atol=1e-10), "C1 last column")
        rot = plane_matrix(compose(C2, C1))
        th = 2 * math.pi / 5
        check(np.allclose(rot[:2, :2], [[math.cos(th), -math.sin(th)], [math.sin(th), math.cos(th)]], atol=1e-10),
              "C2C1 rotation part")
        check(np.allclose(rot @ k5, k5, atol=1e-10), "C2C1 fixes k5")
        rng = random.Random(5)
        for name, e in named_elements().items():
            f = full_matrix(e)
            for _ in range(20):
                v = Coord5(rng.randint(-5, 5) for _ in range(5))
                ok = np.allclose(f @ [*embed4(v), 1.0], [*embed4(e(v)), 1.0], atol=1e-10)
                check(ok, f"{name} 5x5 action")

    _run(5, "exported matrices match the exact action", body)


def test_06_stabilizers():
    def body(check):
        s5, s23 = stabilizer_of(K[5]), stabilizer_of(K[2] + K[3])
        for name, c, s in (("k5", K[5], s5), ("k2+k3", K[2] + K[3], s23)):
            check(len(set(s)) == 10, f"{name} size")
            check(all(g(c) == c for g in s), f"{name} fixes center")
            check(_closed(s), f"{name} closed")
            g20 = extend_order20(s)
            check(len(set(g20)) == 20 and _closed(g20), f"{name} order-20 closed")
        lam = K[2] + K[3] - K[5]
        conj = [compose(compose(translation(lam), g), translation(-lam)) for g in s5]
        check(conj == s23, "conjugate elementwise")

    _run(6, "stabilizers of k5 and k2+k3", body)


def test_07_root_decagon():
    def body(check):
        p = decagon_root()
        check(len(p) == 10, f"{len(p)} tiles")
        check(p.kind_counts() == {"ThickRhombusRoot": 5, "ThinRhombusRoot": 5}, f"kinds {p.kind_counts()}")
        check(p.area() == 5 * TAU * TAU, f"area {p.area()}")
        check(not p.conflicts, f"{p.conflicts.count} conflicts")
        cell = set(root_cell_vertices())
        check(all(v in cell for t in p.tiles() for v in t.vertices), "vertices in cell")

    _run(7, "root decagon: 10 rhombi, area 5 tau^2", body)


def test_08_weight_decagon():
    def body(check):
        p = decagon_weight()
        check(len(p) == 20, f"{len(p)} tiles")
        check(sorted(p.kind_counts().values()) == [5, 5, 5, 5] and len(p.kind_counts()) == 4,
              f"kinds {p.kind_counts()}")
        check(not p.conflicts, f"{p.conflicts.count} conflicts")
        check(p.area() == polygon_area(weight_hull()), "area equals hull")
        square_kinds = Counter(classify_and_project(f).kind for f in permutohedron_faces() if f.kind == "square")
        check(sum(square_kinds.values()) == 90, "90 squares")
        check(set(square_kinds) <= {TileKind.UNIT_RHOMBUS_WEIGHT, TileKind.TAU_RHOMBUS_WEIGHT,
                                    TileKind.DEGENERATE_SEGMENT}, f"square outcomes {set(square_kinds)}")
        check(square_kinds[TileKind.DEGENERATE_SEGMENT] > 0, "degenerate squares exist")

    _run(8, "weight decagon: 20 tiles, 5 per kind, hull area", body)


def test_09_growth_patches():
    def body(check):
        p5, rep5 = fig5_patch()
        check(not rep5, f"fig5 {rep5.count} conflicts")
        check(is_invariant(p5, rotation_about(CENTER_K23)), "fig5 invariant")
        for name, fn, center in (("fig6", fig6_patch, CENTER_K23), ("fig7", fig7_patch, CENTER_K5)):
            p, rep = fn(radius=DEFAULT_RADIUS)
            check(not rep, f"{name} {rep.count} conflicts")
            check(is_invariant(p, rotation_about(center)), f"{name} invariant")
            check(not audit_disjoint(p), f"{name} output overlaps")

    _run(9, "growth patches: conflict-free and five-fold invariant", body)


def test_10_weight_tessellation():
    def body(check):
        r = 3 * weight_decagon_circumradius()
        p, rep, stats = weight_tessellation(r)
        p2, rep2, stats2 = weight_tessellation(r)
        check(p.keys() == p2.keys() and stats == stats2, "deterministic")
        check(stats.covered_area == p.area(), "exact area accounting")
        check(stats.skipped == rep.skipped and stats.conflicts == rep.count, "statistics match log")
        check(0 < stats.coverage <= 1, f"coverage {stats.coverage}")
        check(not audit_disjoint(p), "output overlaps")
        check(audit_edges(p).ok, "edge audit")

    _run(10, "weight tessellation: statistics, area, edge audit", body)


def test_11_five_fold_centers():
    def body(check):
        centers = five_fold_centers(2)
        check(len(centers) == 625, f"{len(centers)} centers")
        for n, c in centers:
            s = stabilizer_of(c)
            rot = [g for g in s if g.eps == 1 and g != IDENTITY and power(g, 5) == IDENTITY]
            check(len(rot) == 4 and all(g(c) == c for g in s), f"center {n}")
        check(fixed_point(-1, 1, -1, 1) == K[2] + K[3], "(-1,1,-1,1) -> k2+k3")

    _run(11, "five-fold centers admit order-5 stabilizers", body)


_DUMP = """
import sys
from pathlib import Path
from pentatile.recipes import RECIPES, build
from pentatile.render import dumps, export_json, render_svg
out = Path(sys.argv[1])
for name in RECIPES:
    p, meta = build(name)
    (out / (name + ".json")).write_text(dumps(export_json(p, meta)))
    (out / (name + ".svg")).write_bytes(render_svg(p))
"""


def test_12_determinism(tmp_path):
    def body(check):
        dirs = []
        for seed in ("1", "2"):
            d = tmp_path / f"run{seed}"
            d.mkdir()
            env = dict(os.environ, PYTHONHASHSEED=seed)
            res = subprocess.run([sys.executable, "-c", _DUMP, str(d)], env=env, capture_output=True, text=True)
            check(res.returncode == 0, f"run {seed}: {res.stderr.strip()[-200:]}")
            dirs.append(d)
        names = sorted(f.name for f in dirs[0].iterdir())
        check(len(names) == 12, f"{len(names)} outputs")
        for name in names:
            check((dirs[0] / name).read_bytes() == (dirs[1] / name).read_bytes(), f"{name} differs")

    _run(12, "figure recipes give byte-identical JSON and SVG", body)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
