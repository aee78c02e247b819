"""Self-check suite behind ``pentatile verify``.

Each check returns a status (PASS, WARN or FAIL), a short anchor naming
what is being checked, and a detail string.  WARN marks a documented
known discrepancy and does not affect the exit status.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import reference
from .affine import (
    C1,
    C2,
    ETA,
    IDENTITY,
    P,
    compose,
    decompose_reflection_pair,
    extend_order20,
    h2_generators,
    matrix_export,
    named_elements,
    power,
    reflection,
    stabilizer_of,
    translation,
)
from .cells import (
    all_rhombohedra,
    cell_summary,
    check_rhombohedron_hyperplane,
    radius_classes,
    root_cell_summary,
    root_cell_vertices,
)
from .golden import ONE, SIGMA, TAU
from .lattice import ROOTS, K, Coord5, inner4, plane_norm2, plane_norm2_perp
from .tiling import (
    CENTER_K23,
    CENTER_K5,
    DEFAULT_RADIUS,
    audit_edges,
    classify_and_project,
    decagon_root,
    decagon_weight,
    fig5_patch,
    fig6_patch,
    fig7_patch,
    five_fold_centers,
    four_rhombohedra_faces,
    is_invariant,
    polygon_area,
    root_decagon_area,
    rotation_about,
    weight_hull,
)

PASS, WARN, FAIL = "PASS", "WARN", "FAIL"


@dataclass(frozen=True)
class CheckResult:
    status: str
    anchor: str
    detail: str

    def line(self) -> str:
        return f"{self.status}\t{self.anchor}\t{self.detail}"


def _ok(cond: bool, detail: str) -> tuple[str, str]:
    return (PASS if cond else FAIL), detail


def _roots():
    return [K[i] - K[j] for i in range(1, 6) for j in range(1, 6) if i != j]


def _rand_coord(rng: random.Random) -> Coord5:
    return Coord5(rng.randint(-6, 6) for _ in range(5))


# ----------------------------------------------------------------------


def check_golden():
    ok = TAU * SIGMA == -ONE and TAU + SIGMA == ONE and TAU * TAU == TAU + ONE
    return _ok(ok, "tau*sigma=-1 tau+sigma=1 tau^2=tau+1")


def check_root_data():
    cartan = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    dual = all(inner4(ROOTS.omega[i], ROOTS.alpha[j]) == (1 if i == j else 0)
               for i in range(1, 5) for j in range(1, 5))
    a0 = ROOTS.alpha[0] == -(ROOTS.alpha[1] + ROOTS.alpha[2] + ROOTS.alpha[3] + ROOTS.alpha[4])
    return _ok(ROOTS.cartan == cartan and dual and a0, "Cartan matrix A4, weights dual to roots, a0 = -sum")


def check_pythagoras():
    rng = random.Random(1)
    ok = all(plane_norm2(v) + plane_norm2_perp(v) == inner4(v, v)
             for v in (_rand_coord(rng) for _ in range(200)))
    return _ok(ok, "plane + perp norms = 4D norm, 200 vectors")


def check_root_cell():
    s = root_cell_summary()
    classes = sorted(len(v) for v in radius_classes().values())
    ok = (len(root_cell_vertices()), s.n1, s.n2, s.n3, s.euler) == (30, 70, 60, 20, 0) and classes == [10, 10, 10]
    ok &= all(check_rhombohedron_hyperplane(r) for r in all_rhombohedra())
    return _ok(ok, f"N0..N3 {s.n0}/{s.n1}/{s.n2}/{s.n3} euler {s.euler}; radius classes {classes}")


def check_permutohedron():
    s = cell_summary()
    ok = (s.n0, s.n1, s.n2, s.n3, s.euler) == (120, 240, 150, 30, 0)
    ok &= s.sub["faces.hexagon"] == 60 and s.sub["faces.square"] == 90
    ok &= s.sub["facets.truncated_octahedron"] == 10 and s.sub["facets.hexagonal_prism"] == 20
    return _ok(ok, f"N0..N3 {s.n0}/{s.n1}/{s.n2}/{s.n3} euler {s.euler}")


def check_reflection_identities():
    rng = random.Random(2)
    roots = _roots()
    bad = 0
    for _ in range(300):
        lam = _rand_coord(rng)
        a, b = rng.choice(roots), rng.choice(roots)
        na, nb = rng.randint(-4, 4), rng.randint(-4, 4)
        ra, rb = reflection(a, na), reflection(b, nb)
        ip = inner4(a, b)
        if ip == 0:
            bad += compose(ra, rb) != compose(rb, ra)
        elif ip == -1:
            lhs = compose(compose(ra, rb), ra)
            bad += lhs != reflection(a + b, na + nb)
            bad += compose(compose(rb, ra), rb) != lhs
        bad += compose(ra, ra) != IDENTITY
        bad += ra(lam) != lam - a * (inner4(lam, a) - na)
    return _ok(bad == 0, f"commuting, braid and conjugate-reflection identities; {bad} failures")


def check_h2_relations():
    rng = random.Random(3)
    bad = 0
    for _ in range(100):
        n = [rng.randint(-5, 5) for _ in range(4)]
        r1, r2 = h2_generators(*n)
        bad += compose(r1, r1) != IDENTITY or compose(r2, r2) != IDENTITY
        bad += power(compose(r1, r2), 5) != IDENTITY
    return _ok(bad == 0, "R1^2 = R2^2 = (R1 R2)^5 = 1 for 100 parameter sets")


def check_similarity():
    rng = random.Random(4)
    roots = _roots()
    bad = 0
    for _ in range(100):
        lam = _rand_coord(rng)
        a = rng.choice(roots)
        n = rng.randint(-4, 4)
        lhs = compose(compose(translation(lam), reflection(a, n)), translation(-lam))
        shift = inner4(lam, a)
        bad += lhs != reflection(a, n + int(shift))
    return _ok(bad == 0, "t(l) r(a,n) t(-l) = r(a, n + (l,a)) for 100 cases")


def check_named_actions():
    ok = C1(K[5]) == K[5] and ETA(K[1]) == -K[4]
    c21 = compose(C2, C1)
    ok &= c21.perm == P.perm and c21.t == K[5] - K[1]
    return _ok(ok, "C1 fixes k5; eta k1 = -k4; C2 C1 = (P, k5 - k1)")


def check_stabilizers():
    details = []
    ok = True
    s5 = stabilizer_of(CENTER_K5)
    s23 = stabilizer_of(CENTER_K23)
    lam = CENTER_K23 - CENTER_K5
    for p, s in ((CENTER_K5, s5), (CENTER_K23, s23)):
        ok &= len(set(s)) == 10 and all(g(p) == p for g in s)
        ok &= {compose(a, b) for a in s for b in s} == set(s)
        g20 = extend_order20(s)
        ok &= len(set(g20)) == 20 and {compose(a, b) for a in g20 for b in g20} == set(g20)
    conj = [compose(compose(translation(lam), g), translation(-lam)) for g in s5]
    ok &= conj == s23
    details.append("orders 10 and 20, closed, conjugate by t(k2+k3-k5)")
    return _ok(ok, "; ".join(details))


def check_plane_matrices():
    names = named_elements()
    worst = 0.0
    for key, ref in reference.PLANE.items():
        e = compose(C2, C1) if key == "C2C1" else names[key]
        worst = max(worst, float(np.abs(matrix_export(e)[0] - ref).max()))
    return _ok(worst < 1e-10, f"{len(reference.PLANE)} published plane matrices, max deviation {worst:.1e}")


def check_full_matrices():
    names = named_elements()
    worst = 0.0
    for key, ref in reference.FULL.items():
        worst = max(worst, float(np.abs(matrix_export(names[key])[1] - ref).max()))
    return _ok(worst < 1e-10, f"{len(reference.FULL)} published 5x5 matrices, max deviation {worst:.1e}")


def check_reflection_words():
    rng = random.Random(5)
    mismatched = 0
    for _ in range(50):
        n = [rng.randint(-4, 4) for _ in range(4)]
        r1, r2 = h2_generators(*n)
        words = {
            "R1R2R1": compose(compose(r1, r2), r1),
            "R2R1R2": compose(compose(r2, r1), r2),
            "R1R2R1R2R1": compose(compose(compose(compose(r1, r2), r1), r2), r1),
        }
        for name, ((ij, f), (kl, g)) in reference.REFLECTION_WORDS.items():
            printed = set()
            for (i, j), shift in (((ij), f(n)), ((kl), g(n))):
                printed.add((i, j, shift) if i < j else (j, i, -shift))
            mismatched += set(decompose_reflection_pair(words[name])) != printed
    return _ok(mismatched == 0,
               f"printed reflection pairs vs exact products, 50 parameter sets; {mismatched} mismatches "
               "(roots compared up to r(-a,n) = r(a,-n))")


def check_decagon_root():
    p = decagon_root()
    counts = p.kind_counts()
    ok = len(p) == 10 and counts == {"ThickRhombusRoot": 5, "ThinRhombusRoot": 5}
    ok &= p.area() == root_decagon_area() and not p.conflicts
    verts = set(root_cell_vertices())
    ok &= all(v in verts for t in p.tiles() for v in t.vertices)
    ok &= audit_edges(p).ok and is_invariant(p, C2)
    return _ok(ok, f"10 tiles {counts}, area {p.area()}, mirror C2")


def check_four_rhombohedra():
    p = decagon_root()
    got = {classify_and_project(f).key for f in four_rhombohedra_faces()}
    inside = got <= p.keys()
    status = WARN if inside and len(got) == 9 else FAIL
    return status, f"four adjacent rhombohedra supply {len(got)} of 10 tiles; the k1,k4 rhombus needs a fifth facet"


def check_decagon_weight():
    p = decagon_weight()
    counts = p.kind_counts()
    ok = len(p) == 20 and set(counts.values()) == {5} and len(counts) == 4
    ok &= p.area() == polygon_area(weight_hull()) and not p.conflicts and audit_edges(p).ok
    return _ok(ok, f"20 tiles {counts}, area {p.area()} = hull area")


def check_fig5():
    p, rep = fig5_patch()
    ok = not rep and is_invariant(p, rotation_about(CENTER_K23)) and audit_edges(p).ok
    return _ok(ok, f"{len(p)} tiles, {rep.count} conflicts, 5-fold about k2+k3")


def _growth(name, fn, center):
    p, rep = fn(radius=DEFAULT_RADIUS)
    sym = is_invariant(p, rotation_about(center))
    status, detail = _ok(sym, f"{len(p)} tiles invariant under the order-5 rotation")
    results = [CheckResult(status, f"{name} symmetry", detail)]
    results.append(CheckResult(WARN if rep else PASS, f"{name} consistency",
                               f"{rep.count} overlapping image pairs rejected"))
    return results


def check_five_fold_centers():
    cs = five_fold_centers(1)
    ok = all(all(g(p) == p for g in stabilizer_of(p)) for _, p in cs)
    ok &= dict(cs).get((-1, 1, -1, 1)) == CENTER_K23
    return _ok(ok, f"{len(cs)} centers for |n_i| <= 1 each with an order-10 stabilizer")


CHECKS: list[tuple[str, Callable]] = [
    ("golden field identities", check_golden),
    ("root data", check_root_data),
    ("norm split", check_pythagoras),
    ("root cell census", check_root_cell),
    ("permutohedron census", check_permutohedron),
    ("reflection identities", check_reflection_identities),
    ("H2 Coxeter relations", check_h2_relations),
    ("translation similarity", check_similarity),
    ("named element actions", check_named_actions),
    ("stabilizers of k5 and k2+k3", check_stabilizers),
    ("plane matrices", check_plane_matrices),
    ("5x5 matrices", check_full_matrices),
    ("reflection-pair decompositions", check_reflection_words),
    ("root decagon", check_decagon_root),
    ("four-rhombohedra recipe", check_four_rhombohedra),
    ("weight decagon", check_decagon_weight),
    ("fig5 patch", check_fig5),
    ("five-fold centers", check_five_fold_centers),
]


def run_verify() -> tuple[list[CheckResult], int]:
    results = []
    for anchor, fn in CHECKS:
        try:
            status, detail = fn()
        except Exception as exc:  # a crashing check is a failed check
            status, detail = FAIL, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(status, anchor, detail))
    results += _growth("fig6", fig6_patch, CENTER_K23)
    results += _growth("fig7", fig7_patch, CENTER_K5)
    code = 1 if any(r.status == FAIL for r in results) else 0
    return results, code
