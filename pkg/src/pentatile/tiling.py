"""Projected cell faces as plane tiles, decagonal patches and their growth.

Tiles keep their vertices as exact ``Coord5`` points; since the plane
embedding of the rational span is injective, a ``Coord5`` *is* a plane
point.  Every geometric decision (orientation, overlap, containment, area)
is an exact sign test in Q(sqrt5).  Floats appear only in the spatial
prefilter and in rendering.

Which of the two covers of a projected cell is used is fixed by a
*height probe*: an integer weight vector ``w`` with zero sum, lifting
``v`` to ``(v_par, sum(w_i v_i))``.  Faces on the lower side of the lifted
cell form the patch.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .affine import AffineElement, NotPlaneCompatible, extend_order20, stabilizer_of
from .affine import C1, compose, P as ROTATION, translation
from .cells import (
    PermutoFace,
    Rhombohedron,
    RhombusFace,
    all_rhombohedra,
    permutohedron_faces,
    permutohedron_vertices,
    rhombohedron,
    root_cell_vertices,
)
from .golden import TAU, ZERO, GoldenNumber
from .lattice import (
    K,
    ORIGIN,
    SQRT_2_5,
    Coord5,
    cross_tau,
    embed,
    plane_inner,
    plane_norm2,
    plane_norm2_perp,
    tau_sign,
    tau_to_golden,
)

# Height probe.  The root decagon it selects is built from the four
# rhombohedra centred at (k5-k4)/2, (k2-k4)/2, (k3-k1)/2 and (k5-k1)/2 and
# is mirror-symmetric about the line through 0, k5 and k2+k3.  Mirror-
# symmetric probes such as (1, 1, 1, 1, -4) sit on a wall between covers
# and are rejected as non-generic.
DEFAULT_PROBE = (0, -1, 1, 2, -2)

ROOT_DECAGON_CENTERS = ((5, 4), (2, 4), (3, 1), (5, 1))

EDGE = SQRT_2_5
ROOT_DECAGON_CIRCUMRADIUS = SQRT_2_5 * float(TAU)


class TilingMismatch(RuntimeError):
    pass


class NongenericProbe(ValueError):
    pass


class TileKind(str, Enum):
    THICK_RHOMBUS_ROOT = "ThickRhombusRoot"
    THIN_RHOMBUS_ROOT = "ThinRhombusRoot"
    UNIT_RHOMBUS_WEIGHT = "UnitRhombusWeight"
    TAU_RHOMBUS_WEIGHT = "TauRhombusWeight"
    THICK_HEXAGON_WEIGHT = "ThickHexagonWeight"
    THIN_HEXAGON_WEIGHT = "ThinHexagonWeight"
    DEGENERATE_SEGMENT = "DegenerateSegment"


# ----------------------------------------------------------------------
# raw-tuple helpers (hot paths)


def _sub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _orient(p: Sequence, q: Sequence, r: Sequence) -> int:
    """Sign of the plane cross product ``(q - p) x (r - p)``."""
    return tau_sign(*cross_tau(_sub(q, p), _sub(r, p)))


def _height(w: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(w, v))


def _lifted_det_sign(w, a, b, d) -> int:
    """Sign of det[(a_par, h(a)), (b_par, h(b)), (d_par, h(d))]."""
    p1, q1 = cross_tau(b, d)
    p2, q2 = cross_tau(a, d)
    p3, q3 = cross_tau(a, b)
    ha, hb, hd = _height(w, a), _height(w, b), _height(w, d)
    return tau_sign(ha * p1 - hb * p2 + hd * p3, ha * q1 - hb * q2 + hd * q3)


# ----------------------------------------------------------------------
# tiles


@dataclass(frozen=True, eq=False)
class Tile:
    kind: TileKind
    vertices: tuple  # Coord5, counterclockwise, smallest first
    provenance: str = ""

    @property
    def key(self) -> tuple:
        return tuple(sorted(self.vertices))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tile):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def raw(self) -> list[tuple]:
        return [v.c for v in self.vertices]

    def area(self) -> GoldenNumber:
        """Exact area in units of ``(2/5) sin 36`` (thin root rhombus = 1)."""
        return tau_to_golden(*self.area_tau())

    def area_tau(self) -> tuple:
        if self.kind == TileKind.DEGENERATE_SEGMENT:
            return (0, 0)
        vs = self.raw
        p = q = 0
        for i in range(1, len(vs) - 1):
            pi, qi = cross_tau(_sub(vs[i], vs[0]), _sub(vs[i + 1], vs[0]))
            p += pi
            q += qi
        return (Fraction(p, 2), Fraction(q, 2))

    def centroid(self) -> Coord5:
        n = len(self.vertices)
        return Coord5(Fraction(sum(v.c[i] for v in self.vertices), n) for i in range(5))

    def xy(self) -> list[tuple[float, float]]:
        return [embed(v) for v in self.vertices]

    def edges(self) -> list[tuple[Coord5, Coord5]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def contains_strictly(self, point: Coord5) -> bool:
        x = point.c
        vs = self.raw
        return all(_orient(vs[i], vs[(i + 1) % len(vs)], x) > 0 for i in range(len(vs)))

    def edge_pattern(self) -> tuple[str, ...]:
        """Edge lengths as ``'1'`` / ``'tau'`` relative to the shortest edge class."""
        lens = [plane_norm2(b - a) for a, b in self.edges()]
        short = min(lens)
        labels = tuple("1" if ln == short else "tau" for ln in lens)
        rots = [labels[i:] + labels[:i] for i in range(len(labels))]
        return max(rots)

    def describe(self) -> str:
        return f"{self.kind.value}[" + " ".join("".join(str(x) for x in v.c) for v in self.vertices) + "]"


def make_tile(kind: TileKind, points: Iterable[Coord5], provenance: str = "") -> Tile:
    """Canonicalize a convex polygon: counterclockwise, smallest vertex first."""
    pts = list(points)
    if kind != TileKind.DEGENERATE_SEGMENT:
        s = 0
        raw = [p.c for p in pts]
        for i in range(len(raw)):
            s = _orient(raw[i], raw[(i + 1) % len(raw)], raw[(i + 2) % len(raw)])
            if s:
                break
        if s < 0:
            pts.reverse()
        elif s == 0:
            raise ValueError("degenerate polygon given a non-degenerate kind")
    i0 = pts.index(min(pts))
    pts = pts[i0:] + pts[:i0]
    return Tile(kind, tuple(pts), provenance)


def interiors_overlap(a: Tile, b: Tile) -> bool:
    """Exact separating-axis test on two convex tiles."""
    for poly, other in ((a.raw, b.raw), (b.raw, a.raw)):
        n = len(poly)
        for i in range(n):
            p, q = poly[i], poly[(i + 1) % n]
            if all(_orient(p, q, y) <= 0 for y in other):
                return False
    return True


def overlap_witness(a: Tile, b: Tile) -> Coord5 | None:
    """A rational point strictly inside both tiles, if one is found among simple candidates."""
    cands = [a.centroid(), b.centroid(), (a.centroid() + b.centroid()) / 2]
    for u in a.vertices + b.vertices:
        for v in a.vertices + b.vertices:
            if u < v:
                cands.append((u + v) / 2)
    for p in cands:
        if a.contains_strictly(p) and b.contains_strictly(p):
            return p
    return None


# ----------------------------------------------------------------------
# classification


def _step(a: int, b: int) -> int:
    """1 for neighbouring indices mod 5 (short plane image), 2 otherwise."""
    return 1 if (a - b) % 5 in (1, 4) else 2


def classify_root_face(face: RhombusFace) -> TileKind:
    # k_a, k_b at 72 degrees -> thick; at 144 degrees -> thin
    if _step(face.a, face.b) == 1:
        return TileKind.THICK_RHOMBUS_ROOT
    return TileKind.THIN_RHOMBUS_ROOT


def classify_permuto_face(face: PermutoFace) -> TileKind:
    blocks = face.moving_blocks
    if face.kind == "square":
        steps = [_step(*b) for b in blocks]
        if steps == [1, 1]:
            return TileKind.UNIT_RHOMBUS_WEIGHT
        if steps == [2, 2]:
            return TileKind.TAU_RHOMBUS_WEIGHT
        return TileKind.DEGENERATE_SEGMENT
    (b,) = blocks
    x, y, z = b
    long_pairs = sum(_step(u, v) == 2 for u, v in ((x, y), (y, z), (x, z)))
    # each pair of the block contributes two opposite edges
    return TileKind.THICK_HEXAGON_WEIGHT if long_pairs == 2 else TileKind.THIN_HEXAGON_WEIGHT


def classify_and_project(face: RhombusFace | PermutoFace, provenance: str = "") -> Tile:
    if isinstance(face, RhombusFace):
        kind = classify_root_face(face)
        pts = face.vertices
        prov = provenance or f"rhombus k{face.a},k{face.b} at {''.join(map(str, face.base.c))}"
    elif isinstance(face, PermutoFace):
        kind = classify_permuto_face(face)
        pts = face.points
        prov = provenance or f"face {face.label()}"
    else:
        raise TypeError(f"cannot project {type(face).__name__}")
    if kind != TileKind.DEGENERATE_SEGMENT:
        raw = [p.c for p in pts]
        if all(_orient(raw[0], raw[1], r) == 0 for r in raw[2:]):
            kind = TileKind.DEGENERATE_SEGMENT
    return make_tile(kind, pts, prov)


# ----------------------------------------------------------------------
# patches


_CELL = 1.0


@dataclass
class ConflictReport:
    conflicts: list = field(default_factory=list)  # (existing, offending, witness)
    skipped: int = 0
    _seen: set = field(default_factory=set, repr=False)

    def record(self, existing: Tile, offending: Tile) -> None:
        pair = (existing.key, offending.key)
        if pair not in self._seen:
            self._seen.add(pair)
            self.conflicts.append((existing, offending, overlap_witness(existing, offending)))

    @property
    def count(self) -> int:
        return len(self.conflicts)

    def extend(self, other: ConflictReport) -> None:
        for a, b, _ in other.conflicts:
            self.record(a, b)
        self.skipped += other.skipped

    def canonical(self) -> list:
        return sorted(self.conflicts, key=lambda c: (c[0].key, c[1].key))

    def __bool__(self) -> bool:
        return bool(self.conflicts)


class Patch:
    """Interior-disjoint set of tiles keyed by their sorted vertex tuple."""

    def __init__(self, tiles: Iterable[Tile] = ()) -> None:
        self._tiles: dict[tuple, Tile] = {}
        self._grid: dict[tuple[int, int], list[tuple]] = defaultdict(list)
        self._bbox: dict[tuple, tuple[float, float, float, float]] = {}
        self.conflicts = ConflictReport()
        self.degenerate = 0
        for t in tiles:
            self.add(t)

    def __len__(self) -> int:
        return len(self._tiles)

    def __iter__(self):
        return iter(self.tiles())

    def __contains__(self, tile: Tile) -> bool:
        return tile.key in self._tiles

    def keys(self) -> set:
        return set(self._tiles)

    def tiles(self) -> list[Tile]:
        return [self._tiles[k] for k in sorted(self._tiles)]

    def copy(self) -> Patch:
        out = Patch()
        for t in self.tiles():
            out._insert(t)
        out.degenerate = self.degenerate
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Patch):
            return NotImplemented
        return self.keys() == other.keys()

    @staticmethod
    def _box(t: Tile) -> tuple[float, float, float, float]:
        xy = t.xy()
        xs = [p[0] for p in xy]
        ys = [p[1] for p in xy]
        return (min(xs), min(ys), max(xs), max(ys))

    def _cells(self, box):
        eps = 1e-9
        for i in range(math.floor((box[0] - eps) / _CELL), math.floor((box[2] + eps) / _CELL) + 1):
            for j in range(math.floor((box[1] - eps) / _CELL), math.floor((box[3] + eps) / _CELL) + 1):
                yield (i, j)

    def _insert(self, t: Tile) -> None:
        box = self._box(t)
        self._tiles[t.key] = t
        self._bbox[t.key] = box
        for c in self._cells(box):
            self._grid[c].append(t.key)

    def overlapping(self, t: Tile) -> list[Tile]:
        box = self._box(t)
        seen = set()
        out = []
        for c in self._cells(box):
            for k in self._grid.get(c, ()):
                if k in seen:
                    continue
                seen.add(k)
                b = self._bbox[k]
                if b[0] > box[2] + 1e-9 or box[0] > b[2] + 1e-9 or b[1] > box[3] + 1e-9 or box[1] > b[3] + 1e-9:
                    continue
                other = self._tiles[k]
                if interiors_overlap(other, t):
                    out.append(other)
        return sorted(out, key=lambda x: x.key)

    def add(self, t: Tile) -> bool:
        """Insert ``t`` unless it is already present or overlaps a stored tile.

        Overlaps are recorded in ``self.conflicts``; degenerate segments
        are counted and dropped.
        """
        if t.kind == TileKind.DEGENERATE_SEGMENT:
            self.degenerate += 1
            return False
        if t.key in self._tiles:
            return False
        clash = self.overlapping(t)
        if clash:
            for other in clash:
                self.conflicts.record(other, t)
            return False
        self._insert(t)
        return True

    def fits(self, t: Tile) -> bool:
        return t.key in self._tiles or not self.overlapping(t)

    def bounding_radius(self) -> float:
        r = 0.0
        for t in self._tiles.values():
            for x, y in t.xy():
                r = max(r, math.hypot(x, y))
        return r

    def area(self) -> GoldenNumber:
        p = q = 0
        for t in self._tiles.values():
            a, b = t.area_tau()
            p += a
            q += b
        return tau_to_golden(p, q)

    def kind_counts(self) -> dict[str, int]:
        out: dict[str, int] = defaultdict(int)
        for t in self._tiles.values():
            out[t.kind.value] += 1
        return dict(sorted(out.items()))

    def vertices(self) -> set[Coord5]:
        return {v for t in self._tiles.values() for v in t.vertices}


def transform_tile(t: Tile, e: AffineElement) -> Tile:
    return make_tile(t.kind, [e(v) for v in t.vertices], t.provenance)


def transform_patch(p: Patch, e: AffineElement) -> Patch:
    if not e.is_plane_compatible():
        raise NotPlaneCompatible(f"{e.describe()} does not preserve the Coxeter plane")
    return Patch(transform_tile(t, e) for t in p.tiles())


def patch_union(a: Patch, b: Patch) -> tuple[Patch, ConflictReport]:
    """Tiles of ``a`` plus every tile of ``b`` that does not overlap them.

    The returned report (also attached to the patch) lists each rejected
    overlap; it is empty exactly when the two patches agree where they meet.
    """
    out = a.copy()
    for t in b.tiles():
        out.add(t)
    return out, out.conflicts


# ----------------------------------------------------------------------
# lower-envelope selection


def _face_is_lower(w, face_pts: list[tuple], ea, eb, all_verts) -> bool | None:
    """Whether a 2-face lies on the lower boundary of the lifted cell.

    Returns None for faces whose plane image is a segment.
    """
    xs = tau_sign(*cross_tau(ea, eb))
    if xs == 0:
        return None
    f0 = face_pts[0]
    on_face = set(face_pts)
    signs = set()
    for v in all_verts:
        s = _lifted_det_sign(w, ea, eb, _sub(v, f0))
        if s == 0 and v not in on_face:
            raise NongenericProbe(f"probe {tuple(w)} is not generic for this cell")
        if s:
            signs.add(s)
    if signs == {-1}:
        return xs < 0
    if signs == {1}:
        return xs > 0
    return False


def _check_probe(w: Sequence[int]) -> tuple:
    w = tuple(int(x) for x in w)
    if len(w) != 5 or sum(w) != 0:
        raise NongenericProbe("probe must be five integers summing to zero")
    return w


def rhombohedron_lower_faces(r: Rhombohedron, probe=DEFAULT_PROBE) -> list[RhombusFace]:
    """The three faces of ``r`` on the lower side of its lifted parallelepiped."""
    w = _check_probe(probe)
    out = []
    for face, c in r.faces():
        if face.base != r.base:
            continue
        d = _lifted_det_sign(w, K[face.a].c, K[face.b].c, K[c].c)
        x = tau_sign(*cross_tau(K[face.a].c, K[face.b].c))
        if d == 0 or x == 0:
            raise NongenericProbe(f"probe {w} is not generic for rhombohedron {r}")
        out.append(face if d * x > 0 else RhombusFace(r.base + K[c], face.a, face.b))
    return out


@lru_cache(maxsize=16)
def root_envelope(probe=DEFAULT_PROBE) -> tuple:
    """Lower-envelope rhombus faces over all 2-faces of the root cell."""
    w = _check_probe(probe)
    verts = [v.c for v in root_cell_vertices()]
    faces = {}
    for r in all_rhombohedra():
        for f, _ in r.faces():
            faces[f.key] = f
    out = []
    for key in sorted(faces):
        f = faces[key]
        if _face_is_lower(w, [v.c for v in f.vertices], K[f.a].c, K[f.b].c, verts):
            out.append(f)
    return tuple(out)


@lru_cache(maxsize=16)
def weight_envelope(probe=DEFAULT_PROBE) -> tuple:
    """Lower-envelope faces of the permutohedron (segments excluded)."""
    w = _check_probe(probe)
    verts = [p.assignment for p in permutohedron_vertices()]
    out = []
    for f in permutohedron_faces():
        pts = f.boundary
        if _face_is_lower(w, pts, _sub(pts[1], pts[0]), _sub(pts[2], pts[1]), verts):
            out.append(f)
    return tuple(out)


# ----------------------------------------------------------------------
# exact hull and region areas


def convex_hull(points: Iterable[Coord5]) -> list[Coord5]:
    """Counterclockwise hull vertices (gift wrapping with exact orientation)."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts
    raw = {p: p.c for p in pts}
    # leftmost by float x, ties resolved exactly below
    start = min(pts, key=lambda p: (embed(p)[0], embed(p)[1]))
    hull = [start]
    cur = start
    while True:
        cand = None
        for p in pts:
            if p == cur:
                continue
            if cand is None:
                cand = p
                continue
            o = _orient(raw[cur], raw[cand], raw[p])
            if o < 0 or (o == 0 and plane_norm2(p - cur) > plane_norm2(cand - cur)):
                cand = p
        cur = cand
        if cur == start:
            break
        hull.append(cur)
        if len(hull) > len(pts):
            raise RuntimeError("hull walk did not close")
    return hull


def polygon_area(ring: Sequence[Coord5]) -> GoldenNumber:
    p = q = 0
    raw = [v.c for v in ring]
    for i in range(1, len(raw) - 1):
        a, b = cross_tau(_sub(raw[i], raw[0]), _sub(raw[i + 1], raw[0]))
        p += a
        q += b
    return tau_to_golden(Fraction(p, 2), Fraction(q, 2))


# ----------------------------------------------------------------------
# audits


def audit_disjoint(p: Patch) -> list[tuple[Tile, Tile]]:
    """Exhaustive pairwise interior-overlap check."""
    ts = p.tiles()
    bad = []
    for i in range(len(ts)):
        for j in range(i + 1, len(ts)):
            if interiors_overlap(ts[i], ts[j]):
                bad.append((ts[i], ts[j]))
    return bad


def _on_segment(a: Coord5, b: Coord5, x: Coord5) -> bool:
    """``x`` strictly between ``a`` and ``b`` on the segment."""
    if _orient(a.c, b.c, x.c) != 0:
        return False
    d1 = plane_inner(x - a, b - a)
    d2 = plane_inner(x - b, a - b)
    return d1 > ZERO and d2 > ZERO


@dataclass
class EdgeAudit:
    interior: int = 0
    boundary: int = 0
    overused: list = field(default_factory=list)  # edges shared by >2 tiles
    t_junctions: list = field(default_factory=list)  # (edge, other tile)

    @property
    def ok(self) -> bool:
        return not self.overused and not self.t_junctions


def audit_edges(p: Patch) -> EdgeAudit:
    """Count shared edges and look for vertices lying inside other tiles' edges."""
    uses: dict[tuple, int] = defaultdict(int)
    for t in p.tiles():
        for a, b in t.edges():
            uses[tuple(sorted((a, b)))] += 1
    out = EdgeAudit()
    for e, n in uses.items():
        if n == 2:
            out.interior += 1
        elif n == 1:
            out.boundary += 1
        else:
            out.overused.append(e)
    verts = p.vertices()
    # a vertex strictly inside someone's edge breaks edge-to-edge matching
    vx = {v: embed(v) for v in verts}
    for e, n in uses.items():
        if n != 1:
            continue
        a, b = e
        (ax, ay), (bx, by) = embed(a), embed(b)
        lo_x, hi_x = min(ax, bx) - 1e-9, max(ax, bx) + 1e-9
        lo_y, hi_y = min(ay, by) - 1e-9, max(ay, by) + 1e-9
        for v, (x, y) in vx.items():
            if lo_x <= x <= hi_x and lo_y <= y <= hi_y and v != a and v != b:
                if _on_segment(a, b, v):
                    out.t_junctions.append((e, v))
    return out


def boundary_ring(p: Patch) -> list[Coord5] | None:
    """Outer boundary as a single closed ring when the patch is a topological disk."""
    uses: dict[tuple, list] = defaultdict(list)
    for t in p.tiles():
        for a, b in t.edges():
            uses[tuple(sorted((a, b)))].append((a, b))
    directed = [d[0] for d in uses.values() if len(d) == 1]
    if not directed:
        return None
    nxt = {}
    for a, b in directed:
        if a in nxt:
            return None
        nxt[a] = b
    start = min(nxt)
    ring = [start]
    cur = nxt[start]
    while cur != start:
        ring.append(cur)
        if cur not in nxt or len(ring) > len(nxt):
            return None
        cur = nxt[cur]
    if len(ring) != len(nxt):
        return None
    return ring


# ----------------------------------------------------------------------
# decagons


def _patch_from_faces(faces: Iterable, prefix: str) -> Patch:
    p = Patch()
    for f in faces:
        p.add(classify_and_project(f))
    return p


def root_decagon_area() -> GoldenNumber:
    return 5 * TAU * TAU


def four_rhombohedra_faces(probe=DEFAULT_PROBE) -> list[RhombusFace]:
    """Lower faces of the four pairwise-adjacent rhombohedra, deduplicated.

    Their generator sets never contain the pair {1, 4}, so these faces
    cover the decagon except for the one rhombus spanned by k1 and k4.
    """
    faces = {}
    for i, j in ROOT_DECAGON_CENTERS:
        for f in rhombohedron_lower_faces(rhombohedron(i, j), probe):
            faces.setdefault(f.key, f)
    return [faces[k] for k in sorted(faces)]


def decagon_root(probe=DEFAULT_PROBE) -> Patch:
    """Rhombus tiling of the projected root cell (lower envelope)."""
    p = _patch_from_faces(root_envelope(probe), "root")
    if p.conflicts:
        raise TilingMismatch(f"selected faces overlap ({p.conflicts.count} conflicts)")
    if audit_disjoint(p):
        raise TilingMismatch("selected faces are not interior-disjoint")
    if p.area() != root_decagon_area():
        raise TilingMismatch(f"area {p.area()} differs from the decagon area {root_decagon_area()}")
    return p


@lru_cache(maxsize=1)
def _weight_hull() -> tuple:
    return tuple(convex_hull(Coord5(v.assignment) for v in permutohedron_vertices()))


def weight_hull() -> list[Coord5]:
    return list(_weight_hull())


def decagon_weight(probe=DEFAULT_PROBE) -> Patch:
    """Four-species tiling of the projected permutohedron."""
    p = Patch()
    for f in weight_envelope(probe):
        p.add(classify_and_project(f))
    if p.conflicts or audit_disjoint(p):
        raise TilingMismatch("lower-envelope faces of the weight cell overlap")
    hull_area = polygon_area(weight_hull())
    if p.area() != hull_area:
        raise TilingMismatch(f"patch area {p.area()} != hull area {hull_area}")
    return p


@lru_cache(maxsize=1)
def weight_decagon_circumradius() -> float:
    return max(math.hypot(*embed(v)) for v in weight_hull())


@lru_cache(maxsize=1)
def weight_decagon_inradius() -> float:
    hull = weight_hull()
    r = float("inf")
    for a, b in zip(hull, hull[1:] + hull[:1]):
        (ax, ay), (bx, by) = embed(a), embed(b)
        r = min(r, abs(ax * by - ay * bx) / math.hypot(bx - ax, by - ay))
    return r


# ----------------------------------------------------------------------
# growth


def _radius2(radius) -> Fraction:
    return Fraction(radius) ** 2


def _within(t: Tile, center: Coord5, r2: Fraction) -> bool:
    return plane_norm2(t.centroid() - center) <= GoldenNumber(r2)


def group_closure(elems: Iterable[AffineElement]) -> list[AffineElement]:
    """The finite group generated by ``elems`` (identity included)."""
    from .affine import IDENTITY

    found = {IDENTITY: None}
    frontier = [IDENTITY]
    gens = list(elems)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = compose(g, a)
                if b not in found:
                    found[b] = None
                    nxt.append(b)
                    if len(found) > 240:
                        raise ValueError("generators do not fix a common point")
        frontier = nxt
    return sorted(found, key=lambda e: (e.eps < 0, e.perm, e.t.c))


def orbit_closure(seed: Patch, gens: Sequence[AffineElement], radius, max_rounds: int,
                  center: Coord5 = ORIGIN) -> tuple[Patch, ConflictReport]:
    """Grow ``seed`` by images under ``gens`` out to ``radius`` from ``center``.

    Generators fixing ``center`` form a finite point group; tiles enter the
    patch only as whole orbits of that group, so the result keeps the
    symmetry even where images disagree.  An orbit member overlapping a
    stored tile rejects the orbit and is logged.  Each round applies every
    generator, in order, to the patch as it stood when the round began.
    """
    for g in gens:
        if not g.is_plane_compatible():
            raise NotPlaneCompatible(f"{g.describe()} does not preserve the Coxeter plane")
    r2 = _radius2(radius)
    sym = group_closure(g for g in gens if g(center) == center)
    patch = Patch()
    report = patch.conflicts

    def place(t: Tile) -> bool:
        orbit = {}
        for h in sym:
            img = transform_tile(t, h)
            orbit.setdefault(img.key, img)
        fresh = [orbit[k] for k in sorted(orbit) if k not in patch._tiles]
        trial = Patch()
        for o in fresh:
            clash = patch.overlapping(o) + trial.overlapping(o)
            if clash:
                for other in clash:
                    report.record(other, o)
                return False
            trial._insert(o)
        for o in fresh:
            patch._insert(o)
        return bool(fresh)

    for t in seed.tiles():
        place(t)
    for _ in range(max_rounds):
        current = patch.tiles()
        grew = False
        for g in gens:
            for t in current:
                img = transform_tile(t, g)
                if img.key in patch._tiles or not _within(img, center, r2):
                    continue
                grew |= place(img)
        if not grew:
            break
    return patch, report


def is_invariant(p: Patch, e: AffineElement) -> bool:
    return transform_patch(p, e).keys() == p.keys()


def is_invariant_within(p: Patch, e: AffineElement, center: Coord5, r2: Fraction) -> bool:
    """Invariance of the sub-patch within ``sqrt(r2)`` of ``center`` (an ``e``-fixed point)."""
    keys = {t.key for t in p.tiles() if _within(t, center, r2)}
    img = {transform_tile(p._tiles[k], e).key for k in keys}
    return img == keys


# ----------------------------------------------------------------------
# figure recipes

CENTER_K23 = K[2] + K[3]
CENTER_K5 = K[5]
DEFAULT_RADIUS = 4 * EDGE


def rotation_about(center: Coord5) -> AffineElement:
    rot = stabilizer_of(center)[1]
    assert rot.perm == ROTATION.perm
    return rot


def fig5_patch(probe=DEFAULT_PROBE) -> tuple[Patch, ConflictReport]:
    """The root decagon and its four rotations about k2 + k3."""
    base = decagon_root(probe)
    rot = rotation_about(CENTER_K23)
    patch = base
    img = base
    for _ in range(4):
        img = transform_patch(img, rot)
        patch, _ = patch_union(patch, img)
    return patch, patch.conflicts


def fig6_patch(radius=DEFAULT_RADIUS, max_rounds: int = 12, probe=DEFAULT_PROBE):
    """The ``fig5`` patch grown by the stabilizer of k2 + k3 together with C1."""
    seed, rep0 = fig5_patch(probe)
    gens = stabilizer_of(CENTER_K23) + [C1]
    patch, rep = orbit_closure(seed, gens, radius, max_rounds, center=CENTER_K23)
    rep.extend(rep0)
    return patch, rep


def fig7_seed(probe=DEFAULT_PROBE) -> Patch:
    """The ``fig5`` patch, its rotations by 4 pi / 5 about k5, and order-10 images of the decagon."""
    fig5, _ = fig5_patch(probe)
    group = extend_order20(stabilizer_of(CENTER_K5))
    rot2 = group[2]
    seed = fig5
    img = fig5
    for _ in range(4):
        img = transform_patch(img, rot2)
        seed, _ = patch_union(seed, img)
    base = decagon_root(probe)
    for g in group[10:]:
        if power_order(g) == 10:
            seed, _ = patch_union(seed, transform_patch(base, g))
    return seed


def power_order(e: AffineElement) -> int:
    from .affine import IDENTITY

    x = e
    for n in range(1, 21):
        if x == IDENTITY:
            return n
        x = compose(e, x)
    raise ValueError("element has no finite order up to 20")


def fig7_patch(radius=DEFAULT_RADIUS, max_rounds: int = 12, probe=DEFAULT_PROBE):
    """Order-20 closure about k5 of the ``fig7`` seed."""
    seed = fig7_seed(probe)
    group = extend_order20(stabilizer_of(CENTER_K5))
    patch, rep = orbit_closure(seed, group, radius, max_rounds, center=CENTER_K5)
    rep.extend(seed.conflicts)
    return patch, rep


def decagon_translates(radius: float, window: float | None = None) -> list[Coord5]:
    """Candidate weight-lattice translations (scaled by 5), nearest first.

    Kept: parallel image within ``radius`` plus the decagon circumradius,
    perpendicular image within ``window`` (default: the decagon
    circumradius), so the list is finite.  Ties in parallel length are
    broken by the canonical tuple.
    """
    import numpy as np

    r_par = radius + weight_decagon_circumradius()
    r_perp = weight_decagon_circumradius() if window is None else window
    bound = int(math.ceil((r_par + r_perp) / (5 * SQRT_2_5))) + 2
    rng = np.arange(-bound, bound + 1)
    grid = np.stack(np.meshgrid(rng, rng, rng, rng, indexing="ij"), -1).reshape(-1, 4)
    ang = 2 * np.pi * np.arange(1, 5) / 5
    # fifth coordinate is zero, so only k1..k4 contribute
    par = 5 * SQRT_2_5 * np.stack([grid @ np.cos(ang), grid @ np.sin(ang)], -1)
    perp = 5 * SQRT_2_5 * np.stack([grid @ np.cos(2 * ang), grid @ np.sin(2 * ang)], -1)
    n_par = (par ** 2).sum(1)
    n_perp = (perp ** 2).sum(1)
    slack = 1e-9
    keep = (n_par <= r_par ** 2 + slack) & (n_perp <= r_perp ** 2 + slack)
    rp2 = GoldenNumber(Fraction(r_par) ** 2)
    rq2 = GoldenNumber(Fraction(r_perp) ** 2)
    out = []
    for row, a, b in zip(grid[keep], n_par[keep], n_perp[keep]):
        v = Coord5(tuple(5 * int(x) for x in row) + (0,))
        if a > r_par ** 2 - slack and plane_norm2(v) > rp2:
            continue
        if b > r_perp ** 2 - slack and plane_norm2_perp(v) > rq2:
            continue
        out.append(v)
    out.sort(key=lambda v: (_SortKey(plane_norm2(v)), v.c))
    return out


class _SortKey:
    __slots__ = ("g",)

    def __init__(self, g: GoldenNumber) -> None:
        self.g = g

    def __lt__(self, other: _SortKey) -> bool:
        return self.g < other.g

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _SortKey) and self.g == other.g


@dataclass
class TessellationStats:
    placed: int
    skipped: int
    conflicts: int
    covered_area: GoldenNumber
    disk_area: float
    coverage: float
    translations: list


def weight_tessellation(radius: float, probe=DEFAULT_PROBE,
                        window: float | None = None) -> tuple[Patch, ConflictReport, TessellationStats]:
    """Greedy union of translated weight decagons out to ``radius``.

    A translate is placed only if every one of its tiles is already present
    or fits; otherwise it is skipped whole, counted, and the overlaps of its
    first clashing tile are logged.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    base = decagon_weight(probe)
    patch = Patch()
    report = ConflictReport()
    placed = []
    inr = weight_decagon_inradius()
    for v in decagon_translates(radius, window):
        if len(placed) and math.hypot(*embed(v)) - weight_decagon_circumradius() > radius:
            continue
        img = transform_patch(base, translation(v)) if not v.is_zero() else base
        clashes = []
        for t in img.tiles():
            if t.key not in patch._tiles:
                clashes = [(o, t) for o in patch.overlapping(t)]
                if clashes:
                    break
        if not clashes:
            for t in img.tiles():
                patch.add(t)
            placed.append(v)
        else:
            report.skipped += 1
            for o, t in clashes:
                report.record(o, t)
        if radius < inr:
            break
    covered = patch.area()
    unit = 0.4 * math.sin(math.pi / 5)
    disk = math.pi * radius ** 2
    stats = TessellationStats(len(placed), report.skipped, report.count, covered, disk,
                              float(covered) * unit / disk, placed)
    return patch, report, stats


def five_fold_centers(bound: int) -> list[tuple[tuple[int, int, int, int], Coord5]]:
    from .affine import fixed_point

    out = []
    seen = set()
    rng = range(-bound, bound + 1)
    for n1 in rng:
        for n2 in rng:
            for n3 in rng:
                for n4 in rng:
                    p = fixed_point(n1, n2, n3, n4)
                    if p in seen:
                        continue
                    stab = stabilizer_of(p)
                    if not all(g(p) == p for g in stab):
                        continue
                    seen.add(p)
                    out.append(((n1, n2, n3, n4), p))
    return out


