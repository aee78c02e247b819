"""Voronoi cells of the A4 root lattice and of its weight lattice.

The root cell is the zonotope spanned by ``k1..k5`` (30 vertices, 20
rhombohedral facets).  The weight cell is the permutohedron of order 5;
its faces are enumerated as ordered set partitions of the positions
``{1..5}``, the block sizes giving the face dimension.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial

from .golden import GoldenNumber
from .lattice import K, Coord5, inner4, plane_norm2

COEFFS = (5, 4, 3, 2, 1)


class BadIndices(ValueError):
    pass


# ----------------------------------------------------------------------
# root lattice cell


def root_cell_vertices() -> list[Coord5]:
    pts = set()
    for i in range(1, 6):
        pts.add(K[i])
        pts.add(-K[i])
    for i, j in combinations(range(1, 6), 2):
        pts.add(K[i] + K[j])
        pts.add(-(K[i] + K[j]))
    return sorted(pts)


def radius_classes() -> dict[GoldenNumber, list[Coord5]]:
    out: dict[GoldenNumber, list[Coord5]] = {}
    for v in root_cell_vertices():
        out.setdefault(plane_norm2(v), []).append(v)
    return out


@dataclass(frozen=True)
class RhombusFace:
    """A rhombic 2-face ``base + {0, k_a, k_b, k_a + k_b}`` of a root-cell facet."""

    base: Coord5
    a: int
    b: int

    @property
    def vertices(self) -> tuple[Coord5, Coord5, Coord5, Coord5]:
        ka, kb = K[self.a], K[self.b]
        return (self.base, self.base + ka, self.base + ka + kb, self.base + kb)

    @property
    def key(self) -> tuple:
        return tuple(sorted(self.vertices))


@dataclass(frozen=True)
class Rhombohedron:
    i: int
    j: int

    @property
    def root(self) -> Coord5:
        return K[self.i] - K[self.j]

    @property
    def base(self) -> Coord5:
        return K[self.i]

    @property
    def generators(self) -> tuple[int, int, int]:
        return tuple(m for m in range(1, 6) if m not in (self.i, self.j))

    @property
    def vertices(self) -> list[Coord5]:
        gens = self.generators
        out = []
        for bits in product((0, 1), repeat=3):
            v = self.base
            for g, on in zip(gens, bits):
                if on:
                    v = v + K[g]
            out.append(v)
        return out

    @property
    def center(self) -> Coord5:
        return self.root / 2

    def faces(self) -> list[tuple[RhombusFace, int]]:
        """The six rhombic faces, each with the index of the generator it omits.

        Faces come in opposite pairs: the one at ``base`` and the one
        shifted by the omitted generator.
        """
        gens = self.generators
        out = []
        for c in gens:
            a, b = (g for g in gens if g != c)
            out.append((RhombusFace(self.base, a, b), c))
            out.append((RhombusFace(self.base + K[c], a, b), c))
        return out


def rhombohedron(i: int, j: int) -> Rhombohedron:
    if i == j or not (1 <= i <= 5 and 1 <= j <= 5):
        raise BadIndices(f"need distinct indices in 1..5, got ({i}, {j})")
    return Rhombohedron(i, j)


def all_rhombohedra() -> list[Rhombohedron]:
    return [Rhombohedron(i, j) for i in range(1, 6) for j in range(1, 6) if i != j]


def root_polytope_vertices() -> list[Coord5]:
    return sorted(K[i] - K[j] for i in range(1, 6) for j in range(1, 6) if i != j)


# ----------------------------------------------------------------------
# weight lattice cell (permutohedron)


@dataclass(frozen=True)
class PermutoVertex:
    assignment: tuple  # coefficient placed on positions 1..5

    @property
    def point(self) -> Coord5:
        return Coord5(self.assignment)

    def label(self) -> str:
        return "".join(str(x) for x in self.assignment)


def permutohedron_vertices() -> list[PermutoVertex]:
    return [PermutoVertex(p) for p in permutations(COEFFS)]


def ordered_partitions(block_sizes: tuple[int, ...]):
    """All ordered set partitions of positions 1..5 with the given block sizes."""
    def rec(remaining, sizes):
        if not sizes:
            yield ()
            return
        for block in combinations(sorted(remaining), sizes[0]):
            for rest in rec(remaining - set(block), sizes[1:]):
                yield (frozenset(block),) + rest
    yield from rec(set(range(1, 6)), block_sizes)


def compositions_of_five(dof: int):
    """Ordered block-size tuples summing to 5 with ``sum(size - 1) == dof``."""
    nblocks = 5 - dof

    def rec(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(1, total - parts + 2):
            for rest in rec(total - first, parts - 1):
                yield (first,) + rest
    yield from rec(5, nblocks)


def partition_vertices(blocks: tuple) -> list[tuple]:
    """Coefficient tuples of the vertices of the face labelled by ``blocks``.

    The first block receives the largest coefficients, the next block the
    next largest, and so on; within a block any arrangement is allowed.
    """
    values = list(COEFFS)
    pieces = []
    for blk in blocks:
        vals = values[:len(blk)]
        values = values[len(blk):]
        pieces.append((sorted(blk), vals))
    out = []
    for arrangement in product(*(permutations(vals) for _, vals in pieces)):
        a = [0] * 5
        for (positions, _), arr in zip(pieces, arrangement):
            for pos, val in zip(positions, arr):
                a[pos - 1] = val
        out.append(tuple(a))
    return out


def _adjacent(u: tuple, v: tuple) -> bool:
    diff = [i for i in range(5) if u[i] != v[i]]
    return (len(diff) == 2 and u[diff[0]] == v[diff[1]] and u[diff[1]] == v[diff[0]]
            and abs(u[diff[0]] - u[diff[1]]) == 1)


def boundary_cycle(verts: list[tuple]) -> list[tuple]:
    """Cyclic order of a 2-face's vertices along consecutive-value swaps.

    Starts at the lexicographically largest vertex and steps first to the
    smaller of its two neighbours.
    """
    start = max(verts)
    nbrs = {v: sorted(w for w in verts if _adjacent(v, w)) for v in verts}
    if any(len(n) != 2 for n in nbrs.values()):
        raise ValueError("vertex set is not a polygon under adjacent swaps")
    cycle = [start]
    prev, cur = start, nbrs[start][0]
    while cur != start:
        cycle.append(cur)
        a, b = nbrs[cur]
        prev, cur = cur, (b if a == prev else a)
    return cycle


@dataclass(frozen=True)
class PermutoFace:
    blocks: tuple  # ordered tuple of frozensets

    @property
    def kind(self) -> str:
        sizes = sorted(len(b) for b in self.blocks)
        if sizes == [1, 1, 3]:
            return "hexagon"
        if sizes == [1, 2, 2]:
            return "square"
        raise ValueError(f"not a 2-face: {self.blocks}")

    @property
    def boundary(self) -> list[tuple]:
        return boundary_cycle(partition_vertices(self.blocks))

    @property
    def points(self) -> list[Coord5]:
        return [Coord5(a) for a in self.boundary]

    @property
    def moving_blocks(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(b)) for b in self.blocks if len(b) > 1]

    def label(self) -> str:
        return "(" + ",".join("{" + ",".join(str(x) for x in sorted(b)) + "}" for b in self.blocks) + ")"


def _faces_of_dim(dof: int) -> list[tuple]:
    out = []
    for sizes in compositions_of_five(dof):
        out.extend(ordered_partitions(sizes))
    return out


@lru_cache(maxsize=None)
def permutohedron_edges() -> tuple:
    return tuple(_faces_of_dim(1))


@lru_cache(maxsize=None)
def permutohedron_faces() -> tuple:
    return tuple(PermutoFace(b) for b in _faces_of_dim(2))


@dataclass(frozen=True)
class PermutoFacet:
    blocks: tuple

    @property
    def kind(self) -> str:
        sizes = sorted(len(b) for b in self.blocks)
        return "truncated octahedron" if sizes == [1, 4] else "hexagonal prism"


@lru_cache(maxsize=None)
def permutohedron_facets() -> tuple:
    return tuple(PermutoFacet(b) for b in _faces_of_dim(3))


def census_formula(dof: int) -> int:
    """Number of ordered set partitions of 5 elements with ``sum(|B|-1) == dof``."""
    total = 0
    for sizes in compositions_of_five(dof):
        m = factorial(5)
        for sz in sizes:
            m //= factorial(sz)
        total += m
    return total


@dataclass(frozen=True)
class CellSummary:
    n0: int
    n1: int
    n2: int
    n3: int
    sub: dict

    @property
    def euler(self) -> int:
        return self.n0 - self.n1 + self.n2 - self.n3

    def lines(self) -> list[str]:
        out = [f"N0\t{self.n0}", f"N1\t{self.n1}", f"N2\t{self.n2}", f"N3\t{self.n3}"]
        out += [f"{k}\t{v}" for k, v in sorted(self.sub.items())]
        out.append(f"euler\t{self.euler}")
        return out


def cell_summary() -> CellSummary:
    faces = permutohedron_faces()
    facets = permutohedron_facets()
    sub = {
        "faces.hexagon": sum(f.kind == "hexagon" for f in faces),
        "faces.square": sum(f.kind == "square" for f in faces),
        "facets.truncated_octahedron": sum(f.kind == "truncated octahedron" for f in facets),
        "facets.hexagonal_prism": sum(f.kind == "hexagonal prism" for f in facets),
    }
    return CellSummary(len(permutohedron_vertices()), len(permutohedron_edges()),
                       len(faces), len(facets), sub)


def root_cell_summary() -> CellSummary:
    """Face counts of the root-lattice cell (a zonotope on five generators)."""
    verts = root_cell_vertices()
    edges = set()
    faces = set()
    for r in all_rhombohedra():
        for face, _ in r.faces():
            faces.add(face.key)
            vs = face.vertices
            for p, q in zip(vs, vs[1:] + vs[:1]):
                edges.add(tuple(sorted((p, q))))
    return CellSummary(len(verts), len(edges), len(faces), 20,
                       {"facets.rhombohedron": 20, "faces.rhombus": len(faces)})


def simplex_count() -> int:
    """Simplices in the pyramid decomposition: 6 per rhombohedral facet."""
    return 20 * factorial(3)


def check_rhombohedron_hyperplane(r: Rhombohedron) -> bool:
    return all(inner4(v, r.root) == 1 for v in r.vertices)


def thick_thin_angle(a: int, b: int) -> str:
    """``'thick'`` for plane angle 72 between k_a and k_b, ``'thin'`` for 144."""
    step = (a - b) % 5
    return "thick" if step in (1, 4) else "thin"
