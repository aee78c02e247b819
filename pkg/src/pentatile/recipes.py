"""Named figure presets: each maps to tiling operations with fixed parameters."""
from __future__ import annotations

from typing import Callable

from .affine import C1, extend_order20, fixed_point, stabilizer_of
from .tiling import (
    CENTER_K23,
    CENTER_K5,
    EDGE,
    ConflictReport,
    Patch,
    decagon_root,
    decagon_weight,
    fig5_patch,
    fig6_patch,
    fig7_patch,
    orbit_closure,
    rotation_about,
    weight_decagon_circumradius,
    weight_tessellation,
)

DEFAULT_RADIUS_EDGES = 4.0
DEFAULT_ROUNDS = 12


def _meta(recipe: str, gens, radius, report: ConflictReport | None, **extra) -> dict:
    meta = {
        "recipe": recipe,
        "generators": [g.describe() for g in gens],
        "radius": radius,
        "conflicts": report.count if report else 0,
        "skipped": report.skipped if report else 0,
    }
    meta.update(extra)
    return meta


def fig4(radius_edges=None, rounds=None):
    return decagon_root(), _meta("fig4", [], None, None)


def fig5(radius_edges=None, rounds=None):
    p, rep = fig5_patch()
    return p, _meta("fig5", [rotation_about(CENTER_K23)], None, rep)


def fig6(radius_edges=None, rounds=None):
    r = (radius_edges or DEFAULT_RADIUS_EDGES) * EDGE
    p, rep = fig6_patch(radius=r, max_rounds=rounds or DEFAULT_ROUNDS)
    return p, _meta("fig6", stabilizer_of(CENTER_K23) + [C1], r, rep)


def fig7(radius_edges=None, rounds=None):
    r = (radius_edges or DEFAULT_RADIUS_EDGES) * EDGE
    p, rep = fig7_patch(radius=r, max_rounds=rounds or DEFAULT_ROUNDS)
    return p, _meta("fig7", extend_order20(stabilizer_of(CENTER_K5)), r, rep)


def fig8(radius_edges=None, rounds=None):
    return decagon_weight(), _meta("fig8", [], None, None)


def fig9(radius_edges=None, rounds=None):
    r = radius_edges * EDGE if radius_edges else 3 * weight_decagon_circumradius()
    p, rep, stats = weight_tessellation(r)
    return p, _meta("fig9", [], r, rep, placed=stats.placed, coverage=round(stats.coverage, 12),
                    covered_area=str(stats.covered_area))


RECIPES: dict[str, Callable] = {
    "fig4": fig4,
    "fig5": fig5,
    "fig6": fig6,
    "fig7": fig7,
    "fig8": fig8,
    "fig9": fig9,
}


def build(name: str, radius_edges: float | None = None, rounds: int | None = None) -> tuple[Patch, dict]:
    if name not in RECIPES:
        raise KeyError(f"unknown recipe {name!r}")
    return RECIPES[name](radius_edges, rounds)


def around_center(n: tuple[int, int, int, int], radius_edges: float = DEFAULT_RADIUS_EDGES,
                  rounds: int = DEFAULT_ROUNDS) -> tuple[Patch, dict]:
    """Root decagon grown by the stabilizer of a five-fold center together with C1."""
    center = fixed_point(*n)
    gens = stabilizer_of(center) + [C1]
    r = radius_edges * EDGE
    p, rep = orbit_closure(decagon_root(), gens, r, rounds, center=center)
    return p, _meta("center", gens, r, rep, center=list(n))
