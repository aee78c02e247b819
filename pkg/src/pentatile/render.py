"""SVG and JSON output for patches, plus matplotlib vector figures."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .lattice import Coord5, embed
from .tiling import Patch, TileKind, make_tile

SCHEMA = "pentatile.patch/1"
SCALE_NOTE = "xy in plane units; |k_i| projects to sqrt(2/5)"


class EmptyPatch(ValueError):
    pass


class SchemaError(ValueError):
    pass


DEFAULT_FILLS = {
    TileKind.THICK_RHOMBUS_ROOT: "#e8a33d",
    TileKind.THIN_RHOMBUS_ROOT: "#3d7be8",
    TileKind.UNIT_RHOMBUS_WEIGHT: "#e8d43d",
    TileKind.TAU_RHOMBUS_WEIGHT: "#3dbfa0",
    TileKind.THICK_HEXAGON_WEIGHT: "#d0573f",
    TileKind.THIN_HEXAGON_WEIGHT: "#8a5fd0",
}


@dataclass(frozen=True)
class StyleConfig:
    fills: dict = field(default_factory=lambda: dict(DEFAULT_FILLS))
    stroke: str = "#202020"
    stroke_width: float = 0.01  # plane units
    scale: float = 200.0  # pixels per plane unit


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _bounds(p: Patch) -> tuple[float, float, float, float]:
    xs, ys = [], []
    for t in p.tiles():
        for x, y in t.xy():
            xs.append(x)
            ys.append(-y)
    return min(xs), min(ys), max(xs), max(ys)


def render_svg(p: Patch, style: StyleConfig | None = None) -> bytes:
    """Deterministic SVG 1.1: one polygon per tile in canonical key order."""
    style = style or StyleConfig()
    tiles = [t for t in p.tiles() if t.kind != TileKind.DEGENERATE_SEGMENT]
    if not tiles:
        raise EmptyPatch("nothing to draw")
    x0, y0, x1, y1 = _bounds(p)
    mx = 0.05 * max(x1 - x0, 1e-9)
    my = 0.05 * max(y1 - y0, 1e-9)
    x0, y0, x1, y1 = x0 - mx, y0 - my, x1 + mx, y1 + my
    w, h = x1 - x0, y1 - y0
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(w * style.scale)}" height="{_fmt(h * style.scale)}" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
        f'<g stroke="{style.stroke}" stroke-width="{_fmt(style.stroke_width)}" stroke-linejoin="round">',
    ]
    for t in tiles:
        pts = " ".join(f"{_fmt(x)},{_fmt(-y)}" for x, y in t.xy())
        out.append(f'<polygon class="{t.kind.value}" fill="{style.fills[t.kind]}" points="{pts}"/>')
    out.append("</g>")
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")


def render_figure(p: Patch, path: str | Path, style: StyleConfig | None = None, title: str = "") -> None:
    """Vector figure via matplotlib (format from the suffix: .svg or .pdf)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.collections import PolyCollection

    style = style or StyleConfig()
    tiles = p.tiles()
    if not tiles:
        raise EmptyPatch("nothing to draw")
    path = Path(path)
    if path.suffix.lower() not in (".svg", ".pdf"):
        raise ValueError("figures are vector only: use .svg or .pdf")
    with matplotlib.rc_context({"svg.hashsalt": "pentatile", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(6, 6))
        polys = [t.xy() for t in tiles]
        colors = [style.fills[t.kind] for t in tiles]
        ax.add_collection(PolyCollection(polys, facecolors=colors, edgecolors=style.stroke, linewidths=0.5))
        ax.autoscale_view()
        ax.set_aspect("equal")
        ax.axis("off")
        if title:
            ax.set_title(title)
        fig.savefig(path, metadata={"Date": None} if path.suffix.lower() == ".svg" else {"CreationDate": None})
        plt.close(fig)


# ----------------------------------------------------------------------
# JSON


def _num_out(x) -> Any:
    if isinstance(x, int):
        return x
    return str(x)


def _num_in(x) -> Fraction | int:
    if isinstance(x, bool):
        raise SchemaError("booleans are not coordinates")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad rational {x!r}") from exc
    raise SchemaError(f"coordinate must be an integer or a 'p/q' string, got {x!r}")


def _xy(v: Coord5) -> list[float]:
    return [round(c, 12) + 0.0 for c in embed(v)]


def export_json(p: Patch, meta: dict | None = None) -> dict:
    """Patch document; the exact tuples are authoritative, ``xy`` is derived."""
    tiles = []
    for t in p.tiles():
        tiles.append({
            "kind": t.kind.value,
            "vertices": [[_num_out(c) for c in v.c] for v in t.vertices],
            "xy": [_xy(v) for v in t.vertices],
        })
    return {"schema": SCHEMA, "scale": SCALE_NOTE, "tiles": tiles, "meta": dict(meta or {})}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def import_json(doc: dict | str) -> Patch:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("document must be an object")
    if doc.get("schema") != SCHEMA:
        raise SchemaError(f"unknown schema {doc.get('schema')!r}")
    tiles = doc.get("tiles")
    if not isinstance(tiles, list):
        raise SchemaError("'tiles' must be a list")
    kinds = {k.value: k for k in TileKind}
    out = Patch()
    for i, entry in enumerate(tiles):
        if not isinstance(entry, dict) or "kind" not in entry or "vertices" not in entry:
            raise SchemaError(f"tile {i}: needs 'kind' and 'vertices'")
        kind = kinds.get(entry["kind"])
        if kind is None:
            raise SchemaError(f"tile {i}: unknown kind {entry['kind']!r}")
        verts = entry["vertices"]
        if not isinstance(verts, list) or len(verts) < 2:
            raise SchemaError(f"tile {i}: 'vertices' must list points")
        pts = []
        for v in verts:
            if not isinstance(v, list) or len(v) != 5:
                raise SchemaError(f"tile {i}: each vertex needs 5 coordinates")
            pts.append(Coord5(_num_in(c) for c in v))
        try:
            tile = make_tile(kind, pts)
        except ValueError as exc:
            raise SchemaError(f"tile {i}: {exc}") from exc
        out.add(tile)
    if out.conflicts:
        raise SchemaError("document tiles overlap")
    return out
