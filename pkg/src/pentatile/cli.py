"""Command-line front end.  Reports are tab-delimited on stdout."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .affine import NotFivefoldCenter, matrix_export, named_elements
from .cells import cell_summary, permutohedron_vertices, root_cell_summary, root_cell_vertices
from .recipes import DEFAULT_RADIUS_EDGES, DEFAULT_ROUNDS, RECIPES, around_center, build
from .render import StyleConfig, dumps, export_json, render_figure, render_svg
from .tiling import Patch

MATRIX_NAMES = ["C1", "C2", "C3", "P", "eta", "R1", "R2", "T", "R10", "r0", "r1", "r2", "r3", "r4"]


def _outputs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--svg", metavar="PATH", help="write the patch as SVG")
    parser.add_argument("--json", metavar="PATH", help="write the patch as JSON")
    parser.add_argument("--scale", metavar="PX", type=float, default=200.0, help="SVG pixels per plane unit")


def _emit(p: Patch, meta: dict, args) -> None:
    print(f"recipe\t{meta.get('recipe')}")
    print(f"tiles\t{len(p)}")
    for kind, n in p.kind_counts().items():
        print(f"kind.{kind}\t{n}")
    print(f"area\t{p.area()}")
    for key in ("radius", "conflicts", "skipped", "placed", "coverage"):
        if key in meta and meta[key] is not None:
            print(f"{key}\t{meta[key]}")
    if args.svg:
        Path(args.svg).write_bytes(render_svg(p, StyleConfig(scale=args.scale)))
    if args.json:
        Path(args.json).write_text(dumps(export_json(p, meta)))


def _cmd_verify(args) -> int:
    from .verify import run_verify

    results, code = run_verify()
    for r in results:
        print(r.line())
    if args.figures:
        out = Path(args.figures)
        out.mkdir(parents=True, exist_ok=True)
        for name in RECIPES:
            p, _ = build(name)
            target = out / f"{name}.{args.format}"
            render_figure(p, target, title=name)
            print(f"FIGURE\t{name}\t{target}")
    return code


def _cmd_cell(args) -> int:
    if args.lattice == "root":
        summary = root_cell_summary()
        verts = [v.c for v in root_cell_vertices()]
    else:
        summary = cell_summary()
        verts = [v.assignment for v in permutohedron_vertices()]
    if args.summary:
        for line in summary.lines():
            print(line)
    else:
        for v in verts:
            print("\t".join(str(x) for x in v))
    return 0


def _cmd_decagon(args) -> int:
    p, meta = build("fig4" if args.lattice == "root" else "fig8")
    _emit(p, meta, args)
    return 0


def _parse_center(text: str) -> tuple[int, int, int, int]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("center must be four integers n1,n2,n3,n4")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("center must be four integers n1,n2,n3,n4")
    return parts


def _cmd_tile(args) -> int:
    if args.center is not None:
        try:
            p, meta = around_center(args.center, args.radius or DEFAULT_RADIUS_EDGES, args.rounds or DEFAULT_ROUNDS)
        except NotFivefoldCenter as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        p, meta = build(args.recipe, args.radius, args.rounds)
    _emit(p, meta, args)
    return 0


def _print_matrix(label: str, m: np.ndarray) -> None:
    for i, row in enumerate(m):
        print(f"{label}[{i}]\t" + "\t".join(f"{x:.12f}" if abs(x) > 5e-13 else "0.000000000000" for x in row))


def _cmd_matrices(args) -> int:
    e = named_elements()[args.element]
    print(f"element\t{args.element}\t{e.describe()}")
    plane, full = matrix_export(e)
    if plane is None:
        print("plane\tnot plane-compatible")
    else:
        _print_matrix("plane", plane)
    _print_matrix("full", full)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pentatile", description="Five-fold tilings from the A4 lattice cells.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the self-check suite")
    v.add_argument("--figures", metavar="DIR", help="also render every figure recipe into DIR")
    v.add_argument("--format", choices=["pdf", "svg"], default="pdf", help="figure format for --figures")
    v.set_defaults(func=_cmd_verify)

    c = sub.add_parser("cell", help="vertices or face census of a Voronoi cell")
    c.add_argument("--lattice", choices=["root", "weight"], required=True)
    c.add_argument("--summary", action="store_true", help="print the face census instead of vertices")
    c.set_defaults(func=_cmd_cell)

    d = sub.add_parser("decagon", help="tiled projection of a Voronoi cell")
    d.add_argument("--lattice", choices=["root", "weight"], required=True)
    _outputs(d)
    d.set_defaults(func=_cmd_decagon)

    t = sub.add_parser("tile", help="grow a patch from a figure recipe or a five-fold center")
    src = t.add_mutually_exclusive_group(required=True)
    src.add_argument("--recipe", choices=sorted(RECIPES))
    src.add_argument("--center", type=_parse_center, metavar="n1,n2,n3,n4")
    t.add_argument("--radius", type=float, help="growth radius in edge lengths")
    t.add_argument("--rounds", type=int, help="maximum growth rounds")
    _outputs(t)
    t.set_defaults(func=_cmd_tile)

    m = sub.add_parser("matrices", help="numeric matrices of a named group element")
    m.add_argument("--element", choices=MATRIX_NAMES, required=True)
    m.set_defaults(func=_cmd_matrices)
    return parser


def _join_center(argv: list[str]) -> list[str]:
    # argparse would read "-1,1,-1,1" as an option flag
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a == "--center":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--center={nxt}")
        else:
            out.append(a)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_center(sys.argv[1:] if argv is None else argv))
    if getattr(args, "radius", None) is not None and args.radius <= 0:
        parser.error("--radius must be positive")
    if getattr(args, "rounds", None) is not None and args.rounds < 0:
        parser.error("--rounds must be non-negative")
    if getattr(args, "scale", None) is not None and args.scale <= 0:
        parser.error("--scale must be positive")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
