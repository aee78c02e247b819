"""Five-fold tilings of the plane from the Voronoi cells of the A4 lattices."""
from __future__ import annotations

from .affine import (
    C1,
    C2,
    C3,
    ETA,
    P,
    AffineElement,
    NotARoot,
    NotFivefoldCenter,
    NotPlaneCompatible,
    apply,
    compose,
    coxeter,
    extend_order20,
    fixed_point,
    h2_generators,
    inverse,
    matrix_export,
    reflection,
    stabilizer_of,
    translation,
    translation_h2,
)
from .cells import CellSummary, Rhombohedron, cell_summary, rhombohedron, root_cell_summary
from .golden import SIGMA, TAU, GoldenNumber
from .lattice import K, ORIGIN, Coord5, canonical, cross_par, embed, inner4, plane_norm2
from .render import EmptyPatch, SchemaError, StyleConfig, export_json, import_json, render_svg
from .tiling import (
    ConflictReport,
    Patch,
    Tile,
    TileKind,
    TilingMismatch,
    decagon_root,
    decagon_weight,
    five_fold_centers,
    orbit_closure,
    patch_union,
    transform_patch,
    weight_tessellation,
)

__version__ = "0.1.0"
