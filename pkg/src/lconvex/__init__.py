"""Exact algebraic invariants of L-convex polyominoes.

The package computes, for polyominoes in which any two cells are joined by
a path with at most one turn: rook placement counts and the regularity of
the coordinate ring, the staircase (Ferrer) projection and its bipartite
graphs, the derived sequence with the Gorenstein and punctured-spectrum
classification, and the Cohen-Macaulay type both in closed form and by an
exact enumeration oracle over the join-irreducible poset.
"""

from .bigraphs import (
    BipartiteGraph,
    canonical_form,
    cell_graph,
    is_ferrer_graph,
    matching_count,
    same_canonical_graph,
    vertex_graph,
)
from .cmtype import (
    CaseValue,
    ClosedTypeResult,
    closed_cm_type,
    cm_type_two_rect,
    rectangle_sizes,
)
from .derived import (
    NumericGorensteinReport,
    SpectrumClass,
    derived_sequence,
    gorenstein_numeric,
    is_gorenstein,
    is_rectangle,
    punctured_spectrum_class,
    remove_max_width_rectangle,
)
from .enumeration import enumerate_ferrer, enumerate_l_convex
from .errors import (
    AmbiguousRealization,
    BoundTooLarge,
    DegenerateSizes,
    Disconnected,
    EmptyInput,
    InternalInconsistency,
    LConvexError,
    NoRealization,
    NotConvex,
    NotDescending,
    NotFerrer,
    NotLConvex,
    ParseError,
    PreconditionError,
    TooLarge,
    UnknownFormat,
    UnknownStyle,
)
from .geometry import (
    Cell,
    MaximalRectangle,
    Polyomino,
    from_cells,
    is_column_convex,
    is_convex,
    is_l_convex,
    is_row_convex,
    maximal_rectangles,
    transpose,
)
from .minors import (
    BinomialGenerator,
    edge_ring_presentation,
    export,
    inner_minors,
    lattice_points,
    substitution_vanishes,
)
from .poset import (
    ComponentReport,
    PosetQ,
    cm_type_oracle,
    component_purity,
    join_irreducible_poset,
    minimal_maps,
    poset_ideals,
    two_rectangle_poset,
)
from .projections import (
    ProjectionPair,
    ferrer_from_rows,
    ferrer_project,
    is_ferrer,
    is_unimodal,
    projections,
    reconstruct_l_convex,
)
from .render import ascii_art, render, svg
from .rooks import ferrer_rook_count, regularity, rook_count, rook_number
from .serialization import parse_input, polyomino_to_json

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
