"""JSON input/output for polyominoes.

Input documents carry either explicit cells or row/column projections:

    {"cells": [[x, y], ...]}
    {"H": [h1, ...], "V": [v1, ...]}     # rows top-to-bottom, columns left-to-right

The projection form is resolved through the unique L-convex realization.
"""

from __future__ import annotations

import json

from .errors import NoRealization, ParseError
from .geometry import Polyomino, from_cells
from .projections import ProjectionPair, projections, reconstruct_l_convex


def parse_input(text: str) -> Polyomino:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object")
    if "cells" in doc:
        cells = doc["cells"]
        if not isinstance(cells, list) or not all(
            isinstance(c, list) and len(c) == 2 for c in cells
        ):
            raise ParseError('"cells" must be a list of [x, y] pairs')
        return from_cells([(int(x), int(y)) for x, y in cells])
    if "H" in doc and "V" in doc:
        try:
            pp = ProjectionPair(tuple(int(x) for x in doc["H"]), tuple(int(x) for x in doc["V"]))
        except (TypeError, ValueError) as exc:
            raise NoRealization(f"bad projections: {exc}") from exc
        return reconstruct_l_convex(pp)
    raise ParseError('expected "cells" or "H"/"V" keys')


def polyomino_to_json(p: Polyomino) -> str:
    pp = projections(p)
    doc = {
        "cells": [list(c) for c in p.sorted_cells()],
        "bbox": list(p.bbox),
        "H": list(pp.h),
        "V": list(pp.v),
    }
    return json.dumps(doc, sort_keys=True)
