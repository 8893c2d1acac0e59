"""Inner 2-minor generators of the polyomino ideal and text export.

A proper lattice interval whose cells all belong to the polyomino
contributes the binomial x_a*x_b - x_c*x_d on its diagonal/anti-diagonal
corners.  Variables are named x_<col>_<row> from the 0-based lattice
coordinates, which keeps exported fixtures diff-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from string import Template

from .bigraphs import _horizontal_intervals, _vertical_intervals
from .errors import NotConvex, UnknownFormat
from .geometry import Polyomino, is_convex

Point = tuple[int, int]


@dataclass(frozen=True)
class BinomialGenerator:
    """x_a*x_b - x_c*x_d for a proper interval [a, b] inside the polyomino."""

    a: Point  # lower-left corner
    b: Point  # upper-right corner

    @property
    def c(self) -> Point:
        return (self.a[0], self.b[1])

    @property
    def d(self) -> Point:
        return (self.b[0], self.a[1])

    def variables(self) -> tuple[str, str, str, str]:
        return tuple(_var(p) for p in (self.a, self.b, self.c, self.d))

    def plain(self) -> str:
        va, vb, vc, vd = self.variables()
        return f"{va}*{vb} - {vc}*{vd}"


def _var(p: Point) -> str:
    return f"x_{p[0]}_{p[1]}"


def _interval_inside(p: Polyomino, a: Point, b: Point) -> bool:
    return all(
        (x, y) in p.cells for x in range(a[0], b[0]) for y in range(a[1], b[1])
    )


def inner_minors(p: Polyomino) -> list[BinomialGenerator]:
    """All inner 2-minors, ordered lexicographically by (a, b)."""
    m, n = p.bbox
    out = []
    for ax in range(m + 1):
        for ay in range(n + 1):
            for bx in range(ax + 1, m + 1):
                for by in range(ay + 1, n + 1):
                    if _interval_inside(p, (ax, ay), (bx, by)):
                        out.append(BinomialGenerator((ax, ay), (bx, by)))
    out.sort(key=lambda g: (g.a, g.b))
    return out


def lattice_points(p: Polyomino) -> list[Point]:
    """Vertices of the polyomino (corners of its cells), sorted."""
    pts = set()
    for x, y in p.cells:
        pts.update({(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)})
    return sorted(pts)


def edge_ring_presentation(p: Polyomino) -> tuple[tuple[str, ...], dict[str, tuple[str, str]]]:
    """Toric parametrization onto the vertex-graph variables.

    Each lattice point v sits on exactly one maximal vertical and one
    maximal horizontal edge interval (the polyomino is convex); v's
    variable maps to the product of those two interval variables.  Returns
    (interval variable names, {x_<col>_<row>: (vertical var, horizontal var)}).
    """
    if not is_convex(p):
        raise NotConvex("edge-ring presentation is defined for convex polyominoes")
    _, n = p.bbox
    vert = _vertical_intervals(p)
    horiz = _horizontal_intervals(p)
    vvars = {x: f"u{i}" for i, (x, _, _) in enumerate(vert)}
    hvars = {y: f"w{n - y}" for (y, _, _) in horiz}
    mapping: dict[str, tuple[str, str]] = {}
    for px, py in lattice_points(p):
        vx = next((x for x, ylo, yhi in vert if x == px and ylo <= py <= yhi), None)
        hy = next((y for y, xlo, xhi in horiz if y == py and xlo <= px <= xhi), None)
        if vx is None or hy is None:
            raise NotConvex(f"vertex ({px}, {py}) lies on no interval pair")
        mapping[_var((px, py))] = (vvars[vx], hvars[hy])
    variables = tuple(vvars[x] for x, _, _ in vert) + tuple(
        hvars[y] for y in sorted((y for y, _, _ in horiz), key=lambda y: n - y)
    )
    return variables, mapping


def substitution_vanishes(gen: BinomialGenerator, mapping: dict[str, tuple[str, str]]) -> bool:
    """Check x_a*x_b - x_c*x_d maps to zero under the parametrization, as
    multisets of interval variables."""
    va, vb, vc, vd = gen.variables()
    pos = sorted(mapping[va] + mapping[vb])
    neg = sorted(mapping[vc] + mapping[vd])
    return pos == neg


def available_templates() -> list[str]:
    files = resources.files("lconvex") / "templates"
    return sorted(f.name.removesuffix(".tmpl") for f in files.iterdir() if f.name.endswith(".tmpl"))


def export(generators, fmt: str, template: str = "macaulay2", name: str = "I") -> str:
    """Render generators as text: 'plain' (one binomial per line), 'json',
    or 'cas-script' (a shipped header/body/footer template)."""
    generators = list(generators)
    if fmt == "plain":
        return "\n".join(g.plain() for g in generators) + ("\n" if generators else "")
    if fmt == "json":
        payload = [
            {
                "positive": [list(g.a), list(g.b)],
                "negative": [list(g.c), list(g.d)],
                "text": g.plain(),
            }
            for g in generators
        ]
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "cas-script":
        variables = sorted({v for g in generators for v in g.variables()})
        body = ",\n  ".join(g.plain() for g in generators)
        tmpl_path = resources.files("lconvex") / "templates" / f"{template}.tmpl"
        try:
            text = tmpl_path.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise UnknownFormat(f"no such template: {template} (have {available_templates()})")
        return Template(text).substitute(
            name=name,
            variables=", ".join(variables) if variables else "",
            generators=body,
        )
    raise UnknownFormat(f"unknown format: {fmt}")
