"""Bipartite graphs attached to a convex polyomino and matching counts.

Two graphs are used: the cell graph (one left vertex per cell column, one
right vertex per cell row, an edge per cell) and the vertex graph (one
vertex per maximal vertical / horizontal edge interval of the lattice, an
edge per intersecting pair).  Rows are numbered top to bottom on both.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotConvex
from .geometry import Polyomino, is_convex
from .projections import projections


@dataclass(frozen=True)
class BipartiteGraph:
    """Labeled bipartite graph; edges are (left index, right index) pairs."""

    left_labels: tuple[str, ...]
    right_labels: tuple[str, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.edges:
            if not (0 <= i < len(self.left_labels) and 0 <= j < len(self.right_labels)):
                raise ValueError(f"edge ({i}, {j}) out of range")

    @property
    def left_size(self) -> int:
        return len(self.left_labels)

    @property
    def right_size(self) -> int:
        return len(self.right_labels)

    def left_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.left_size
        for i, _ in self.edges:
            deg[i] += 1
        return tuple(deg)

    def right_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.right_size
        for _, j in self.edges:
            deg[j] += 1
        return tuple(deg)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def cell_graph(p: Polyomino) -> BipartiteGraph:
    """Left vertex X_j per column, right vertex Y_i per row (top to bottom);
    an edge per cell.  Degrees equal the projections."""
    if not is_convex(p):
        raise NotConvex("cell graph is defined for convex polyominoes")
    m, n = p.bbox
    edges = frozenset((x, n - 1 - y) for x, y in p.cells)
    return BipartiteGraph(
        tuple(f"X{j}" for j in range(1, m + 1)),
        tuple(f"Y{i}" for i in range(1, n + 1)),
        edges,
    )


def _vertical_intervals(p: Polyomino) -> list[tuple[int, int, int]]:
    """Maximal vertical edge intervals, one per lattice line x = 0..m, as
    (x, ylo, yhi).  Convexity makes the edges on each line one interval."""
    m, n = p.bbox
    out = []
    for x in range(m + 1):
        ys = [y for (cx, y) in p.cells if cx in (x - 1, x)]
        out.append((x, min(ys), max(ys) + 1))
    return out


def _horizontal_intervals(p: Polyomino) -> list[tuple[int, int, int]]:
    """Maximal horizontal edge intervals, one per lattice line y = 0..n, as
    (y, xlo, xhi)."""
    out = []
    _, n = p.bbox
    for y in range(n + 1):
        xs = [x for (x, cy) in p.cells if cy in (y - 1, y)]
        out.append((y, min(xs), max(xs) + 1))
    return out


def vertex_graph(p: Polyomino) -> BipartiteGraph:
    """Left vertex x_i per maximal vertical edge interval (left to right),
    right vertex y_j per maximal horizontal edge interval (top to bottom);
    an edge where the two intervals meet."""
    if not is_convex(p):
        raise NotConvex("vertex graph is defined for convex polyominoes")
    m, n = p.bbox
    vert = _vertical_intervals(p)
    horiz = _horizontal_intervals(p)
    edges = set()
    for i, (x, ylo, yhi) in enumerate(vert):
        for jj, (y, xlo, xhi) in enumerate(horiz):
            j = n - y  # top-to-bottom index
            if xlo <= x <= xhi and ylo <= y <= yhi:
                edges.add((i, j))
    left = tuple(f"x{i}[{x},{ylo}..{yhi}]" for i, (x, ylo, yhi) in enumerate(vert))
    right_by_index = sorted(((n - y, y, xlo, xhi) for y, xlo, xhi in horiz))
    right = tuple(f"y{j}[{y},{xlo}..{xhi}]" for j, y, xlo, xhi in right_by_index)
    return BipartiteGraph(left, right, frozenset(edges))


def is_ferrer_graph(g: BipartiteGraph) -> bool:
    """Staircase condition with the given labels: the two corner edges are
    present and every edge (i, j) forces all edges (r, s) with r <= i,
    s <= j."""
    p, q = g.left_size, g.right_size
    if (0, q - 1) not in g.edges or (p - 1, 0) not in g.edges:
        return False
    maxj = [-1] * p
    for i, j in g.edges:
        maxj[i] = max(maxj[i], j)
    # downward closure: edge set must equal {(i, j): j <= maxj[i]} with maxj decreasing
    for i in range(p - 1):
        if maxj[i] < maxj[i + 1]:
            return False
    return len(g.edges) == sum(mj + 1 for mj in maxj if mj >= 0)


def canonical_form(g: BipartiteGraph) -> BipartiteGraph:
    """Reorder both parts by weakly decreasing degree (stable) and relabel.

    For cell and vertex graphs of L-convex polyominoes, neighborhoods are
    nested along the degree order, so equality of canonical forms decides
    isomorphism within that class.
    """
    ld, rd = g.left_degrees(), g.right_degrees()
    lorder = sorted(range(g.left_size), key=lambda i: (-ld[i], i))
    rorder = sorted(range(g.right_size), key=lambda j: (-rd[j], j))
    lpos = {old: new for new, old in enumerate(lorder)}
    rpos = {old: new for new, old in enumerate(rorder)}
    return BipartiteGraph(
        tuple(g.left_labels[i] for i in lorder),
        tuple(g.right_labels[j] for j in rorder),
        frozenset((lpos[i], rpos[j]) for i, j in g.edges),
    )


def same_canonical_graph(a: BipartiteGraph, b: BipartiteGraph) -> bool:
    """Isomorphism test by canonical form (labels ignored)."""
    ca, cb = canonical_form(a), canonical_form(b)
    return (
        ca.left_size == cb.left_size
        and ca.right_size == cb.right_size
        and ca.edges == cb.edges
    )


def matching_count(g: BipartiteGraph, k: int) -> int:
    """Exact number of k-edge matchings.

    Recurses over vertices of the smaller part (match to a free neighbor or
    skip) with a per-call memo keyed by the residual state: (next vertex,
    free-vertex mask of the other part, edges still needed).  Exponential in
    the worst case; fine at desk scale.
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    flip = g.left_size > g.right_size
    if flip:
        small = g.right_size
        adj = [[] for _ in range(small)]
        for i, j in g.edges:
            adj[j].append(i)
    else:
        small = g.left_size
        adj = [[] for _ in range(small)]
        for i, j in g.edges:
            adj[i].append(j)
    memo: dict[tuple[int, int, int], int] = {}

    def count(v: int, used: int, need: int) -> int:
        if need == 0:
            return 1
        if v == small or small - v < need:
            return 0
        key = (v, used, need)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = count(v + 1, used, need)
        for w in adj[v]:
            if not used >> w & 1:
                total += count(v + 1, used | 1 << w, need - 1)
        memo[key] = total
        return total

    return count(0, 0, k)
