"""The join-irreducible poset of a staircase polyomino, its ideals, and the
Cohen-Macaulay type oracle.

The poset Q lives on two chains H_1 < ... < H_n (maximal horizontal edge
intervals, numbered bottom to top, the lowest one dropped) and
V_1 < ... < V_m (maximal vertical edge intervals, left to right, the
leftmost dropped), plus cross covers H_i < V_j: for each vertical interval
the lowest horizontal interval it meets, recorded once per horizontal
interval at the smallest such column.

The type oracle counts minimal strictly order-reversing maps on
Q-hat = Q with a global bottom and top adjoined: these maps index a basis
of the canonical module, and the minimal ones under pointwise division by
weakly order-reversing maps are its generators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import NotFerrer, TooLarge
from .geometry import Polyomino
from .projections import is_ferrer

DEFAULT_IDEAL_BOUND = 22
DEFAULT_ORACLE_BOUND = 14


@dataclass(frozen=True)
class PosetQ:
    """Two chains of sizes n and m plus cross covers (i, j): H_i < V_j.

    Cross covers are 1-based, strictly increasing in both coordinates.
    Element indices: 0..n-1 are H_1..H_n, n..n+m-1 are V_1..V_m.
    """

    n: int
    m: int
    cross_covers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("both chains must be nonempty")
        prev_i, prev_j = 0, 0
        for i, j in self.cross_covers:
            if not (1 <= i <= self.n and 1 <= j <= self.m):
                raise ValueError(f"cross cover ({i}, {j}) out of range")
            if i <= prev_i or j <= prev_j:
                raise ValueError("cross covers must increase in both coordinates")
            prev_i, prev_j = i, j

    def __len__(self) -> int:
        return self.n + self.m

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(f"H{i}" for i in range(1, self.n + 1)) + tuple(
            f"V{j}" for j in range(1, self.m + 1)
        )

    def cover_indices(self) -> list[tuple[int, int]]:
        """Hasse edges as (lower index, upper index) pairs, deterministic order."""
        cov = [(i - 1, i) for i in range(1, self.n)]
        cov += [(self.n + j - 1, self.n + j) for j in range(1, self.m)]
        cov += [(i - 1, self.n + j - 1) for i, j in self.cross_covers]
        return cov

    @property
    def rank(self) -> int:
        """Edge count of the longest chain."""
        return self.max_chain_size() - 1

    def max_chain_size(self) -> int:
        """Vertex count of the longest chain."""
        best = max(self.n, self.m)
        for i, j in self.cross_covers:
            best = max(best, i + (self.m - j + 1))
        return best

    def hasse_text(self) -> str:
        """Deterministic edge list of the Hasse diagram, one cover per line."""
        labels = self.labels
        return "\n".join(f"{labels[a]} < {labels[b]}" for a, b in self.cover_indices())


def join_irreducible_poset(f: Polyomino) -> PosetQ:
    """Build Q from a staircase polyomino.

    Horizontal edge intervals are numbered bottom to top (line y = i is
    H_i), vertical ones left to right (line x = j is V_j); index 0 on each
    side is dropped.  The cover H_i < V_j is recorded when i >= 1 is the
    lowest horizontal line meeting vertical interval j, and j is the
    smallest column with that lowest line.
    """
    if not is_ferrer(f):
        raise NotFerrer("join-irreducible poset is built from a staircase polyomino")
    m, n = f.bbox
    # horizontal interval on line y: x in [0, max width of adjacent rows]
    widths = [f.row_masks[y].bit_count() for y in range(n)]  # bottom-to-top, increasing
    h_hi = [max(widths[y - 1] if y > 0 else 0, widths[y] if y < n else 0) for y in range(n + 1)]
    # vertical interval on line x hangs from the top: y in [n - reach, n]
    col_h = [sum(1 for w in widths if w > x) for x in range(m)]
    v_lo = []
    for x in range(m + 1):
        a = col_h[x - 1] if x > 0 else 0
        b = col_h[x] if x < m else 0
        v_lo.append(n - max(a, b))
    covers = {}
    for j in range(1, m + 1):
        low = None
        for i in range(0, n + 1):
            if j <= h_hi[i] and v_lo[j] <= i:
                low = i
                break
        if low is None or low == 0:
            continue
        if low not in covers:
            covers[low] = j
    return PosetQ(n, m, tuple(sorted((i, j) for i, j in covers.items())))


def poset_ideals(q: PosetQ, bound: int = DEFAULT_IDEAL_BOUND) -> list[tuple[str, ...]]:
    """All down-closed subsets, each a sorted tuple of labels.

    Enumerated by recursive branching on a minimal element of the residual
    poset; the recursion tree has one leaf per ideal.
    """
    if len(q) > bound:
        raise TooLarge(f"poset has {len(q)} elements, bound is {bound}")
    size = len(q)
    covers = q.cover_indices()
    parents = [set() for _ in range(size)]
    for a, b in covers:
        parents[a].add(b)
    # every cover points to a larger index, so descending index order is a
    # reverse topological order and one pass closes the relation
    above = [set() for _ in range(size)]
    for a in range(size - 1, -1, -1):
        for b in parents[a]:
            above[a].add(b)
            above[a] |= above[b]
    below = [set() for _ in range(size)]
    for lo in range(size):
        for hi in above[lo]:
            below[hi].add(lo)

    labels = q.labels
    out: list[tuple[str, ...]] = []

    def walk(remaining: frozenset[int], chosen: frozenset[int]) -> None:
        if not remaining:
            out.append(tuple(sorted(labels[i] for i in chosen)))
            return
        x = min(i for i in remaining if not (below[i] & remaining))
        walk(remaining - {x} - above[x], chosen)          # ideals without x
        walk(remaining - {x}, chosen | {x})               # ideals with x
    walk(frozenset(range(size)), frozenset())
    return sorted(out, key=lambda t: (len(t), t))


@dataclass(frozen=True)
class ComponentReport:
    """One connected component of the Hasse diagram."""

    labels: tuple[str, ...]
    max_chain_sizes: tuple[int, ...]  # vertex counts of its maximal chains

    @property
    def is_pure(self) -> bool:
        return len(set(self.max_chain_sizes)) == 1

    @property
    def max_chain_lengths(self) -> tuple[int, ...]:
        return self.max_chain_sizes


def component_purity(q: PosetQ) -> list[ComponentReport]:
    """Connected components of the Hasse diagram with their maximal-chain
    sizes; a component is pure iff all its maximal chains are equally long."""
    size = len(q)
    covers = q.cover_indices()
    up = [[] for _ in range(size)]
    down = [[] for _ in range(size)]
    for a, b in covers:
        up[a].append(b)
        down[b].append(a)
    comp = [-1] * size
    ncomp = 0
    for start in range(size):
        if comp[start] != -1:
            continue
        stack = [start]
        comp[start] = ncomp
        while stack:
            x = stack.pop()
            for y in up[x] + down[x]:
                if comp[y] == -1:
                    comp[y] = ncomp
                    stack.append(y)
        ncomp += 1

    labels = q.labels
    reports = []
    for c in range(ncomp):
        members = [i for i in range(size) if comp[i] == c]
        sizes = []

        def chains(x: int, length: int) -> None:
            if not up[x]:
                sizes.append(length)
                return
            for y in up[x]:
                chains(y, length + 1)

        for x in members:
            if not down[x]:
                chains(x, 1)
        reports.append(ComponentReport(tuple(labels[i] for i in members), tuple(sorted(sizes))))
    return reports


def _prefix_ideals(q: PosetQ) -> list[tuple[int, int]]:
    """Down-sets of Q in prefix form (a, b): the first a of the H-chain and
    first b of the V-chain; closure demands that a cover (i, j) with j <= b
    forces i <= a."""
    out = []
    for a in range(q.n + 1):
        for b in range(q.m + 1):
            if all(i <= a for i, j in q.cross_covers if j <= b):
                out.append((a, b))
    return out


def _chain_combos(bound: int, size: int) -> np.ndarray:
    combos = np.array(list(itertools.combinations(range(1, bound + 1), size)), dtype=np.int64)
    return combos[:, ::-1]  # descending: column i-1 holds the value of the i-th chain element


def cm_type_oracle(
    q: PosetQ,
    value_bound: int | None = None,
    size_bound: int = DEFAULT_ORACLE_BOUND,
    chunk: int = 1 << 18,
) -> int:
    """Number of minimal strictly order-reversing maps on Q-hat, i.e. the
    Cohen-Macaulay type of the associated ring.

    Candidates assign strictly decreasing values (upward) along each chain,
    within [1, value_bound], filtered by the cross covers; the bottom
    element takes its forced value (maximum on Q plus one), the top takes 0.

    value_bound=None uses |Q|, which is provably sufficient: a minimal map
    takes every value 1..max on Q plus the bottom element, else subtracting
    the indicator of the down-set above a missing value gives a smaller
    valid map.

    A candidate is minimal iff no single down-set indicator can be
    subtracted without breaking strictness (subtracting one summand of a
    weakly order-reversing map keeps the rest weakly order-reversing, so
    single-indicator tests suffice).
    """
    n, m = q.n, q.m
    if n + m > size_bound:
        raise TooLarge(f"poset has {n + m} elements, oracle bound is {size_bound}")
    bound = value_bound if value_bound is not None else n + m
    if bound < q.max_chain_size():
        return 0
    hvals = _chain_combos(bound, n)
    vvals = _chain_combos(bound, m)
    ideals = [(a, b) for a, b in _prefix_ideals(q) if (a, b) != (0, 0)]
    covers = q.cover_indices()

    total = 0
    vblock = max(1, chunk // max(1, hvals.shape[0]))
    for vstart in range(0, vvals.shape[0], vblock):
        vv = vvals[vstart:vstart + vblock]
        # cross-cover filter between the two sides
        mask = np.ones((hvals.shape[0], vv.shape[0]), dtype=bool)
        for i, j in q.cross_covers:
            mask &= hvals[:, i - 1][:, None] > vv[:, j - 1][None, :]
        hi, vi = np.nonzero(mask)
        if hi.size == 0:
            continue
        x = np.concatenate([hvals[hi], vv[vi]], axis=1)
        total += int(_minimal_mask(x, n, m, covers, ideals).sum())
    return total


def _minimal_mask(x: np.ndarray, n: int, m: int, covers, ideals) -> np.ndarray:
    maxes = x.max(axis=1)
    dominated = np.zeros(x.shape[0], dtype=bool)
    for a, b in ideals:
        ind = np.zeros(n + m, dtype=np.int64)
        ind[:a] = 1
        ind[n:n + b] = 1
        y = x - ind
        ok = ~dominated
        for p in range(n + m):
            if ind[p]:
                ok &= x[:, p] >= 2  # values stay >= 1 after subtraction
        for p, r in covers:
            ok &= y[:, p] > y[:, r]  # strictness survives on every cover
        ok &= maxes > y.max(axis=1)  # new bottom value (old max) still exceeds all
        dominated |= ok
    return ~dominated


def minimal_maps(q: PosetQ, value_bound: int | None = None, size_bound: int = 12) -> list[tuple[int, ...]]:
    """The minimal strictly order-reversing maps themselves, as value tuples
    over (H_1..H_n, V_1..V_m); the bottom element implicitly takes max+1."""
    n, m = q.n, q.m
    if n + m > size_bound:
        raise TooLarge(f"poset has {n + m} elements, bound is {size_bound}")
    bound = value_bound if value_bound is not None else n + m
    if bound < q.max_chain_size():
        return []
    hvals = _chain_combos(bound, n)
    vvals = _chain_combos(bound, m)
    mask = np.ones((hvals.shape[0], vvals.shape[0]), dtype=bool)
    for i, j in q.cross_covers:
        mask &= hvals[:, i - 1][:, None] > vvals[:, j - 1][None, :]
    hi, vi = np.nonzero(mask)
    if hi.size == 0:
        return []
    x = np.concatenate([hvals[hi], vvals[vi]], axis=1)
    ideals = [(a, b) for a, b in _prefix_ideals(q) if (a, b) != (0, 0)]
    keep = _minimal_mask(x, n, m, q.cover_indices(), ideals)
    return sorted(tuple(int(v) for v in row) for row in x[keep])


def two_rectangle_poset(m: int, s: int, t: int, n: int) -> PosetQ:
    """Q of the L-convex polyomino covered by an m-wide, s-tall rectangle
    and a t-wide, n-tall one (s < n, t < m): two chains plus the single
    cover H_{n-s} < V_{t+1}."""
    return PosetQ(n, m, ((n - s, t + 1),))
