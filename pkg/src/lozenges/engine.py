"""Matching generating functions by two independent exact engines.

count_bruteforce pivots on the first uncovered cell in row-major order and
branches over its incident lozenges; count_dp sweeps the cells once in the
same order, memoizing on the profile of already-covered frontier cells.
Both return exact values: an int for unweighted regions, a Fraction once
any lozenge weight differs from 1.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .cells import TriCell
from .regions import Region

BRUTE_CELL_LIMIT = 64
DP_WIDTH_LIMIT = 24


class EngineLimitError(RuntimeError):
    """A configured engine resource limit was exceeded."""


def _brute_limit() -> int:
    return int(os.environ.get("TILINGS_BRUTE_LIMIT", BRUTE_CELL_LIMIT))


def _dp_width_limit() -> int:
    return int(os.environ.get("TILINGS_DP_WIDTH", DP_WIDTH_LIMIT))


class DualGraph:
    """Bipartite dual of a region: one vertex per cell, one edge per shared edge."""

    def __init__(self, region: Region):
        order = region.sorted_cells()
        self.cells: list[TriCell] = order
        self.index: dict[TriCell, int] = {c: i for i, c in enumerate(order)}
        self.up_vertices = [c for c in order if c.up]
        self.down_vertices = [c for c in order if not c.up]
        self.adj: list[list[tuple[int, Fraction]]] = [[] for _ in order]
        self.edges: list[tuple[int, int, Fraction]] = []
        for i, cell in enumerate(order):
            for nb in cell.neighbors():
                j = self.index.get(nb)
                if j is not None and j > i:
                    w = region.weight(cell, nb)
                    self.edges.append((i, j, w))
                    self.adj[i].append((j, w))
                    self.adj[j].append((i, w))

    def __len__(self) -> int:
        return len(self.cells)

    def faces(self) -> list[list[int]]:
        """Face cycles of the planar embedding, outer face included.

        Each directed edge is traversed once; a face is the vertex cycle
        obtained by always leaving along the next edge clockwise from the
        one we arrived on.
        """
        nbrs: dict[int, list[int]] = {}
        for i, cell in enumerate(self.cells):
            ordered = []
            for nb in _ccw_neighbors(cell):
                j = self.index.get(nb)
                if j is not None:
                    ordered.append(j)
            nbrs[i] = ordered
        seen: set[tuple[int, int]] = set()
        faces = []
        for i in nbrs:
            for j in nbrs[i]:
                if (i, j) in seen:
                    continue
                face = []
                u, v = i, j
                while (u, v) not in seen:
                    seen.add((u, v))
                    face.append(u)
                    around = nbrs[v]
                    k = around.index(u)
                    u, v = v, around[(k - 1) % len(around)]
                faces.append(face)
        return faces


def _ccw_neighbors(cell: TriCell) -> tuple[TriCell, ...]:
    # Neighbour directions in counterclockwise rotation around the cell
    # centre (screen y grows southward): Up cell edges face E, W, S at
    # angles -60, 240... enumerated E, S, W; Down cell edges E, N, W.
    r, k = cell.row, cell.col
    if cell.up:
        return (TriCell(r, k, False), TriCell(r + 1, k, False), TriCell(r, k - 1, False))
    return (TriCell(r, k + 1, True), TriCell(r - 1, k, True), TriCell(r, k, True))


def dual_graph(region: Region) -> DualGraph:
    return DualGraph(region)


def _zero_for(region: Region):
    return Fraction(0) if region.weights else 0


def _one_for(region: Region):
    return Fraction(1) if region.weights else 1


def count_bruteforce(region: Region, limit: int | None = None):
    """M(region) by exhaustive branching; 0 if untileable, 1 for the empty region."""
    limit = _brute_limit() if limit is None else limit
    if len(region) > limit:
        raise EngineLimitError(
            f"brute-force cell limit exceeded: {len(region)} cells > limit {limit}"
            " (TILINGS_BRUTE_LIMIT)"
        )
    if not region.is_balanced():
        return _zero_for(region)
    graph = DualGraph(region)
    n = len(graph)
    covered = [False] * n
    one = _one_for(region)
    zero = _zero_for(region)

    def count_from(start: int):
        i = start
        while i < n and covered[i]:
            i += 1
        if i == n:
            return one
        total = zero
        covered[i] = True
        for j, w in graph.adj[i]:
            if not covered[j]:
                covered[j] = True
                total += w * count_from(i + 1)
                covered[j] = False
        covered[i] = False
        return total

    return count_from(0)


def profile_width(region: Region) -> int:
    """Max number of not-yet-scanned cells adjacent to already-scanned ones."""
    graph = DualGraph(region)
    n = len(graph)
    ahead = [max((j for j, _ in graph.adj[i]), default=i) for i in range(n)]
    width = 0
    reach: list[int] = []
    for i in range(n):
        reach.append(ahead[i])
        cut = sum(1 for k, far in enumerate(reach) if k <= i < far)
        width = max(width, cut)
    return width


def count_dp(region: Region, width_limit: int | None = None):
    """M(region) by a row-major profile sweep; exact, agrees with count_bruteforce."""
    width_limit = _dp_width_limit() if width_limit is None else width_limit
    width = profile_width(region)
    if width > width_limit:
        raise EngineLimitError(
            f"profile width {width} exceeds DP width limit {width_limit}"
            " (TILINGS_DP_WIDTH)"
        )
    if not region.is_balanced():
        return _zero_for(region)
    graph = DualGraph(region)
    n = len(graph)
    one = _one_for(region)
    # states: bitmask over cells i.. (bit t = cell i+t already covered)
    states = {0: one}
    for i in range(n):
        nxt: dict[int, object] = {}
        for mask, val in states.items():
            if mask & 1:
                key = mask >> 1
                if key in nxt:
                    nxt[key] += val
                else:
                    nxt[key] = val
                continue
            for j, w in graph.adj[i]:
                if j < i:
                    continue
                bit = 1 << (j - i)
                if mask & bit:
                    continue
                key = (mask | bit) >> 1
                add = val * w
                if key in nxt:
                    nxt[key] += add
                else:
                    nxt[key] = add
        states = nxt
    return states.get(0, _zero_for(region))


def enumerate_tilings(region: Region, limit: int = 1000) -> list[frozenset]:
    """All tilings as frozensets of lozenges (cell pairs), lexicographically ordered."""
    if not region.is_balanced():
        return []
    graph = DualGraph(region)
    n = len(graph)
    covered = [False] * n
    out: list[frozenset] = []
    current: list[tuple[int, int]] = []

    def walk(start: int) -> None:
        i = start
        while i < n and covered[i]:
            i += 1
        if i == n:
            if len(out) >= limit:
                raise EngineLimitError(f"more than {limit} tilings; raise the limit")
            out.append(frozenset(frozenset((graph.cells[p], graph.cells[q])) for p, q in current))
            return
        covered[i] = True
        for j, _ in graph.adj[i]:
            if not covered[j]:
                covered[j] = True
                current.append((i, j))
                walk(i + 1)
                current.pop()
                covered[j] = False
        covered[i] = False

    walk(0)

    def tiling_key(t: frozenset) -> list:
        return sorted(sorted(c.scan_key() for c in pair) for pair in t)

    out.sort(key=tiling_key)
    return out


def tiling_weight(region: Region, tiling: frozenset):
    total = _one_for(region)
    for pair in tiling:
        a, b = pair
        total *= region.weight(a, b)
    return total
