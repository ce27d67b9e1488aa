"""Regions of the triangular lattice and the named region families.

A Region is an immutable set of TriCells plus an edge-weight map on
adjacent cell pairs (weight 1 where absent).  Weighted pairs are keyed by
frozenset({cell_a, cell_b}).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping

from .cells import TriCell, are_adjacent, reflect_cell_vertical, transform_cell, translate_cell

WeightKey = frozenset  # frozenset of two adjacent TriCells


class Region:
    """Immutable cell set with positive rational lozenge weights."""

    __slots__ = ("_cells", "_weights")

    def __init__(self, cells: Iterable[TriCell], weights: Mapping[WeightKey, Fraction] | None = None):
        self._cells = frozenset(cells)
        wmap: dict[WeightKey, Fraction] = {}
        for key, w in (weights or {}).items():
            pair = frozenset(key)
            if len(pair) != 2:
                raise ValueError(f"weight key must be a pair of cells, got {key}")
            ca, cb = pair
            if ca not in self._cells or cb not in self._cells:
                raise ValueError(f"weighted pair {pair} not contained in the region")
            if not are_adjacent(ca, cb):
                raise ValueError(f"weighted pair {pair} is not adjacent")
            w = Fraction(w)
            if w <= 0:
                raise ValueError(f"weights must be positive, got {w}")
            if w != 1:
                wmap[pair] = w
        self._weights = wmap

    @property
    def cells(self) -> frozenset:
        return self._cells

    @property
    def weights(self) -> dict:
        return dict(self._weights)

    def weight(self, a: TriCell, b: TriCell) -> Fraction:
        return self._weights.get(frozenset((a, b)), Fraction(1))

    def up_count(self) -> int:
        return sum(1 for c in self._cells if c.up)

    def down_count(self) -> int:
        return len(self._cells) - self.up_count()

    def is_balanced(self) -> bool:
        return self.up_count() == self.down_count()

    def __len__(self) -> int:
        return len(self._cells)

    def __contains__(self, cell: TriCell) -> bool:
        return cell in self._cells

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Region)
            and self._cells == other._cells
            and self._weights == other._weights
        )

    def __hash__(self) -> int:
        return hash((self._cells, frozenset(self._weights.items())))

    def __repr__(self) -> str:
        return f"Region({len(self._cells)} cells, {len(self._weights)} weighted pairs)"

    def sorted_cells(self) -> list[TriCell]:
        return sorted(self._cells, key=TriCell.scan_key)


def is_balanced(region: Region) -> bool:
    return region.is_balanced()


def remove_cells(region: Region, cells: Iterable[TriCell]) -> Region:
    """Region minus the given cells; weight entries touching them are dropped."""
    gone = frozenset(cells)
    missing = gone - region.cells
    if missing:
        raise ValueError(f"cells not in region: {sorted(missing, key=TriCell.scan_key)}")
    kept = region.cells - gone
    weights = {pair: w for pair, w in region.weights.items() if not (pair & gone)}
    return Region(kept, weights)


def translate_region(region: Region, d_row: int, d_col: int) -> Region:
    move = lambda c: translate_cell(c, d_row, d_col)
    return Region(
        (move(c) for c in region.cells),
        {frozenset(map(move, pair)): w for pair, w in region.weights.items()},
    )


def transform_region(region: Region, rotations: int = 0, reflect: bool = False) -> Region:
    """Apply a lattice isometry (reflection first, then 60-degree rotations)."""
    move = lambda c: transform_cell(c, rotations, reflect)
    return Region(
        (move(c) for c in region.cells),
        {frozenset(map(move, pair)): w for pair, w in region.weights.items()},
    )


def reflect_region_vertical(region: Region, axis_x2: int) -> Region:
    move = lambda c: reflect_cell_vertical(c, axis_x2)
    return Region(
        (move(c) for c in region.cells),
        {frozenset(map(move, pair)): w for pair, w in region.weights.items()},
    )


# --- hexagon construction ---------------------------------------------------

def hexagon_cells(north: int, ne: int, se: int, south: int, sw: int, nw: int) -> set[TriCell]:
    """Cells of the 120-degree hexagon with the given clockwise side lengths.

    The north side spans row-line 0 starting at doubled-x 1; the NE and SE
    walls bound the rows on the east, the NW and SW walls on the west.
    Degenerate (zero) sides are allowed.
    """
    sides = (north, ne, se, south, sw, nw)
    if min(sides) < 0:
        raise ValueError(f"side lengths must be non-negative: {sides}")
    if (north + ne != south + sw) or (ne + se != sw + nw) or (se + south != nw + north):
        raise ValueError(f"not a valid 120-degree hexagon: {sides}")
    cells: set[TriCell] = set()
    x2_tl, x2_tr = 1, 1 + 2 * north
    for r in range(ne + se):
        x2_bl = x2_tl + (-1 if r < nw else +1)
        x2_br = x2_tr + (+1 if r < ne else -1)
        for x2 in range(x2_bl, x2_br, 2):  # up cells: doubled base-left x
            cells.add(TriCell(r, (x2 + r) // 2, True))
        for x2 in range(x2_tl, x2_tr, 2):  # down cells: doubled top-left x
            cells.add(TriCell(r, (x2 + r - 1) // 2, False))
        x2_tl, x2_tr = x2_bl, x2_br
    return cells


def build_hexagon(a: int, b: int, c: int) -> Region:
    """Hexagon with side lengths a, b, c, a, b, c read clockwise from the NE side."""
    return Region(hexagon_cells(c, a, b, c, a, b))


# --- region JSON format ------------------------------------------------------

def _cell_to_json(cell: TriCell) -> dict:
    return {"row": cell.row, "col": cell.col, "up": cell.up}


def _cell_from_json(obj) -> TriCell:
    if isinstance(obj, dict):
        return TriCell(int(obj["row"]), int(obj["col"]), bool(obj["up"]))
    row, col, up = obj
    return TriCell(int(row), int(col), bool(up))


def region_to_json_dict(region: Region) -> dict:
    cells = [_cell_to_json(c) for c in region.sorted_cells()]
    weights = []
    for pair, w in sorted(
        region.weights.items(), key=lambda kv: sorted(c.scan_key() for c in kv[0])
    ):
        ca, cb = sorted(pair, key=TriCell.scan_key)
        weights.append(
            {
                "a": [ca.row, ca.col, ca.up],
                "b": [cb.row, cb.col, cb.up],
                "w": f"{w.numerator}/{w.denominator}" if w.denominator != 1 else str(w.numerator),
            }
        )
    return {"cells": cells, "weights": weights}


def region_from_json_dict(data: dict) -> Region:
    cells = [_cell_from_json(c) for c in data.get("cells", [])]
    weights = {}
    for entry in data.get("weights", []):
        pair = frozenset((_cell_from_json(entry["a"]), _cell_from_json(entry["b"])))
        weights[pair] = Fraction(entry["w"])
    return Region(cells, weights)


def dump_region(region: Region, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(region_to_json_dict(region), fh, indent=1)
        fh.write("\n")


def load_region(path: str) -> Region:
    with open(path, "r", encoding="utf-8") as fh:
        return region_from_json_dict(json.load(fh))
