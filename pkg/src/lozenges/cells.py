"""Unit triangles of the triangular lattice and their adjacency.

Coordinate system:
- row: horizontal strip index, increasing southward.  Strip r lies between
  the horizontal lattice lines y = r and y = r+1 (y in units of sqrt(3)/2
  times the side length).
- col: west-to-east index within a strip.  Up and Down cells are indexed
  independently: Up(r, k) has its base on the line y = r+1 spanning
  x in [k - r/2, k - r/2 + 1]; Down(r, k) hangs from the line y = r with
  its top edge spanning x in [k - r/2 + 1/2, k - r/2 + 3/2].  Reading a
  row west to east gives ... Up(r,k), Down(r,k), Up(r,k+1), Down(r,k+1) ...

Adjacency (every neighbour has the opposite orientation):
    Up(r, k) ~ Down(r, k)      shared NE edge ("east")
    Up(r, k) ~ Down(r, k-1)    shared NW edge ("west")
    Up(r, k) ~ Down(r+1, k)    shared horizontal edge ("south"); covering
                               both with one lozenge gives the vertical
                               (north-south pointing) rhombus

Doubled x-coordinates (integers, twice the real x) are used throughout so
all geometry stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class TriCell:
    """One unit triangle, addressed as (row, col, up)."""

    row: int
    col: int
    up: bool

    def neighbors(self) -> tuple["TriCell", ...]:
        """The at-most-three lattice neighbours, west to east to south/north."""
        r, k = self.row, self.col
        if self.up:
            return (
                TriCell(r, k - 1, False),  # west
                TriCell(r, k, False),      # east
                TriCell(r + 1, k, False),  # south
            )
        return (
            TriCell(r, k, True),       # west
            TriCell(r, k + 1, True),   # east
            TriCell(r - 1, k, True),   # north
        )

    def vertical_partner(self) -> "TriCell":
        """The cell completing the vertical lozenge with this one."""
        if self.up:
            return TriCell(self.row + 1, self.col, False)
        return TriCell(self.row - 1, self.col, True)

    @property
    def x2_west(self) -> int:
        """Doubled x of the cell's western tip (base-left for Up, top-left for Down)."""
        base = 2 * self.col - self.row
        return base if self.up else base + 1

    def scan_key(self) -> tuple[int, int]:
        """Row-major ordering key: row, then west-to-east within the row."""
        return (self.row, 2 * self.col + (0 if self.up else 1))

    def vertices(self) -> tuple[tuple[int, int], ...]:
        """Corners as (i, j) integer combinations of the basis (1,0), (1/2, h).

        j decreases southward: row r corresponds to j = -r.
        """
        i, j = self.col, -self.row
        if self.up:
            return ((i, j), (i + 1, j), (i, j + 1))
        return ((i + 1, j), (i, j + 1), (i + 1, j + 1))


def are_adjacent(a: TriCell, b: TriCell) -> bool:
    return b in a.neighbors()


def cell_from_vertices(verts: tuple[tuple[int, int], ...]) -> TriCell:
    """Inverse of TriCell.vertices for any unit triangle of the lattice."""
    js = sorted(v[1] for v in verts)
    if js[0] == js[1]:  # two corners on the lower j-line: up-pointing
        j = js[0]
        i = min(v[0] for v in verts if v[1] == j)
        return TriCell(-j, i, True)
    j = js[2]
    i = min(v[0] for v in verts if v[1] == j)
    return TriCell(1 - j, i, False)


def _rot60(v: tuple[int, int]) -> tuple[int, int]:
    i, j = v
    return (-j, i + j)


def _mirror(v: tuple[int, int]) -> tuple[int, int]:
    i, j = v
    return (i + j, -j)


def transform_cell(cell: TriCell, rotations: int = 0, reflect: bool = False) -> TriCell:
    """Apply a lattice point-group element: optional reflection across the
    horizontal axis, then `rotations` 60-degree turns."""
    verts = cell.vertices()
    if reflect:
        verts = tuple(_mirror(v) for v in verts)
    for _ in range(rotations % 6):
        verts = tuple(_rot60(v) for v in verts)
    return cell_from_vertices(verts)


def translate_cell(cell: TriCell, d_row: int, d_col: int) -> TriCell:
    return TriCell(cell.row + d_row, cell.col + d_col, cell.up)


def reflect_cell_vertical(cell: TriCell, axis_x2: int) -> TriCell:
    """Reflect across the vertical line x = axis_x2 / 2 (doubled coordinate)."""
    r = cell.row
    if cell.up:
        # base [x2, x2+2] maps to [2*axis - x2 - 2, 2*axis - x2]
        x2 = 2 * cell.col - r
        nx2 = 2 * axis_x2 - x2 - 2
        col2, rem = divmod(nx2 + r, 2)
        if rem:
            raise ValueError("axis does not map the cell lattice to itself")
        return TriCell(r, col2, True)
    x2 = 2 * cell.col - r + 1
    nx2 = 2 * axis_x2 - x2 - 2
    col2, rem = divmod(nx2 + r - 1, 2)
    if rem:
        raise ValueError("axis does not map the cell lattice to itself")
    return TriCell(r, col2, False)
