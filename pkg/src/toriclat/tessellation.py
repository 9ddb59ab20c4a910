"""Polyomino fundamental regions and the coset-transversal tiling test.

A polyomino with q cells tiles the torus under translation by the q
codewords exactly when its cells lie in pairwise distinct cosets of the
code.  Both that criterion and the direct exact-cover check are run side
by side; they must always agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .codes import CodewordSet, codewords
from .lattice import Cell, TorusLattice


@dataclass(frozen=True)
class Polyomino:
    """An edge-connected set of cell offsets, normalized to the corner.

    Cells are stored sorted row-major with min x = min y = 0.  The origin
    itself need not be a cell (the radius-1 Lee sphere has none at its
    bounding-box corner).
    """

    cells: tuple[Cell, ...]

    def __post_init__(self) -> None:
        if not self.cells:
            raise ValueError("polyomino needs at least one cell")
        if len(set(self.cells)) != len(self.cells):
            raise ValueError("duplicate cells")
        if min(x for x, _ in self.cells) != 0 or min(y for _, y in self.cells) != 0:
            raise ValueError("cells must be normalized; use Polyomino.from_cells")
        if not _connected(self.cells):
            raise ValueError("cells must form one edge-connected component")

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "Polyomino":
        """Normalize arbitrary integer offsets and sort them row-major."""
        pts = set((int(x), int(y)) for x, y in cells)
        if not pts:
            raise ValueError("polyomino needs at least one cell")
        min_x = min(x for x, _ in pts)
        min_y = min(y for _, y in pts)
        shifted = sorted(((x - min_x, y - min_y) for x, y in pts),
                         key=lambda c: (c[1], c[0]))
        return cls(tuple(shifted))

    @property
    def area(self) -> int:
        return len(self.cells)


def _connected(cells: tuple[Cell, ...]) -> bool:
    todo = {cells[0]}
    seen: set[Cell] = set()
    members = set(cells)
    while todo:
        x, y = todo.pop()
        seen.add((x, y))
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nb in members and nb not in seen:
                todo.add(nb)
    return len(seen) == len(cells)


def canonical_polyomino(lattice: TorusLattice) -> Polyomino:
    """The q-cell tiling shape for the code on the given lattice.

    For n >= 3 it is a (q'+1)-wide, 3-tall block plus a one-wide strip of
    height r in column q'+1, where g = 3*q' + r.  For q = 5 it is the 2x2
    square plus a single cell; the extra cell attaches at (2, 1), since
    placing it at (2, 0) would put two cells a codeword apart
    ((2,0) - (0,1) = (2,-1), which marks a region anchor).
    """
    q = lattice.q
    if q == 5:
        cells = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)]
    else:
        q_prime, r = divmod(lattice.g, 3)
        cells = [(i, j) for i in range(q_prime + 1) for j in range(3)]
        cells += [(q_prime + 1, j) for j in range(r)]
    shape = Polyomino.from_cells(cells)
    ok, witness = is_fundamental_region(codewords(lattice), shape)
    if not ok:
        raise RuntimeError(
            f"internal error: canonical shape for q={q} is not a fundamental "
            f"region (witness {witness})")
    return shape


def lee_sphere(radius: int = 1) -> Polyomino:
    """The radius-1 Lee sphere (plus-shape); the alternate q = 5 tile."""
    if radius != 1:
        raise ValueError("only radius 1 is supported")
    return Polyomino.from_cells([(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)])


def is_fundamental_region(
    code: CodewordSet, shape: "Polyomino | Iterable[Cell]"
) -> tuple[bool, tuple[Cell, Cell] | None]:
    """Whether codeword translates of the shape tile the torus exactly.

    Accepts a Polyomino or any iterable of q distinct cells (the test is
    translation-invariant and does not need connectivity).  Returns
    (ok, witness); on failure the witness is a pair of shape cells that
    differ by a codeword modulo q, i.e. share a coset.
    """
    cells = shape.cells if isinstance(shape, Polyomino) else tuple(set(shape))
    lattice = code.lattice
    q = lattice.q
    if len(cells) != q:
        raise ValueError(f"shape has {len(cells)} cells, expected q={q}")
    cw = code.cell_set

    distinct = True
    witness: tuple[Cell, Cell] | None = None
    for i in range(len(cells)):
        ax, ay = cells[i]
        for j in range(i + 1, len(cells)):
            bx, by = cells[j]
            if ((ax - bx) % q, (ay - by) % q) in cw:
                distinct = False
                witness = (cells[i], cells[j])
                break
        if not distinct:
            break

    covered = bytearray(q * q)
    clash = False
    for kx, ky in code.codewords:
        for px, py in cells:
            idx = ((ky + py) % q) * q + (kx + px) % q
            if covered[idx]:
                clash = True
            covered[idx] = 1
    covers = not clash and all(covered)

    if distinct != covers:
        raise AssertionError("coset and exact-cover checks disagree")
    return distinct, witness


@dataclass(frozen=True)
class Tiling:
    """Assignment of every lattice cell to the region anchored at a codeword."""

    lattice: TorusLattice
    shape: Polyomino
    anchors: CodewordSet
    cell_to_anchor: tuple[int, ...]

    def anchor_of(self, cell: Cell) -> int:
        return self.cell_to_anchor[self.lattice.cell_index(cell)]

    def region(self, k: int) -> tuple[Cell, ...]:
        """The q cells assigned to anchor index k, row-major."""
        q = self.lattice.q
        return tuple((i % q, i // q) for i, a in enumerate(self.cell_to_anchor)
                     if a == k)


def tessellate(code: CodewordSet, shape: Polyomino) -> Tiling:
    """Tile the torus by the shape; every cell gets a unique anchor index."""
    ok, witness = is_fundamental_region(code, shape)
    if not ok:
        raise ValueError(
            f"shape is not a fundamental region: cells {witness[0]} and "
            f"{witness[1]} lie in the same coset")
    lattice = code.lattice
    q = lattice.q
    assign = [-1] * (q * q)
    for k, (kx, ky) in enumerate(code.codewords):
        for px, py in shape.cells:
            assign[((ky + py) % q) * q + (kx + px) % q] = k
    return Tiling(lattice, shape, code, tuple(assign))


_SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"


def render_ascii(tiling: Tiling) -> str:
    """Character grid of anchor indices, one row per lattice row."""
    q = tiling.lattice.q
    rows = []
    if q <= len(_SYMBOLS):
        for y in range(q):
            rows.append("".join(_SYMBOLS[tiling.cell_to_anchor[y * q + x]]
                                for x in range(q)))
    else:
        width = len(str(q - 1))
        for y in range(q):
            rows.append(" ".join(f"{tiling.cell_to_anchor[y * q + x]:>{width}}"
                                 for x in range(q)))
    return "\n".join(rows) + "\n"


def render_svg(tiling: Tiling, cell_size: int = 24) -> str:
    """SVG with one unit square per cell, colored by anchor, X on anchors."""
    q = tiling.lattice.q
    s = cell_size
    side = q * s
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" '
        f'height="{side}" viewBox="0 0 {side} {side}">'
    ]
    for y in range(q):
        for x in range(q):
            anchor = tiling.cell_to_anchor[y * q + x]
            hue = (360 * anchor) // q
            parts.append(
                f'<rect x="{x * s}" y="{y * s}" width="{s}" height="{s}" '
                f'fill="hsl({hue},65%,72%)" stroke="black" stroke-width="1"/>')
    pad = s // 4
    for kx, ky in tiling.anchors.codewords:
        x0, y0 = kx * s + pad, ky * s + pad
        x1, y1 = (kx + 1) * s - pad, (ky + 1) * s - pad
        parts.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
                     f'stroke="black" stroke-width="2"/>')
        parts.append(f'<line x1="{x0}" y1="{y1}" x2="{x1}" y2="{y0}" '
                     f'stroke="black" stroke-width="2"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
