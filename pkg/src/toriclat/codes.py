"""The cyclic code on the q x q grid, its generator vectors, and
classification helpers.

The code is the order-q subgroup of Z_q x Z_q spanned by (1, g) with
g = 2*(n-1); its elements mark the cells where tiling regions are
anchored.  A signed pair (c, d) is an alternative generator exactly when
d is congruent to g*c modulo q, neither component vanishes modulo q, and
the multiples of (c, d) span the whole subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import isqrt

from .lattice import Cell, TorusLattice, Vector


@dataclass(frozen=True)
class CodewordSet:
    """The cyclic subgroup <(1, g)>; codewords[k] is k*(1, g) mod q."""

    lattice: TorusLattice
    codewords: tuple[Cell, ...]

    @cached_property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.codewords)

    def contains(self, cell: Cell) -> bool:
        return cell in self.cell_set


@dataclass(frozen=True)
class GeneratorSet:
    """All signed vectors generating the same code as (1, g)."""

    lattice: TorusLattice
    vectors: frozenset[Vector]


def codewords(lattice: TorusLattice) -> CodewordSet:
    """The q multiples of (1, g); one codeword in every column."""
    q, g = lattice.q, lattice.g
    return CodewordSet(lattice, tuple((k, (k * g) % q) for k in range(q)))


def _spans_code(q: int, vec: Vector, code_cells: frozenset[Cell]) -> bool:
    span = frozenset(((k * vec[0]) % q, (k * vec[1]) % q) for k in range(q))
    return span == code_cells


def generates_same_code(lattice: TorusLattice, vec: Vector) -> bool:
    """True when the mod-q multiples of vec give exactly the code's cells."""
    return _spans_code(lattice.q, vec, codewords(lattice).cell_set)


def generator_set(lattice: TorusLattice) -> GeneratorSet:
    """Enumerate every generating pair (c, d) with components in +-{1..q-1}.

    For each c the procedure takes d = g*c mod q and records (c, d) and
    (c, d-q), then drops pairs with a component divisible by q.  The
    zero-component test alone is not sufficient for composite q -- at
    q = 15 the pair (3, 6) survives it yet spans only a subgroup of
    order 5 -- so candidates must also span the full code.
    """
    q, g = lattice.q, lattice.g
    code_cells = codewords(lattice).cell_set
    found: set[Vector] = set()
    for c in range(-(q - 1), q):
        if c == 0:
            continue
        d = (g * c) % q
        for cand in ((c, d), (c, d - q)):
            if cand[0] % q == 0 or cand[1] % q == 0:
                continue
            if _spans_code(q, cand, code_cells):
                found.add(cand)
    return GeneratorSet(lattice, frozenset(found))


def is_perfect(lattice: TorusLattice) -> bool:
    """Exactly one codeword in every row and in every column of the grid."""
    cw = codewords(lattice).codewords
    q = lattice.q
    return len({x for x, _ in cw}) == q and len({y for _, y in cw}) == q


def is_sum_of_two_squares(q: int) -> tuple[bool, tuple[int, int] | None]:
    """Whether x**2 + y**2 = q is solvable in integers, with a witness.

    Searches the smallest positive x; y = 0 is allowed (9 = 3**2 + 0**2).
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    for x in range(1, isqrt(q) + 1):
        rem = q - x * x
        y = isqrt(rem)
        if y * y == rem:
            return True, (x, y)
    return False, None


def verify_determinant(lattice: TorusLattice, vec: Vector) -> int:
    """Determinant of the 2x2 integer matrix with rows vec and (1, g).

    A pair from the generator procedure always makes this a multiple of q.
    """
    return vec[0] * lattice.g - vec[1]
