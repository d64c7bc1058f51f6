"""Stack polyominoes and the ideals of their r x r minors.

A cell ``(a, b)`` sits in row ``a`` and column ``b`` of a generic matrix
with row 1 at the top.  A stack polyomino is closed upwards in every column
and every row meets it in an interval of columns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import QQ, Monomial, PolyRing, Polynomial, VariableOrder
from .complexes import SimplicialComplex
from .groebner import GeneratorSet

Cell = tuple[int, int]


class PolyominoError(ValueError):
    pass


@dataclass(frozen=True)
class StackPolyomino:
    cells: frozenset[Cell]

    @classmethod
    def from_heights(cls, heights: Sequence[int]) -> StackPolyomino:
        """Column ``b`` (1-based) holds rows ``1..heights[b-1]``."""
        if any(h < 1 for h in heights):
            raise PolyominoError("column heights must be positive")
        return validate_stack((a, b) for b, h in enumerate(heights, start=1) for a in range(1, h + 1))

    @property
    def columns(self) -> list[int]:
        return sorted({b for _, b in self.cells})

    @property
    def rows(self) -> list[int]:
        return sorted({a for a, _ in self.cells})

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(max(a for a, c in self.cells if c == b) for b in self.columns)

    def is_ferrers(self) -> bool:
        first = self.columns[0] if self.cells else 1
        return all((a, first) in self.cells for a, _ in self.cells)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    def __len__(self):
        return len(self.cells)


def validate_stack(cells: Iterable[Cell]) -> StackPolyomino:
    """Check both stack conditions; raise :class:`PolyominoError` naming the one violated."""
    cells = frozenset((int(a), int(b)) for a, b in cells)
    if not cells:
        raise PolyominoError("empty polyomino")
    if any(a < 1 or b < 1 for a, b in cells):
        raise PolyominoError("cells must have positive coordinates")
    for a, b in cells:
        for c in range(1, a):
            if (c, b) not in cells:
                raise PolyominoError(f"column gap: ({a},{b}) present but ({c},{b}) missing")
    for a in {a for a, _ in cells}:
        cols = sorted(b for r, b in cells if r == a)
        if cols[-1] - cols[0] + 1 != len(cols):
            raise PolyominoError(f"row gap in row {a}: columns {cols}")
    return StackPolyomino(cells)


def content_heights(heights: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(heights, reverse=True))


def content(poly: StackPolyomino) -> StackPolyomino:
    """The Ferrers diagram whose column heights are those of ``poly`` sorted decreasingly."""
    return StackPolyomino.from_heights(content_heights(poly.heights))


def polyomino_ring(poly: StackPolyomino, field=QQ) -> PolyRing:
    return PolyRing(poly.sorted_cells(), field, name="x")


def polyomino_variable_order(poly: StackPolyomino) -> VariableOrder:
    """Lower rows are smaller; within a row, left is smaller."""
    cells = poly.sorted_cells()
    index = {c: k for k, c in enumerate(cells)}
    return VariableOrder([index[c] for c in sorted(cells, key=lambda c: (-c[0], c[1]))])


def grids(poly: StackPolyomino, r: int):
    """Yield ``(rows, cols)`` index sets of size ``r`` whose full grid lies in ``poly``."""
    for alpha in itertools.combinations(poly.rows, r):
        for beta in itertools.combinations(poly.columns, r):
            if all((a, b) in poly.cells for a in alpha for b in beta):
                yield alpha, beta


def _perm_sign(perm: Sequence[int]) -> int:
    inv = sum(1 for x, y in itertools.combinations(perm, 2) if x > y)
    return -1 if inv % 2 else 1


def minor(ring: PolyRing, alpha: Sequence[int], beta: Sequence[int]) -> Polynomial:
    """Determinant of the submatrix on rows ``alpha`` and columns ``beta`` (Leibniz expansion)."""
    terms: dict[Monomial, int] = {}
    for perm in itertools.permutations(range(len(beta))):
        m = ring.monomial({(a, beta[p]): 1 for a, p in zip(alpha, perm)})
        terms[m] = _perm_sign(perm)
    return Polynomial(ring, terms)


def determinantal_generators(poly: StackPolyomino, r: int, field=QQ) -> GeneratorSet:
    """All nonvanishing ``r x r`` minors of the generic matrix supported on ``poly``."""
    if r < 1:
        raise ValueError("need r >= 1")
    ring = polyomino_ring(poly, field)
    gens = tuple(minor(ring, alpha, beta) for alpha, beta in grids(poly, r))
    return GeneratorSet(ring, polyomino_variable_order(poly), gens)


def r_diagonals(poly: StackPolyomino, r: int) -> list[tuple[Cell, ...]]:
    return [tuple(zip(alpha, beta)) for alpha, beta in grids(poly, r)]


def polyomino_complex(poly: StackPolyomino, r: int) -> SimplicialComplex:
    """Subsets of ``poly`` containing no ``r``-diagonal."""
    if r < 1:
        raise ValueError("need r >= 1")
    return SimplicialComplex(poly.sorted_cells(), r_diagonals(poly, r))


def expected_initial_generators_polyomino(poly: StackPolyomino, r: int, ring: PolyRing | None = None) -> set[Monomial]:
    ring = ring or polyomino_ring(poly)
    return {ring.monomial({c: 1 for c in diag}) for diag in r_diagonals(poly, r)}
