"""Generic skew-symmetric matrices, their Pfaffians and Pfaffian ideals.

The ring ``S_n`` has one variable ``x[i,j]`` per pair ``1 <= i < j <= n``;
pairs are read as edges and diagonals of a convex n-gon with vertices
labelled ``1..n`` around the boundary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import comb

from .algebra import QQ, Monomial, PolyRing, Polynomial, VariableOrder
from .groebner import GeneratorSet
from .polygon import Diagonal, distance, omega, omega_r, sorted_diagonals, theta

__all__ = [
    "Diagonal",
    "distance",
    "omega",
    "omega_r",
    "theta",
    "sorted_diagonals",
    "pfaffian_ring",
    "pfaffian_variable_order",
    "pfaffian",
    "PfaffianInstance",
    "pfaffian_ideal_generators",
    "expected_initial_generators",
]


def pfaffian_ring(n: int, field=QQ) -> PolyRing:
    return PolyRing(omega(n), field, name="x")


def pfaffian_variable_order(n: int, tie_break: str = "span") -> VariableOrder:
    """The distance-compatible order on the variables of ``S_n``."""
    if n < 2:
        raise ValueError("need n >= 2")
    index = {d: k for k, d in enumerate(omega(n))}
    return VariableOrder([index[d] for d in sorted_diagonals(n, tie_break)])


# ---------------------------------------------------------------------------
# Pfaffians


def perfect_matchings(indices):
    """Yield ``(sign, pairs)`` for each perfect matching of ``indices``.

    The smallest free index is matched first; matching it with the ``k``-th
    remaining index contributes ``(-1)**k``.  This is the sign of the
    permutation ``(a1 b1 a2 b2 ...)`` of the sorted index list.
    """
    indices = tuple(indices)
    if not indices:
        yield 1, ()
        return
    first, rest = indices[0], indices[1:]
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1 :]
        for sign, pairs in perfect_matchings(remaining):
            yield (-sign if k % 2 else sign), ((first, partner),) + pairs


def matching_sign(pairs, indices) -> int:
    """Sign of the permutation listing ``pairs`` in order, relative to ``indices``."""
    pos = {v: k for k, v in enumerate(sorted(indices))}
    perm = [pos[v] for pair in pairs for v in pair]
    inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inversions % 2 else 1


def pfaffian(ring: PolyRing, indices) -> Polynomial:
    """Pfaffian of the principal skew-symmetric submatrix on ``indices``."""
    indices = tuple(indices)
    if len(indices) % 2:
        raise ValueError("Pfaffian needs an even number of indices")
    if len(set(indices)) != len(indices):
        raise ValueError("duplicate indices")
    indices = tuple(sorted(indices))
    if len(indices) > 1 and (indices[0], indices[-1]) not in ring.index:
        raise ValueError(f"indices {indices} out of range for this ring")
    nvars = ring.nvars
    terms: dict[Monomial, int] = {}
    for sign, pairs in perfect_matchings(indices):
        e = [0] * nvars
        for pair in pairs:
            e[ring.index[pair]] += 1
        terms[Monomial(e)] = sign
    return Polynomial(ring, terms)


@dataclass(frozen=True)
class PfaffianInstance:
    n: int
    r: int
    field: object = QQ
    tie_break: str = "span"
    ring: PolyRing = dc_field(init=False, compare=False, repr=False)
    order: VariableOrder = dc_field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not (self.r >= 1 and 2 * self.r <= self.n):
            raise ValueError(f"need 1 <= 2r <= n, got n={self.n}, r={self.r}")
        object.__setattr__(self, "ring", pfaffian_ring(self.n, self.field))
        object.__setattr__(self, "order", pfaffian_variable_order(self.n, self.tie_break))


def pfaffian_ideal_generators(inst: PfaffianInstance) -> GeneratorSet:
    """The ``C(n, 2r)`` Pfaffians of size ``2r`` generating ``P_{n,r}``."""
    gens = [
        pfaffian(inst.ring, subset)
        for subset in itertools.combinations(range(1, inst.n + 1), 2 * inst.r)
    ]
    assert len(gens) == comb(inst.n, 2 * inst.r)
    return GeneratorSet(inst.ring, inst.order, tuple(gens))


def crossing_monomial_sets(n: int, r: int) -> list[tuple[Diagonal, ...]]:
    """Sets ``{j1 j_{r+1}, ..., j_r j_{2r}}`` over sorted 2r-subsets whose
    diagonals all have distance at least ``r``."""
    out = []
    for js in itertools.combinations(range(1, n + 1), 2 * r):
        sigma = tuple((js[k], js[r + k]) for k in range(r))
        if all(distance(n, *d) >= r for d in sigma):
            out.append(sigma)
    return out


def expected_initial_generators(inst: PfaffianInstance) -> set[Monomial]:
    """Squarefree monomials of the pairwise crossing r-sets of diagonals of
    distance at least ``r``."""
    ring = inst.ring
    return {
        ring.monomial({d: 1 for d in sigma}) for sigma in crossing_monomial_sets(inst.n, inst.r)
    }
