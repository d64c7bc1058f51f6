"""Monomial ideals and the numerical invariants of their quotients.

Dimension, multiplicity and the h-polynomial are computed by polarizing to
a squarefree ideal and counting faces of its Stanley-Reisner complex.  An
independent route through the Hilbert function is provided as well.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable

from .algebra import Monomial, PolyRing, VariableOrder
from .complexes import SimplicialComplex, h_from_f, trim


class ContainmentError(ValueError):
    pass


def _canonical(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    out: list[Monomial] = []
    for m in sorted(set(gens), key=lambda m: (m.degree, tuple(m))):
        if not any(g.divides(m) for g in out):
            out.append(m)
    return tuple(sorted(out, key=lambda m: (m.degree, tuple(m))))


class MonomialIdeal:
    """Monomial ideal held by its minimal generating set (a divisibility antichain)."""

    def __init__(self, ring: PolyRing, generators: Iterable[Monomial]):
        gens = [Monomial(g) for g in generators]
        if any(len(g) != ring.nvars for g in gens):
            raise ValueError("generator has the wrong number of variables")
        self.ring = ring
        self.generators = _canonical(gens)

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.ring.labels == other.ring.labels
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash((self.ring.labels, self.generators))

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        body = ", ".join(self.ring.format_monomial(g) for g in self.generators)
        return f"MonomialIdeal({body})"

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def issubset(self, other: MonomialIdeal) -> bool:
        return all(other.contains(g) for g in self.generators)

    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.generators)

    def formatted(self, order: VariableOrder | None = None) -> list[str]:
        gens = self.generators
        if order is not None:
            gens = sorted(gens, key=order.key)
        return [self.ring.format_monomial(g, order) for g in gens]


def minimalize(ring: PolyRing, gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(ring, gens)


def is_squarefree(ideal: MonomialIdeal) -> bool:
    return all(g.is_squarefree() for g in ideal.generators)


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, dict[int, tuple[int, ...]]]:
    """Replace each ``x_i^k`` by ``x_{i,1} ... x_{i,k}``.

    Returns the squarefree ideal in the enlarged ring and the map from an
    old variable index to its new indices.  ``x_i`` itself becomes
    ``x_{i,1}``, so the old ring embeds in the new one.  Squarefree ideals
    come back unchanged.
    """
    ring = ideal.ring
    top = [max((g[i] for g in ideal.generators), default=0) for i in range(ring.nvars)]
    if all(k <= 1 for k in top):
        return ideal, {i: (i,) for i in range(ring.nvars)}
    labels: list = []
    mapping: dict[int, tuple[int, ...]] = {}
    for i, lab in enumerate(ring.labels):
        copies = max(top[i], 1)
        mapping[i] = tuple(range(len(labels), len(labels) + copies))
        labels.extend((lab, k) for k in range(1, copies + 1))
    new_ring = PolyRing(labels, ring.field, ring.name)
    gens = []
    for g in ideal.generators:
        e = [0] * len(labels)
        for i, k in enumerate(g):
            for j in mapping[i][:k]:
                e[j] = 1
        gens.append(Monomial(e))
    return MonomialIdeal(new_ring, gens), mapping


def complex_of(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose Stanley-Reisner ideal is ``ideal`` (ground = all variables)."""
    if not is_squarefree(ideal):
        raise ValueError("ideal is not squarefree")
    if ideal.is_unit():
        raise ValueError("the unit ideal has no Stanley-Reisner complex")
    labels = ideal.ring.labels
    return SimplicialComplex(labels, [[labels[i] for i in g.support()] for g in ideal.generators])


def stanley_reisner_ideal(ring: PolyRing, c: SimplicialComplex) -> MonomialIdeal:
    """Ideal generated by the minimal nonfaces of ``c`` (vertices must be ring labels)."""
    return MonomialIdeal(ring, [ring.monomial({v: 1 for v in nf}) for nf in c.min_nonfaces])


@dataclass(frozen=True)
class QuotientStats:
    krull_dim: int
    multiplicity: int
    h_polynomial: tuple[int, ...]
    a_invariant: int

    def as_dict(self) -> dict:
        return {
            "d": self.krull_dim,
            "e": self.multiplicity,
            "h": list(self.h_polynomial),
            "a": self.a_invariant,
        }


def quotient_stats(ideal: MonomialIdeal) -> QuotientStats:
    """Krull dimension, multiplicity, h-polynomial and a-invariant of ``T/I``."""
    if ideal.is_unit():
        raise ValueError("quotient by the unit ideal is zero")
    pol, _ = polarize(ideal)
    extra = pol.nvars - ideal.nvars
    f = complex_of(pol).face_counts()
    d = len(f) - 1 - extra
    h = tuple(trim(h_from_f(f)))
    e = f[-1]
    assert sum(h) == e
    return QuotientStats(krull_dim=d, multiplicity=e, h_polynomial=h, a_invariant=len(h) - 1 - d)


def equality_by_invariants(small: MonomialIdeal, large: MonomialIdeal) -> bool:
    """Check the hypotheses under which ``small ⊆ large`` forces equality.

    Raises :class:`ContainmentError` unless ``small ⊆ large``.  Returns True
    iff both quotients have the same dimension and multiplicity and
    ``small`` is the Stanley-Reisner ideal of a pure complex.
    """
    if not small.issubset(large):
        raise ContainmentError("first ideal is not contained in the second")
    if not is_squarefree(small):
        return False
    a, b = quotient_stats(small), quotient_stats(large)
    if (a.krull_dim, a.multiplicity) != (b.krull_dim, b.multiplicity):
        return False
    sizes = {bin(m).count("1") for m in complex_of(small).facet_masks()}
    return len(sizes) == 1


# name used by the public interface description
lemma51_check = equality_by_invariants


# ---------------------------------------------------------------------------
# Hilbert function route


def hilbert_function_bruteforce(ideal: MonomialIdeal, max_degree: int) -> list[int]:
    """``dim_k (T/I)_k`` for ``k = 0..max_degree`` by listing every monomial."""
    n = ideal.nvars
    out = []
    for k in range(max_degree + 1):
        count = 0
        for combo in itertools.combinations_with_replacement(range(n), k):
            e = [0] * n
            for i in combo:
                e[i] += 1
            if not ideal.contains(Monomial(e)):
                count += 1
        out.append(count)
    return out


def hilbert_function(ideal: MonomialIdeal, max_degree: int) -> list[int]:
    """Same values as :func:`hilbert_function_bruteforce`, faster.

    Whether ``x^e`` lies in ``I`` only depends on ``min(e_i, c_i)`` where
    ``c_i`` is the largest exponent of ``x_i`` among the generators, so we
    list these capped patterns and count how many monomials of each degree
    share a pattern.
    """
    n = ideal.nvars
    caps = [max((g[i] for g in ideal.generators), default=0) for i in range(n)]
    out = [0] * (max_degree + 1)
    for pattern in itertools.product(*(range(c + 1) for c in caps)):
        if ideal.contains(Monomial(pattern)):
            continue
        base = sum(pattern)
        free = sum(1 for p, c in zip(pattern, caps) if p == c)
        for k in range(base, max_degree + 1):
            if free:
                out[k] += comb(k - base + free - 1, free - 1)
            elif k == base:
                out[k] += 1
    return out


def stats_from_hilbert_function(ideal: MonomialIdeal) -> QuotientStats:
    """Recover ``d``, ``e`` and ``h`` from enough values of the Hilbert function.

    The numerator of the Hilbert series over ``(1-t)^n`` has degree at most
    the degree of the lcm of all generators, so that many values determine it.
    """
    if ideal.is_unit():
        raise ValueError("quotient by the unit ideal is zero")
    n = ideal.nvars
    top = sum(max((g[i] for g in ideal.generators), default=0) for i in range(n))
    D = top + 1
    H = hilbert_function(ideal, D)
    # numerator = (1-t)^n * sum H(k) t^k, exact up to degree D
    K = [sum((-1) ** j * comb(n, j) * H[k - j] for j in range(min(k, n) + 1)) for k in range(D + 1)]
    assert K[D] == 0
    K = trim(K)
    d = n
    while d > 0 and sum(K) == 0:
        # divide by (1 - t)
        q, acc = [], 0
        for c in K[:-1]:
            acc += c
            q.append(acc)
        K, d = trim(q), d - 1
    return QuotientStats(krull_dim=d, multiplicity=sum(K), h_polynomial=tuple(K), a_invariant=len(K) - 1 - d)
