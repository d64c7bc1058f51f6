"""Normal forms, S-polynomials and Buchberger's algorithm."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Monomial, PolyRing, Polynomial, RingMismatchError, VariableOrder, leading_term
from .monideal import MonomialIdeal

log = logging.getLogger(__name__)

DEFAULT_SPAIR_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    pass


class NotCertifiedError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSet:
    ring: PolyRing
    order: VariableOrder
    generators: tuple[Polynomial, ...]
    certified: bool = False

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if len(self.order) != self.ring.nvars:
            raise RingMismatchError("order and ring disagree on the number of variables")
        for g in self.generators:
            if g.is_zero():
                raise ValueError("generators must be nonzero")
            if g.ring != self.ring:
                raise RingMismatchError("generator from a different ring")

    def __len__(self):
        return len(self.generators)

    def leading_monomials(self) -> list[Monomial]:
        return [leading_term(self.order, g)[0] for g in self.generators]

    def permuted(self, perm: Sequence[int]) -> GeneratorSet:
        return GeneratorSet(self.ring, self.order, tuple(self.generators[i] for i in perm))


@dataclass
class GroebnerReport:
    is_basis: bool
    spairs_considered: int
    spairs_reduced_to_zero: int
    spairs_skipped: int
    basis: GeneratorSet
    initial_ideal: MonomialIdeal
    added: int = 0
    stats: dict = field(default_factory=dict)


class _Reducer:
    """Divisor lookup in the fixed order (leading monomial, then index)."""

    def __init__(self, order: VariableOrder, polys: Sequence[Polynomial]):
        self.order = order
        entries = []
        for idx, g in enumerate(polys):
            lm, lc = leading_term(order, g)
            entries.append((order.key(lm), idx, lm, lc, g))
        entries.sort(key=lambda e: (e[0], e[1]))
        self.entries = [(lm, lc, g) for _, _, lm, lc, g in entries]

    def find(self, m: Monomial):
        for lm, lc, g in self.entries:
            if lm.divides(m):
                return lm, lc, g
        return None


def _normal_form(f: Polynomial, reducer: _Reducer) -> Polynomial:
    order = reducer.order
    field = f.ring.field
    sub, mul, inv = field.sub, field.mul, field.inv
    key = order.key
    p = dict(f.terms)
    rem: dict[Monomial, object] = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        hit = reducer.find(m)
        if hit is None:
            rem[m] = p.pop(m)
            continue
        lm, lc, g = hit
        q = m.quo(lm)
        factor = mul(c, inv(lc))
        for t, a in g.terms.items():
            tm = t.mul(q)
            v = sub(p.get(tm, 0), mul(a, factor)) if tm in p else field.neg(mul(a, factor))
            if v == 0:
                p.pop(tm, None)
            else:
                p[tm] = v
    return Polynomial._raw(f.ring, rem)


def reduce(f: Polynomial, G: GeneratorSet) -> Polynomial:
    """Fully reduced normal form of ``f`` modulo ``G``.

    No term of the result is divisible by a leading monomial of ``G``.
    """
    if not len(G):
        raise ValueError("empty generator set")
    return _normal_form(f, _Reducer(G.order, G.generators))


def s_polynomial(f: Polynomial, g: Polynomial, order: VariableOrder) -> Polynomial:
    """``(L/lt f) f - (L/lt g) g`` with ``L`` the lcm of the leading monomials."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    inv = f.ring.field.inv
    mf, cf = leading_term(order, f)
    mg, cg = leading_term(order, g)
    lcm = mf.lcm(mg)
    return f.mul_term(lcm.quo(mf), inv(cf)) - g.mul_term(lcm.quo(mg), inv(cg))


def _chain_criterion(i: int, j: int, lcm: Monomial, lms: list[Monomial], pending: set) -> bool:
    for k, lm in enumerate(lms):
        if k in (i, j) or not lm.divides(lcm):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def buchberger(
    G: GeneratorSet,
    *,
    criteria: bool = True,
    budget: int = DEFAULT_SPAIR_BUDGET,
) -> GroebnerReport:
    """Buchberger's algorithm with the normal selection strategy.

    Pairs are processed by increasing lcm (degree, then term order, then
    indices).  With ``criteria`` the coprime and chain criteria skip pairs.
    If no S-polynomial leaves a nonzero remainder the input generators are
    returned as the basis; otherwise the reduced Groebner basis is returned.
    Raises :class:`BudgetExceeded` after ``budget`` reductions.
    """
    if not len(G):
        raise ValueError("empty generator set")
    order = G.order
    key = order.key
    basis = list(G.generators)
    lms = [leading_term(order, g)[0] for g in basis]
    reducer = _Reducer(order, basis)

    pending: set[tuple[int, int]] = set()
    pair_key: dict[tuple[int, int], tuple] = {}

    def add_pairs(new: int):
        for k in range(new):
            pending.add((k, new))
            pair_key[(k, new)] = (key(lms[k].lcm(lms[new])), k, new)

    for j in range(len(basis)):
        add_pairs(j)
    considered = zero = skipped = 0
    while pending:
        i, j = min(pending, key=pair_key.__getitem__)
        pending.discard((i, j))
        lcm = lms[i].lcm(lms[j])
        if criteria and (lms[i].coprime(lms[j]) or _chain_criterion(i, j, lcm, lms, pending)):
            skipped += 1
            continue
        considered += 1
        if considered > budget:
            raise BudgetExceeded(f"more than {budget} S-pair reductions")
        h = _normal_form(s_polynomial(basis[i], basis[j], order), reducer)
        if h.is_zero():
            zero += 1
            continue
        h = h.monic(order)
        new = len(basis)
        basis.append(h)
        lms.append(leading_term(order, h)[0])
        add_pairs(new)
        reducer = _Reducer(order, basis)
        log.debug("pair (%d,%d) added element %d", i, j, new)

    added = len(basis) - len(G.generators)
    if added == 0:
        out = GeneratorSet(G.ring, order, G.generators, certified=True)
    else:
        out = GeneratorSet(G.ring, order, tuple(_reduced_basis(basis, order)), certified=True)
    return GroebnerReport(
        is_basis=added == 0,
        spairs_considered=considered,
        spairs_reduced_to_zero=zero,
        spairs_skipped=skipped,
        basis=out,
        initial_ideal=initial_ideal(out),
        added=added,
    )


def _reduced_basis(basis: list[Polynomial], order: VariableOrder) -> list[Polynomial]:
    key = order.key
    polys = sorted(basis, key=lambda g: key(leading_term(order, g)[0]))
    minimal: list[Polynomial] = []
    lms: list[Monomial] = []
    for g in polys:
        lm = leading_term(order, g)[0]
        if not any(m.divides(lm) for m in lms):
            minimal.append(g)
            lms.append(lm)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        r = _normal_form(g, _Reducer(order, others)) if others else g
        out.append(r.monic(order))
    return out


def is_groebner_basis(G: GeneratorSet, criteria: bool = True) -> bool:
    """Whether every S-polynomial of ``G`` reduces to zero modulo ``G``."""
    order = G.order
    lms = G.leading_monomials()
    reducer = _Reducer(order, G.generators)
    pending = {(i, j) for j in range(len(G)) for i in range(j)}
    for i, j in sorted(pending):
        pending.discard((i, j))
        lcm = lms[i].lcm(lms[j])
        if criteria and (lms[i].coprime(lms[j]) or _chain_criterion(i, j, lcm, lms, pending)):
            continue
        s = s_polynomial(G.generators[i], G.generators[j], order)
        if not _normal_form(s, reducer).is_zero():
            return False
    return True


def initial_ideal(G: GeneratorSet) -> MonomialIdeal:
    """Monomial ideal of the leading monomials of a certified Groebner basis."""
    if not G.certified:
        raise NotCertifiedError("generator set has not been certified as a Groebner basis")
    return MonomialIdeal(G.ring, G.leading_monomials())


def certify(G: GeneratorSet, criteria: bool = True) -> GeneratorSet:
    """Return ``G`` marked certified, or raise if it is not a Groebner basis."""
    if not is_groebner_basis(G, criteria):
        raise NotCertifiedError("some S-polynomial has a nonzero normal form")
    return GeneratorSet(G.ring, G.order, G.generators, certified=True)
