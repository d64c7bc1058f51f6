import random

import pytest

from pfaffideal.algebra import PolyRing, PrimeField, VariableOrder, leading_term
from pfaffideal.groebner import (
    BudgetExceeded,
    GeneratorSet,
    NotCertifiedError,
    buchberger,
    certify,
    initial_ideal,
    is_groebner_basis,
    reduce,
    s_polynomial,
)
from pfaffideal.pfaffian import PfaffianInstance, expected_initial_generators, pfaffian_ideal_generators
from pfaffideal.complexes import delta_complex
from pfaffideal.monideal import stanley_reisner_ideal

from helpers import mono


@pytest.fixture(scope="module")
def g52():
    return pfaffian_ideal_generators(PfaffianInstance(5, 2))


def test_reduce_self(g52):
    for g in g52.generators:
        assert reduce(g, GeneratorSet(g52.ring, g52.order, [g])).is_zero()


def test_reduce_normal_form_postcondition(p52, g52):
    f = g52.ring.term(mono(p52, 13, 24))
    nf = reduce(f, g52)
    lms = g52.leading_monomials()
    assert not nf.is_zero()
    assert not any(lm.divides(m) for m in nf.terms for lm in lms)
    # f - nf lies in the ideal, so the difference reduces to zero
    assert reduce(f - nf, g52).is_zero()


def test_reduce_one(g52):
    one = g52.ring.one()
    assert reduce(one, g52) == one


def test_s_polynomial_self(g52):
    g = g52.generators[0]
    assert s_polynomial(g, g, g52.order).is_zero()


def test_coprime_pair_reduces():
    ring = PolyRing("abcd")
    order = VariableOrder(range(4))
    a, b, c, d = (ring.var(v) for v in "abcd")
    f, g = a * b + c, c * d + a
    assert leading_term(order, f)[0].coprime(leading_term(order, g)[0])
    s = s_polynomial(f, g, order)
    assert reduce(s, GeneratorSet(ring, order, [f, g])).is_zero()


def test_all_pfaffian_pairs_reduce(g52):
    gens = g52.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            assert reduce(s_polynomial(gens[i], gens[j], g52.order), g52).is_zero()


def test_principal():
    ring = PolyRing([(1, 1), (1, 2), (2, 1), (2, 2)])
    order = VariableOrder([2, 3, 0, 1])
    x = ring.var
    f = x((1, 1)) * x((2, 2)) - x((1, 2)) * x((2, 1))
    rep = buchberger(GeneratorSet(ring, order, [f]))
    assert rep.is_basis and rep.basis.generators == (f,)
    assert rep.initial_ideal.generators == (ring.monomial({(1, 1): 1, (2, 2): 1}),)


@pytest.mark.parametrize("criteria", [True, False])
def test_p52(p52, g52, criteria):
    rep = buchberger(g52, criteria=criteria)
    assert rep.is_basis
    assert rep.basis.generators == g52.generators
    want = {mono(p52, *s) for s in [(13, 24), (13, 25), (24, 35), (14, 35), (14, 25)]}
    assert set(rep.initial_ideal.generators) == want
    if not criteria:
        assert rep.spairs_skipped == 0 and rep.spairs_considered == 10


@pytest.mark.parametrize("criteria", [True, False])
def test_p62(criteria):
    inst = PfaffianInstance(6, 2)
    rep = buchberger(pfaffian_ideal_generators(inst), criteria=criteria)
    assert rep.is_basis
    assert set(rep.initial_ideal.generators) == expected_initial_generators(inst)
    # independently: minimal nonfaces of the crossing complex
    assert rep.initial_ideal == stanley_reisner_ideal(inst.ring, delta_complex(6, 1))


def test_generator_permutation_invariance():
    inst = PfaffianInstance(6, 2)
    gens = pfaffian_ideal_generators(inst)
    base = buchberger(gens).initial_ideal
    rng = random.Random(3)
    for _ in range(3):
        perm = list(range(len(gens)))
        rng.shuffle(perm)
        assert buchberger(gens.permuted(perm)).initial_ideal == base


def test_non_basis_gets_completed():
    ring = PolyRing("xy")
    order = VariableOrder([1, 0])  # y < x
    x, y = ring.var("x"), ring.var("y")
    G = GeneratorSet(ring, order, [x * x - y, x * y - ring.one()])
    rep = buchberger(G)
    assert not rep.is_basis and rep.added > 0
    assert is_groebner_basis(rep.basis)
    assert all(reduce(g, rep.basis).is_zero() for g in G.generators)
    assert not is_groebner_basis(G)


def test_prime_field_run():
    inst = PfaffianInstance(6, 2, PrimeField())
    rep = buchberger(pfaffian_ideal_generators(inst))
    assert rep.is_basis
    assert set(rep.initial_ideal.generators) == expected_initial_generators(inst)


def test_budget():
    inst = PfaffianInstance(6, 2)
    with pytest.raises(BudgetExceeded):
        buchberger(pfaffian_ideal_generators(inst), criteria=False, budget=3)


def test_initial_ideal_requires_certificate(g52):
    with pytest.raises(NotCertifiedError):
        initial_ideal(g52)
    assert initial_ideal(certify(g52)) == buchberger(g52).initial_ideal


def test_empty_and_zero():
    ring = PolyRing("x")
    order = VariableOrder([0])
    with pytest.raises(ValueError):
        buchberger(GeneratorSet(ring, order, []))
    with pytest.raises(ValueError):
        GeneratorSet(ring, order, [ring.zero()])
