import pytest

from pfaffideal.complexes import f_h_vectors
from pfaffideal.groebner import buchberger
from pfaffideal.polyomino import (
    PolyominoError,
    StackPolyomino,
    content,
    content_heights,
    determinantal_generators,
    expected_initial_generators_polyomino,
    polyomino_complex,
    polyomino_ring,
    polyomino_variable_order,
    validate_stack,
)


def P(*h):
    return StackPolyomino.from_heights(h)


def order_cells(poly):
    ring = polyomino_ring(poly)
    return [ring.labels[i] for i in polyomino_variable_order(poly).ascending]


def test_validate():
    assert not P(2, 3, 2).is_ferrers()
    assert P(3, 2, 2).is_ferrers()
    with pytest.raises(PolyominoError, match="column gap"):
        validate_stack([(1, 1), (3, 1)])
    with pytest.raises(PolyominoError, match="row gap"):
        validate_stack([(1, 1), (1, 3)])
    with pytest.raises(PolyominoError):
        validate_stack([])


def test_content():
    assert content(P(2, 3, 2)) == P(3, 2, 2)
    assert content(P(3, 2, 2)) == P(3, 2, 2)
    assert content_heights((1, 4, 2, 4)) == (4, 4, 2, 1)
    # those heights leave a gap in row 3, so they are not a stack
    with pytest.raises(PolyominoError, match="row gap"):
        P(1, 4, 2, 4)
    assert content(P(1, 4, 4, 2)) == P(4, 4, 2, 1)


def test_orders():
    assert order_cells(P(2, 2)) == [(2, 1), (2, 2), (1, 1), (1, 2)]
    assert order_cells(P(1, 1, 1)) == [(1, 1), (1, 2), (1, 3)]
    assert order_cells(P(3)) == [(3, 1), (2, 1), (1, 1)]


def test_generators():
    g = determinantal_generators(P(2, 2), 2)
    ring = g.ring
    x = ring.var
    assert g.generators == (x((1, 1)) * x((2, 2)) - x((1, 2)) * x((2, 1)),)
    assert len(determinantal_generators(P(2, 3, 2), 3)) == 0
    g1 = determinantal_generators(P(2, 3, 2), 1)
    assert {tuple(p.terms) for p in g1.generators} == {(ring_m,) for ring_m in _vars(g1.ring)}


def _vars(ring):
    return [ring.monomial({lab: 1}) for lab in ring.labels]


def test_complex_2x2():
    c = polyomino_complex(P(2, 2), 2)
    assert c.min_nonfaces == [((1, 1), (2, 2))]
    assert c.facets() == [((1, 1), (1, 2), (2, 1)), ((1, 2), (2, 1), (2, 2))]
    assert f_h_vectors(c).f == (1, 4, 5, 2)
    assert polyomino_complex(P(2, 2), 3).min_nonfaces == []


def test_content_f_vectors():
    assert f_h_vectors(polyomino_complex(P(2, 3, 2), 2)).f == f_h_vectors(polyomino_complex(P(3, 2, 2), 2)).f


def test_expected_initial():
    ring = polyomino_ring(P(2, 2))
    assert expected_initial_generators_polyomino(P(2, 2), 2) == {ring.monomial({(1, 1): 1, (2, 2): 1})}
    assert expected_initial_generators_polyomino(P(2, 2), 1) == set(_vars(ring))
    ring = polyomino_ring(P(2, 2, 2))
    want = {ring.monomial({a: 1, b: 1}) for a, b in [((1, 1), (2, 2)), ((1, 1), (2, 3)), ((1, 2), (2, 3))]}
    assert expected_initial_generators_polyomino(P(2, 2, 2), 2) == want


@pytest.mark.parametrize("heights,r", [((3, 3, 3), 2), ((2, 3, 2), 2), ((1, 3, 2), 2), ((4, 3, 1), 2), ((3, 3, 3, 3), 3)])
def test_buchberger(heights, r):
    poly = P(*heights)
    gens = determinantal_generators(poly, r)
    rep = buchberger(gens)
    assert rep.is_basis
    assert set(rep.initial_ideal.generators) == expected_initial_generators_polyomino(poly, r, gens.ring)
