import itertools
from collections import Counter

import pytest

from pfaffideal.complexes import (
    SimplicialComplex,
    crossing,
    delta_complex,
    expected_delta_dimension,
    f_h_vectors,
    facet_count_formula,
    facets,
    h_from_f,
    join_with_simplex,
    multiplicity_formula,
    nested,
    reduced_euler_characteristic,
    sigma_complex,
    sphere_certificate,
)
from pfaffideal.polygon import theta


def D(*labels):
    return [(x // 10, x % 10) for x in labels]


def brute_f(c):
    counts = Counter(len(f) for f in c.iter_faces())
    return [counts[k] for k in range(max(counts) + 1)]


def brute_facets(c):
    faces = {frozenset(f) for f in c.iter_faces()}
    return {f for f in faces if not any(f | {v} in faces for v in c.ground if v not in f)}


def test_crossing_and_nested():
    assert crossing((1, 3), (2, 4), 5)
    assert not crossing((1, 3), (1, 4))
    assert crossing((1, 4), (2, 5), 6)
    assert crossing((2, 5), (1, 4))
    assert not crossing((1, 5), (2, 4))
    assert nested((1, 4), (2, 3))
    assert not nested((1, 3), (2, 4))
    assert nested((1, 5), (2, 4))
    assert nested((2, 4), (1, 5))


def test_delta_5_1():
    c = delta_complex(5, 1)
    assert set(c.ground) == set(D(13, 24, 35, 14, 25))
    assert len(c.min_nonfaces) == 5
    assert c.dim == 1
    fs = c.facets()
    assert len(fs) == 5
    # facets are exactly the non-crossing pairs
    want = {frozenset(p) for p in itertools.combinations(c.ground, 2) if not crossing(*p)}
    assert {frozenset(f) for f in fs} == want
    fh = f_h_vectors(c)
    assert fh.f == (1, 5, 5) and fh.h == (1, 3, 1)


def test_delta_6_1():
    c = delta_complex(6, 1)
    assert len(c.ground) == 9
    assert c.dim == 2 and len(c.facets()) == 14
    cert = sphere_certificate(c, 2)
    assert cert.ok
    assert f_h_vectors(c).f == (1, 9, 21, 14)


def test_delta_7_2_sphere():
    cert = sphere_certificate(delta_complex(7, 2), expected_delta_dimension(7, 2))
    assert cert.ok and cert.dimension == 3


def test_delta_boundary_band():
    # 2r = n-1: three pairwise crossing long diagonals, no two in a face
    c = delta_complex(6, 2)
    assert set(c.ground) == set(D(14, 25, 36))
    assert c.dim == 1
    assert len(c.facets()) == 3 == facet_count_formula(6, 2)
    c = delta_complex(5, 2)
    assert c.dim == -1 and c.facets() == [()]
    assert facet_count_formula(5, 2) == 1
    cert = sphere_certificate(c, -1)
    assert cert.ok


def test_delta_r0_is_empty_face_only():
    c = delta_complex(4, 0)
    assert len(c.ground) == 6
    assert c.face_counts() == [1]
    assert c.facets() == [()]


def test_delta_range():
    with pytest.raises(ValueError):
        delta_complex(6, 3)
    with pytest.raises(ValueError):
        delta_complex(6, -1)


def test_sigma_5_1():
    c = sigma_complex(5, 1)
    assert len(c.ground) == 10
    want = {frozenset(D(*p)) for p in [(14, 23), (15, 23), (15, 24), (15, 34), (25, 34)]}
    assert {frozenset(nf) for nf in c.min_nonfaces} == want
    assert f_h_vectors(c).h_polynomial == (1, 3, 1)


def test_sigma_4_1_and_full():
    assert sigma_complex(4, 1).min_nonfaces == [((1, 4), (2, 3))]
    assert sigma_complex(6, 3).min_nonfaces == []
    assert len(sigma_complex(6, 3).facets()) == 1


@pytest.mark.parametrize(
    "c",
    [delta_complex(5, 1), delta_complex(6, 1), delta_complex(7, 2), sigma_complex(5, 1), sigma_complex(6, 1),
     sigma_complex(6, 2), delta_complex(7, 1)],
    ids=["D51", "D61", "D72", "S51", "S61", "S62", "D71"],
)
def test_census_and_facets_against_brute_force(c):
    assert c.face_counts() == brute_f(c)
    assert {frozenset(f) for f in facets(c)} == brute_facets(c)


def test_full_simplex():
    c = SimplicialComplex("abcd", [])
    assert c.facets() == [tuple("abcd")]
    assert f_h_vectors(c).h_polynomial == (1,)
    assert f_h_vectors(c).h == (1, 0, 0, 0, 0)


def test_nonface_not_in_ground():
    with pytest.raises(ValueError):
        SimplicialComplex("ab", [("a", "z")])


def test_join():
    c = delta_complex(5, 1)
    th = theta(5, 1)
    j = join_with_simplex(c, th)
    assert len(j.ground) == 10 and j.dim == 6
    assert j.min_nonfaces == c.min_nonfaces
    assert join_with_simplex(c, []) == c
    with pytest.raises(ValueError):
        join_with_simplex(c, [(1, 3)])


def test_h_from_f_and_euler():
    assert h_from_f([1, 5, 5]) == [1, 3, 1]
    assert reduced_euler_characteristic([1, 9, 21, 14]) == 1


def test_formulas_small():
    assert facet_count_formula(5, 1) == 5
    assert facet_count_formula(6, 1) == 14
    assert facet_count_formula(7, 3) == 1
    assert multiplicity_formula(5, 2) == 5
    assert multiplicity_formula(6, 2) == 14
    with pytest.raises(ValueError):
        facet_count_formula(6, 3)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_multiplicity_full_size(r):
    # P_{2r,r} is principal of degree r, so the multiplicity is r
    assert multiplicity_formula(2 * r, r) == r


def test_catalan():
    cat = [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    for n in range(3, 11):
        assert facet_count_formula(n, 1) == cat[n - 2]
