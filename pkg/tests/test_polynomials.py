import pytest
from hypothesis import given, settings, strategies as st

from twistmat.rings import polynomials as P

F = (1, 0, 1, 1)  # t^3 + t + 1

polys2 = st.lists(st.integers(0, 1), max_size=8).map(lambda cs: P.strip(cs, 2))


def test_parse_both_notations():
    assert P.parse_poly("1101", 2) == F
    assert P.parse_poly("t^3+t+1", 2) == F
    assert P.parse_poly("1 + t + t^3", 2) == F
    assert P.parse_poly("2*t^2+1", 3) == (2, 0, 1)


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        P.parse_poly("", 2)
    with pytest.raises(ValueError):
        P.parse_poly("t^^2", 2)


def test_format_sparse():
    assert P.format_poly(F) == "t^3+t+1"
    assert P.format_poly((2, 0, 1)) == "2*t^2+1"
    assert P.format_poly(()) == "0"
    assert P.format_poly((1, 1), "s") == "s+1"


def test_irreducibility_and_reciprocal():
    assert P.is_irreducible(F, 2)
    assert P.reciprocal_poly(F, 2) == (1, 1, 0, 1)
    assert P.reciprocal_poly(F, 2) != F
    assert not P.is_self_reciprocal(F, 2)
    assert P.is_self_reciprocal((1, 1, 1), 2)
    assert not P.is_irreducible((1, 0, 1), 2)  # t^2 + 1 = (t + 1)^2


def test_irreducibility_needs_positive_degree():
    with pytest.raises(ValueError):
        P.is_irreducible((1,), 2)


def test_smallest_irreducible_avoids_given_factors():
    assert P.smallest_irreducible(2) == (1, 0)
    assert P.smallest_irreducible(2, [(1, 0)]) == (1, 1)
    assert P.smallest_irreducible(2, [(1, 0), (1, 1)]) == (1, 1, 1)


@settings(max_examples=100, deadline=None)
@given(polys2, polys2.filter(bool))
def test_division_identity(f, g):
    q, r = P.divmod_(f, g, 2)
    assert P.add(P.mul(q, g, 2), r, 2) == f
    assert not r or P.degree(r) < P.degree(g)


@settings(max_examples=100, deadline=None)
@given(polys2.filter(bool))
def test_reciprocal_of_reciprocal_up_to_t_powers(f):
    # t does not divide f exactly when the constant term is nonzero
    if f[-1]:
        assert P.reciprocal_poly(P.reciprocal_poly(f, 2), 2) == f
