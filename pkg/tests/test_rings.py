import pytest
from hypothesis import given, settings, strategies as st

from strategies import RINGS, ring_elements, units
from twistmat.errors import DenominatorNotInvertible, IdealNotCoprime, NotAUnit, SpecMismatch, UnsupportedSpec
from twistmat.rings import add, from_int, from_poly, inverse, is_unit, mul, normalize, one, power, variable, zero
from twistmat.rings.automorphisms import (
    IDENTITY,
    QUADRATIC_CONJUGATION,
    affine,
    apply_ring_aut,
    fixed_transcendental,
    frobenius,
    inverse_descriptor,
    mobius,
    mobius_stabilizer,
    monomial,
    ring_aut_search,
    ring_automorphisms,
)
from twistmat.rings.element import sqrt_d
from twistmat.rings.finite_fields import field_elements, primitive_element
from twistmat.rings.reduction import reduce_mod, residue_field
from twistmat.rings.spec import RingSpec
from twistmat.rings.units import extend_unit_map, sum_of_units

F4 = RingSpec.finite_field(2, (1, 1, 1))


def test_labels():
    assert RingSpec.integers().label == "Z"
    assert RingSpec.s_integers([3, 2]).label == "Z[1/6]"
    assert RingSpec.quadratic(2).label == "Z[sqrt(2)]"
    assert F4.label == "F4"
    assert RingSpec.poly(2).label == "F2[t]"
    assert RINGS["R_f"].label == "F2[t,t^-1,(t^3+t+1)^-1]"


def test_bad_specs_rejected():
    with pytest.raises(UnsupportedSpec):
        RingSpec.quadratic(8)
    with pytest.raises(UnsupportedSpec):
        RingSpec.s_integers([4])
    with pytest.raises(UnsupportedSpec):
        RingSpec.finite_field(2, (1, 0, 1))
    with pytest.raises(UnsupportedSpec):
        RingSpec.localized_poly(2, [(1, 1, 0)], True)


def test_normalize_s_integers(Z6):
    half = normalize(Z6, 3, 6)
    assert str(half) == "1/2"
    assert mul(half, from_int(Z6, 2)) == one(Z6)


def test_normalize_rejects_foreign_denominator(ZZ, Z6):
    with pytest.raises(DenominatorNotInvertible):
        normalize(ZZ, 1, 2)
    with pytest.raises(DenominatorNotInvertible):
        normalize(Z6, 1, 5)
    with pytest.raises(DenominatorNotInvertible):
        normalize(Z6, 1, 0)


def test_units_of_s_integers(Z6):
    twelve = from_int(Z6, 12)
    fac = is_unit(twelve)
    assert fac is not None
    assert fac.exponents == (2, 1)
    assert str(inverse(twelve)) == "1/12"
    assert is_unit(from_int(Z6, 5)) is None
    with pytest.raises(NotAUnit):
        inverse(from_int(Z6, 10))


def test_quadratic_unit_inverse():
    Z2 = RINGS["Z[sqrt(2)]"]
    u = add(one(Z2), sqrt_d(Z2))
    assert str(inverse(u)) == "-1+sqrt(2)"
    assert mul(u, inverse(u)) == one(Z2)
    assert is_unit(add(from_int(Z2, 2), sqrt_d(Z2))) is None


def test_laurent_units(R_f):
    t = variable(R_f)
    f = from_poly(R_f, (1, 0, 1, 1))
    assert str(inverse(t)) == "t^-1"
    assert str(inverse(f)) == "(t^3+t+1)^-1"
    assert str(power(t, -2)) == "t^-2"
    assert is_unit(from_poly(R_f, (1, 1))) is None
    assert is_unit(variable(RingSpec.poly(2))) is None


def test_canonical_form_cancels_generators(R_f):
    t = variable(R_f)
    x = mul(from_poly(R_f, (1, 1, 0)), inverse(t))  # (t^2 + t) / t
    assert x == from_poly(R_f, (1, 1))


def test_mixed_specs_refused(ZZ, Z6):
    with pytest.raises(SpecMismatch):
        add(one(ZZ), one(Z6))


def test_finite_field_enumeration():
    assert [str(a) for a in field_elements(F4)] == ["0", "1", "s", "s+1"]
    assert str(primitive_element(F4)) == "s"
    assert str(primitive_element(RingSpec.finite_field(5))) == "2"


def test_frobenius_on_f4():
    s = variable(F4)
    assert str(apply_ring_aut(frobenius(1), s)) == "s+1"
    assert ring_automorphisms(F4) == [IDENTITY, frobenius(1)]
    assert inverse_descriptor(frobenius(1), F4) == frobenius(1)


def test_descriptor_must_act_on_ring(ZZ):
    with pytest.raises(SpecMismatch):
        apply_ring_aut(QUADRATIC_CONJUGATION, one(ZZ))


def test_reduction_of_integers(ZZ, Z6):
    assert str(reduce_mod(from_int(ZZ, 7), 5)) == "2"
    assert str(reduce_mod(normalize(Z6, 1, 2), 5)) == "3"
    with pytest.raises(IdealNotCoprime):
        residue_field(Z6, 3)
    with pytest.raises(UnsupportedSpec):
        residue_field(ZZ, 6)


def test_reduction_of_quadratic_uses_smallest_root():
    Z2 = RINGS["Z[sqrt(2)]"]
    u = add(one(Z2), sqrt_d(Z2))
    assert str(reduce_mod(u, 7)) == "4"
    with pytest.raises(UnsupportedSpec):
        residue_field(Z2, 2)


def test_reduction_of_laurent_inverse(R_f):
    t_inv = inverse(variable(R_f))
    assert str(reduce_mod(t_inv, (1, 1, 1))) == "s+1"
    assert str(reduce_mod(t_inv, (1, 1))) == "1"
    with pytest.raises(IdealNotCoprime):
        residue_field(R_f, (1, 0, 1, 1))


def test_sum_of_units(R_f):
    x = from_poly(R_f, (1, 0, 1))
    parts = sum_of_units(x)
    assert [str(u) for u in parts] == ["t^2", "1"]
    assert all(is_unit(u) is not None for u in parts)
    assert extend_unit_map(lambda u: u, x) == x
    assert sum_of_units(zero(R_f)) == []
    with pytest.raises(UnsupportedSpec):
        sum_of_units(from_int(RingSpec.integers(), 3))


def test_ring_aut_search_rf_is_trivial(R_f):
    assert ring_aut_search(R_f, bound=5) == [IDENTITY]


def test_ring_aut_search_self_reciprocal_f_finds_inversion():
    spec = RingSpec.localized_poly(2, [(1, 1, 1)], True)
    found = ring_aut_search(spec, bound=5)
    assert len(found) >= 2
    assert found[0] == IDENTITY
    assert monomial(-1, 0, -2, 1) in found


def test_ring_aut_search_bound_zero(R_f):
    assert ring_aut_search(R_f, bound=0) == [IDENTITY]


def test_ring_aut_search_needs_one_inverted_f():
    with pytest.raises(UnsupportedSpec):
        ring_aut_search(RingSpec.localized_poly(2, (), True))


def test_fixed_transcendental():
    assert str(fixed_transcendental(RingSpec.poly(2))) == "t^2+t"
    assert str(fixed_transcendental(RINGS["F2[t,t^-1]"])) == "(t^2+1)*t^-1"
    R_f = RINGS["R_f"]
    assert fixed_transcendental(R_f) == from_poly(R_f, (1, 1))
    with pytest.raises(UnsupportedSpec):
        fixed_transcendental(RingSpec.integers())


def test_localization_away_from_an_irreducible_cubic():
    spec = RingSpec.localized_poly(2, [(1, 0, 1, 1)], False)
    assert spec.label == "F2[t,(t^3+t+1)^-1]"
    assert ring_automorphisms(spec) == [IDENTITY]
    x = fixed_transcendental(spec)
    assert x == from_poly(spec, (1, 1))
    assert is_unit(x) is None


def test_inverting_a_linear_polynomial_admits_an_inversion():
    spec = RingSpec.localized_poly(2, [(1, 1)], False)
    t = variable(spec)
    t_plus_one = from_poly(spec, (1, 1))
    sigma = mobius(1, 0, 1, 1)
    assert ring_automorphisms(spec) == [IDENTITY, sigma]
    assert apply_ring_aut(sigma, t) == mul(t, inverse(t_plus_one))
    assert apply_ring_aut(sigma, apply_ring_aut(sigma, t)) == t
    assert inverse_descriptor(sigma, spec) == sigma
    g = from_poly(spec, (1, 1, 1))
    assert fixed_transcendental(spec) == mul(power(g, 2), power(t_plus_one, -2))


def test_only_sign_change_preserves_t_squared_plus_one_over_f3():
    spec = RingSpec.localized_poly(3, [(1, 0, 1)], False)
    assert ring_automorphisms(spec) == [IDENTITY, mobius(2, 0, 0, 1)]


def test_several_inverted_polynomials():
    spec = RingSpec.localized_poly(2, [(1, 1), (1, 1, 1)], True)
    auts = ring_automorphisms(spec)
    assert len(auts) == 6
    assert auts[0] == IDENTITY
    t = variable(spec)
    images = {apply_ring_aut(sigma, t) for sigma in auts}
    assert len(images) == 6
    for sigma in auts:
        for tau in auts:
            assert apply_ring_aut(sigma, apply_ring_aut(tau, t)) in images
    x = fixed_transcendental(spec)
    assert is_unit(x) is None
    assert all(apply_ring_aut(sigma, x) == x for sigma in auts)


@pytest.mark.parametrize("f", [(1, 0, 1, 1), (1, 1, 1), (1, 1, 0, 1)])
def test_matrix_stabilizer_agrees_with_monomial_search(f):
    spec = RingSpec.localized_poly(2, [f], True)
    t = variable(spec)
    by_search = {apply_ring_aut(sigma, t) for sigma in ring_aut_search(spec, bound=3)}
    assert by_search == {apply_ring_aut(sigma, t) for sigma in mobius_stabilizer(spec)}


def test_self_reciprocal_search_is_closed_under_composition():
    spec = RingSpec.localized_poly(2, [(1, 1, 1)], True)
    found = ring_aut_search(spec, bound=3)
    t = variable(spec)
    images = {apply_ring_aut(sigma, t) for sigma in found}
    assert inverse(t) in images
    for sigma in found:
        for tau in found:
            assert apply_ring_aut(sigma, apply_ring_aut(tau, t)) in images


@pytest.mark.parametrize("name", sorted(RINGS))
@settings(max_examples=1000, deadline=None)
@given(st.data())
def test_ring_axioms(name, data):
    spec = RINGS[name]
    a, b, c = (data.draw(ring_elements(spec)) for _ in range(3))
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(add(a, b), c) == add(mul(a, c), mul(b, c))
    assert add(a, b) == add(b, a)
    assert mul(a, b) == mul(b, a)
    assert add(a, -a) == zero(spec)
    assert mul(a, one(spec)) == a


@pytest.mark.parametrize("name", sorted(RINGS))
@settings(max_examples=200, deadline=None)
@given(st.data())
def test_unit_times_inverse(name, data):
    spec = RINGS[name]
    u = data.draw(units(spec))
    assert mul(u, inverse(u)) == one(spec)
    assert is_unit(u).expand() == u


REDUCTIONS = {
    "Z[1/6] mod 5": (RINGS["Z[1/6]"], 5),
    "Z[sqrt(2)] mod 7": (RINGS["Z[sqrt(2)]"], 7),
    "R_f mod t^2+t+1": (RINGS["R_f"], (1, 1, 1)),
    "F3[t] mod t^2+1": (RINGS["F3[t]"], (1, 0, 1)),
}


@pytest.mark.parametrize("case", sorted(REDUCTIONS))
@settings(max_examples=300, deadline=None)
@given(st.data())
def test_reduction_is_a_ring_homomorphism(case, data):
    spec, modulus = REDUCTIONS[case]
    a = data.draw(ring_elements(spec))
    b = data.draw(ring_elements(spec))
    assert reduce_mod(add(a, b), modulus) == add(reduce_mod(a, modulus), reduce_mod(b, modulus))
    assert reduce_mod(mul(a, b), modulus) == mul(reduce_mod(a, modulus), reduce_mod(b, modulus))
    assert reduce_mod(one(spec), modulus) == one(residue_field(spec, modulus))


AUTOMORPHISMS = {
    "quad_conj on Z[sqrt(2)]": (RINGS["Z[sqrt(2)]"], QUADRATIC_CONJUGATION),
    "frobenius on F4": (F4, frobenius(1)),
    "frobenius on F9": (RingSpec.finite_field(3, (1, 0, 1)), frobenius(1)),
    "affine on F3[t]": (RINGS["F3[t]"], affine(2, 1)),
    "inversion on F2[t,t^-1]": (RINGS["F2[t,t^-1]"], monomial(-1, 0, 0, 1)),
    "inversion on F2[t,t^-1,(t^2+t+1)^-1]": (RingSpec.localized_poly(2, [(1, 1, 1)], True), monomial(-1, 0, -2, 1)),
    "mobius on F2[t,(t+1)^-1]": (RingSpec.localized_poly(2, [(1, 1)], False), mobius(1, 0, 1, 1)),
}


@pytest.mark.parametrize("case", sorted(AUTOMORPHISMS))
@settings(max_examples=300, deadline=None)
@given(st.data())
def test_ring_automorphisms_respect_sum_and_product(case, data):
    spec, sigma = AUTOMORPHISMS[case]
    a = data.draw(ring_elements(spec))
    b = data.draw(ring_elements(spec))
    assert apply_ring_aut(sigma, add(a, b)) == add(apply_ring_aut(sigma, a), apply_ring_aut(sigma, b))
    assert apply_ring_aut(sigma, mul(a, b)) == mul(apply_ring_aut(sigma, a), apply_ring_aut(sigma, b))
    assert apply_ring_aut(sigma, one(spec)) == one(spec)
    assert apply_ring_aut(inverse_descriptor(sigma, spec), apply_ring_aut(sigma, a)) == a
