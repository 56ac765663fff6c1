import pytest

from strategies import RINGS
from twistmat.errors import IncompatibleQuotient, SpecMismatch
from twistmat.groups import MOD_CENTER_U4, MOD_COMMUTATOR_U, NONE, IndexSet, diagonal_gen, elementary, identity, make_element, multiply
from twistmat.groups.quotients import mod_ideal
from twistmat.ingest import (
    parse_automorphism,
    parse_element,
    parse_group_element,
    parse_index_set,
    parse_quotient,
    parse_ring_automorphism,
    parse_ring_spec,
    parse_word,
)
from twistmat.rings import add, from_int, from_poly, inverse, mul, neg, normalize, one, power, variable
from twistmat.rings.automorphisms import IDENTITY, QUADRATIC_CONJUGATION, affine, frobenius, mobius, monomial
from twistmat.rings.spec import RingSpec


# Ring specs


def test_ring_specs(ZZ, Z6, R_f):
    assert parse_ring_spec({"kind": "integers"}) == ZZ
    assert parse_ring_spec('{"kind": "s_integers", "primes": [3, 2]}') == Z6
    assert parse_ring_spec({"kind": "localized_poly", "p": 2, "t_inverted": True, "inverted": ["1101"]}) == R_f
    assert parse_ring_spec({"kind": "localized_poly", "p": 2, "t_inverted": True, "inverted": ["t^3+t+1"]}) == R_f
    assert parse_ring_spec({"kind": "poly", "p": 2}) == RingSpec.poly(2)
    assert parse_ring_spec({"kind": "finite_field", "p": 3}) == RingSpec.finite_field(3)


@pytest.mark.parametrize(
    "bad",
    [
        {"kind": "bogus"},
        {"kind": "quadratic"},
        {"kind": "s_integers", "primes": "2,3"},
        {"kind": "localized_poly", "p": 2, "inverted": ["01"]},
        "not json",
        "[1, 2]",
    ],
)
def test_bad_ring_specs(bad):
    with pytest.raises(ValueError):
        parse_ring_spec(bad)


# Ring elements


def test_parse_elements(ZZ, Z6, R_f):
    t = variable(R_f)
    assert parse_element(R_f, "(t+1)*t^-2") == mul(from_poly(R_f, (1, 1)), power(t, -2))
    assert parse_element(Z6, "5/6") == normalize(Z6, 5, 6)
    assert parse_element(ZZ, 7) == from_int(ZZ, 7)
    assert parse_element(ZZ, "-3 - 4") == from_int(ZZ, -7)
    assert parse_element(ZZ, "2^3") == from_int(ZZ, 8)


def test_parse_quadratic_element():
    ring = RINGS["Z[sqrt(2)]"]
    value = parse_element(ring, "1+2*sqrt(2)")
    assert str(value) == "1+2*sqrt(2)"
    assert mul(value, value) == parse_element(ring, "9+4*sqrt(2)")
    with pytest.raises(ValueError):
        parse_element(ring, "sqrt(3)")


def test_implicit_multiplication():
    ring = RINGS["F3[t]"]
    assert parse_element(ring, "2t") == mul(from_int(ring, 2), variable(ring))
    assert parse_element(ring, "2(t+1)") == mul(from_int(ring, 2), add(variable(ring), one(ring)))


def test_field_generator():
    F4 = RingSpec.finite_field(2, (1, 1, 1))
    s = parse_element(F4, "s")
    assert parse_element(F4, "s^2") == add(s, one(F4))
    assert parse_element(F4, "s^-1") == inverse(s)


@pytest.mark.parametrize("text", ["", "t", "1/2", "3 $", "(1+2", "2^x", True])
def test_bad_elements(ZZ, text):
    with pytest.raises(ValueError):
        parse_element(ZZ, text)


# Index sets and quotients


@pytest.mark.parametrize("members", ["2,3", "{2,3}", " 3 , 2 ", [2, 3]])
def test_parse_index_set(members, ix423):
    assert parse_index_set(4, members) == ix423


def test_parse_empty_index_set():
    assert parse_index_set(3, "") == IndexSet.of(3)
    assert parse_index_set(3, "{}") == IndexSet.of(3)
    with pytest.raises(ValueError):
        parse_index_set(3, "a,b")
    with pytest.raises(ValueError):
        parse_index_set(3, "4")


def test_parse_quotients(R_f):
    assert parse_quotient(None) == NONE
    assert parse_quotient("mod_commutator_u") == MOD_COMMUTATOR_U
    assert parse_quotient('{"quotient": "mod_center_u4"}') == MOD_CENTER_U4
    assert parse_quotient({"mod_ideal": 5}) == mod_ideal(5)
    assert parse_quotient({"mod_ideal": "7"}) == mod_ideal(7)
    assert parse_quotient({"quotient": "mod_ideal", "modulus": 3}) == mod_ideal(3)
    assert parse_quotient({"mod_ideal": "t^2+t+1"}, R_f) == mod_ideal((1, 1, 1))


def test_bad_quotients(ZZ):
    with pytest.raises(IncompatibleQuotient):
        parse_quotient("bogus")
    with pytest.raises(ValueError):
        parse_quotient({"mod_ideal": "t+1"}, ZZ)
    with pytest.raises(ValueError):
        parse_quotient({"mod_ideal": [1, 1]})
    with pytest.raises(ValueError):
        parse_quotient({"modulus": 3})
    with pytest.raises(ValueError):
        parse_quotient(3)


# Group elements and words


def test_group_element_object(ZZ, ix423):
    g = parse_group_element(ix423, ZZ, {"diag": ["1", "-1", "1", "1"], "upper": {"1,2": "3", "2,4": -1}})
    m = neg(one(ZZ))
    expected = make_element(ix423, ZZ, {(1, 2): from_int(ZZ, 3), (2, 4): m}, [one(ZZ), m, one(ZZ), one(ZZ)])
    assert g == expected
    assert parse_group_element(ix423, ZZ, '{"upper": {"1,2": "3", "2,4": "-1"}, "diag": [1, -1, 1, 1]}') == expected


def test_group_element_needs_valid_positions(ZZ, ix423):
    with pytest.raises(ValueError):
        parse_group_element(ix423, ZZ, {"upper": {"12": "1"}})
    with pytest.raises(ValueError):
        parse_group_element(ix423, ZZ, [1, 2])


def test_parse_word(R_f, ix423):
    t = variable(R_f)
    g = parse_word(ix423, R_f, "e(1,2;t+1)*d(2;t^-1)")
    assert g == multiply(elementary(ix423, R_f, 1, 2, add(t, one(R_f))), diagonal_gen(ix423, R_f, 2, inverse(t)))
    assert parse_group_element(ix423, R_f, "e(1,2;t+1)*d(2;t^-1)") == g


def test_word_powers(ZZ, ix423):
    assert parse_word(ix423, ZZ, "e(1,3;1)^-1") == elementary(ix423, ZZ, 1, 3, from_int(ZZ, -1))
    assert parse_word(ix423, ZZ, "e(1,3;2)^3") == elementary(ix423, ZZ, 1, 3, from_int(ZZ, 6))
    for text in ("", "1", "id"):
        assert parse_word(ix423, ZZ, text) == identity(ix423, ZZ)


@pytest.mark.parametrize("text", ["x(1;2)", "e(1;2)", "d(2,3;1)", "e(1,2)", "e(1,2;1)*"])
def test_bad_words(ZZ, ix423, text):
    with pytest.raises(ValueError):
        parse_word(ix423, ZZ, text)


# Automorphisms


def test_parse_ring_automorphisms():
    assert parse_ring_automorphism("id") == IDENTITY
    assert parse_ring_automorphism("identity") == IDENTITY
    assert parse_ring_automorphism("quad_conj") == QUADRATIC_CONJUGATION
    assert parse_ring_automorphism({"frobenius": 1}) == frobenius(1)
    assert parse_ring_automorphism({"affine": [1, 1]}) == affine(1, 1)
    assert parse_ring_automorphism({"monomial": [-1, 0, -2, 1]}) == monomial(-1, 0, -2, 1)
    assert parse_ring_automorphism({"kind": "monomial", "a": -1}) == monomial(-1, 0, 0, 1)
    assert parse_ring_automorphism('{"kind": "affine", "scale": 1, "shift": 1}') == affine(1, 1)
    assert parse_ring_automorphism({"mobius": [1, 0, 1, 1]}) == mobius(1, 0, 1, 1)
    assert parse_ring_automorphism({"kind": "mobius", "matrix": [1, 0, 1, 1]}) == mobius(1, 0, 1, 1)


def test_bad_ring_automorphisms():
    with pytest.raises(ValueError):
        parse_ring_automorphism("foo")
    with pytest.raises(ValueError):
        parse_ring_automorphism({"kind": "swap"})
    with pytest.raises(ValueError):
        parse_ring_automorphism(5)
    with pytest.raises(ValueError):
        parse_ring_automorphism({"mobius": [1, 0, 1]})


def test_parse_automorphism_list(ZZ, ix423):
    phi = parse_automorphism(ix423, ZZ, '[{"atom": "flip"}, {"atom": "diag_conj", "d": ["-1", "1", "1", "1"]}]')
    assert phi.label == "flip o diag_conj"
    # diag_conj first, then flip
    x = elementary(ix423, ZZ, 1, 2, one(ZZ))
    assert phi(x) == elementary(ix423, ZZ, 3, 4, from_int(ZZ, -1))


def test_parse_single_atoms(Z6, ix423):
    assert parse_automorphism(ix423, Z6, {"atom": "identity"}).label == "id"
    assert parse_automorphism(ix423, Z6, []).label == "id"
    inner = parse_automorphism(ix423, Z6, [{"atom": "inner", "g": "d(2;3)"}])
    x = elementary(ix423, Z6, 2, 3, one(Z6))
    assert inner(x) == elementary(ix423, Z6, 2, 3, from_int(Z6, 3))


def test_parse_abels3_atoms(Z6):
    ix = IndexSet.of(3, {2})
    phi = parse_automorphism(ix, Z6, [{"atom": "abels3_phi_v", "v": "2"}])
    assert phi(identity(ix, Z6)) == identity(ix, Z6)
    assert parse_automorphism(ix, Z6, [{"atom": "abels3_phi"}])(identity(ix, Z6)) == identity(ix, Z6)


def test_ring_atom_is_checked_against_ring(ZZ, ix423):
    with pytest.raises(SpecMismatch):
        parse_automorphism(ix423, ZZ, [{"atom": "ring", "desc": "quad_conj"}])
    laurent = RINGS["F2[t,t^-1]"]
    phi = parse_automorphism(ix423, laurent, [{"atom": "ring", "desc": {"monomial": [-1, 0, 0, 1]}}])
    t = variable(laurent)
    assert phi(elementary(ix423, laurent, 1, 2, t)) == elementary(ix423, laurent, 1, 2, inverse(t))


@pytest.mark.parametrize(
    "atoms",
    [
        [{"atom": "nope"}],
        [1],
        '"flip"',
        [{"atom": "diag_conj", "d": ["1", "1"]}],
        "[{",
    ],
)
def test_bad_automorphisms(ZZ, ix423, atoms):
    with pytest.raises(ValueError):
        parse_automorphism(ix423, ZZ, atoms)
