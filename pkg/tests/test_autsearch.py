import pytest

from twistmat.automorphisms import flip, induce_on_quotient
from twistmat.errors import TooLarge
from twistmat.groups import MOD_COMMUTATOR_U, FiniteGroup, IndexSet, cyclic_group, enumerate_finite_group
from twistmat.twisted import enumerate_automorphisms_small, survey_automorphisms
from twistmat.twisted.autsearch import compose_permutations, invert_permutation, is_group


@pytest.fixture
def f2_cubed(F2):
    """U_4(F_2) / U_4(F_2)' = F_2^3."""
    return enumerate_finite_group(IndexSet.of(4), F2, MOD_COMMUTATOR_U)


def test_cyclic_groups():
    assert enumerate_automorphisms_small(cyclic_group(4)) == [(0, 1, 2, 3), (0, 3, 2, 1)]
    assert len(enumerate_automorphisms_small(cyclic_group(5))) == 4
    assert len(enumerate_automorphisms_small(cyclic_group(1))) == 1


def test_elementary_abelian_group(f2_cubed):
    auts = enumerate_automorphisms_small(f2_cubed)
    assert len(auts) == 168
    assert auts == sorted(auts)
    assert is_group(auts)


def test_superdiagonal_automorphisms_of_f2_cubed(F2, f2_cubed):
    survey = survey_automorphisms(f2_cubed)
    assert survey.count == 168
    assert not survey.all_superdiagonal
    # slot permutations only; F_2 has a single additive bijection
    assert sum(1 for form in survey.forms if form is not None) == 6
    assert survey.slot_fixed_count(2) == 2
    perm = f2_cubed.permutation(induce_on_quotient(flip(), MOD_COMMUTATOR_U, IndexSet.of(4), F2))
    assert perm in survey.automorphisms


def test_search_limit(F2, ix423):
    with pytest.raises(TooLarge):
        enumerate_automorphisms_small(enumerate_finite_group(ix423, F2), limit=10)


def test_generators_must_generate():
    group = cyclic_group(4)
    partial = FiniteGroup("Z/4", group.elements, group.op, group.inv, [2])
    with pytest.raises(ValueError):
        enumerate_automorphisms_small(partial)


def test_permutation_helpers():
    p = (1, 2, 0)
    assert compose_permutations(p, invert_permutation(p)) == (0, 1, 2)
    assert compose_permutations(p, p) == (2, 0, 1)
    assert not is_group([p])
    assert is_group([(0, 1, 2), p, compose_permutations(p, p)])


@pytest.mark.slow
def test_abelianized_four_by_four_over_f3(F3, ix423):
    group = enumerate_finite_group(ix423, F3, MOD_COMMUTATOR_U)
    survey = survey_automorphisms(group)
    assert survey.order == 108
    assert survey.count > 0
    assert survey.all_superdiagonal
    assert is_group(survey.automorphisms)
    perm = group.permutation(induce_on_quotient(flip(), MOD_COMMUTATOR_U, ix423, F3))
    assert perm in survey.automorphisms
