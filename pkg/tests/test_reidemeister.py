import random

import pytest
from hypothesis import given, settings

from strategies import RINGS, group_elements
from twistmat.automorphisms import compose, diag_conj, flip, induce_on_quotient, inner
from twistmat.errors import KernelNotInvariant, NotAnAutomorphism, TooLarge
from twistmat.groups import (
    MOD_CENTER_U4,
    MOD_COMMUTATOR_U,
    FiniteGroup,
    IndexSet,
    cyclic_group,
    elementary,
    enumerate_finite_group,
    identity,
    multiply,
)
from twistmat.groups.quotients import superdiagonal
from twistmat.rings import from_int, one
from twistmat.twisted import (
    conjugacy_class_count,
    fixed_points_finite,
    heath_finiteness_check,
    reidemeister_classes_finite,
    reidemeister_lower_bound_via_quotient,
    twisted_conjugate,
)
from twistmat.twisted.unionfind import UnionFind

NEGATE4 = (0, 3, 2, 1)


@pytest.fixture
def u4(F2, ix423):
    return enumerate_finite_group(ix423, F2)


def _shuffled(group: FiniteGroup, seed: int) -> FiniteGroup:
    elements = list(group.elements)
    random.Random(seed).shuffle(elements)
    gens = [group.elements[g] for g in group.generators]
    return FiniteGroup(group.label, elements, group.op, group.inv, gens, group.info)


def test_union_find_keeps_least_root():
    uf = UnionFind(5)
    uf.union(4, 2)
    uf.union(2, 3)
    assert uf.find(4) == 2
    assert uf.find(3) == 2
    assert len(uf) == 3
    assert uf.reps() == [0, 1, 2]


def test_twisted_conjugate_on_cyclic_group():
    group = cyclic_group(4)
    assert twisted_conjugate(lambda a: (-a) % 4, 0, 1, group) == 2


def test_negation_on_small_cyclic_groups():
    report = reidemeister_classes_finite(cyclic_group(4), NEGATE4, label="negate")
    assert report.count == 2
    assert report.representatives == [0, 1]
    assert report.sizes == [2, 2]
    assert report.as_row() == {"group": "Z/4", "order": 4, "automorphism": "negate", "reidemeister": 2}
    assert reidemeister_classes_finite(cyclic_group(5), lambda a: (-a) % 5).count == 1


def test_identity_counts_conjugacy_classes(u4):
    report = reidemeister_classes_finite(u4, lambda g: g, label="id")
    assert report.count == conjugacy_class_count(u4) == 16
    assert sum(report.sizes) == 64
    assert reidemeister_classes_finite(cyclic_group(4), lambda a: a).count == 4


def test_inner_twist_invariance(u4, ix423, F2):
    tau = flip()
    base = reidemeister_classes_finite(u4, tau).count
    rng = random.Random(20240001)
    for _ in range(20):
        g = u4.elements[rng.randrange(len(u4))]
        assert reidemeister_classes_finite(u4, compose(inner(g), tau)).count == base


def test_count_is_independent_of_enumeration_order(u4):
    tau = flip()
    base = reidemeister_classes_finite(u4, tau)
    for seed in (1, 2, 3):
        other = reidemeister_classes_finite(_shuffled(u4, seed), tau)
        assert other.count == base.count
        assert sorted(other.sizes) == sorted(base.sizes)


def test_representatives_are_least_in_class(u4):
    report = reidemeister_classes_finite(u4, flip())
    for rep in report.representatives:
        assert min(report.classes[rep]) == rep


def test_quotient_lower_bound(u4, ix423, F2):
    tau = flip()
    r_phi = reidemeister_classes_finite(u4, tau).count
    for q in (MOD_COMMUTATOR_U, MOD_CENTER_U4):
        bound = reidemeister_lower_bound_via_quotient(u4, q, tau)
        assert bound <= r_phi
        quotient = enumerate_finite_group(ix423, F2, q)
        induced = induce_on_quotient(tau, q, ix423, F2)
        assert reidemeister_classes_finite(quotient, induced).count == bound


def test_quotient_lower_bound_on_more_triples(F3, ix423):
    group = enumerate_finite_group(ix423, F3, MOD_COMMUTATOR_U)
    two = from_int(F3, 2)
    phis = [
        lambda x: x,
        induce_on_quotient(flip(), MOD_COMMUTATOR_U, ix423, F3),
        induce_on_quotient(compose(flip(), diag_conj([two, one(F3), one(F3), one(F3)])), MOD_COMMUTATOR_U, ix423, F3),
    ]
    # N: the superdiagonal subgroup
    unipotent = [k for k, x in enumerate(group.elements) if all(d == one(F3) for d in x.diagonal)]
    for phi in phis:
        r_phi = reidemeister_classes_finite(group, phi).count
        assert reidemeister_lower_bound_via_quotient(group, unipotent, phi) <= r_phi


def test_non_invariant_subgroup_is_rejected(u4, ix423, F2):
    e12 = u4.index_of(elementary(ix423, F2, 1, 2, one(F2)))
    with pytest.raises(KernelNotInvariant):
        reidemeister_lower_bound_via_quotient(u4, [u4.identity_index, e12], flip())


def test_heath_bookkeeping(u4):
    report = heath_finiteness_check(u4, MOD_COMMUTATOR_U, flip())
    assert report.consistent
    assert report.r_quotient <= report.r_phi <= report.upper_bound
    assert report.r_phi == reidemeister_classes_finite(u4, flip()).count
    assert len(report.fibers) == report.r_quotient


def test_heath_bookkeeping_on_quotient(F3, ix423):
    group = enumerate_finite_group(ix423, F3, MOD_COMMUTATOR_U)
    unipotent = [k for k, x in enumerate(group.elements) if all(d == one(F3) for d in x.diagonal)]
    report = heath_finiteness_check(group, unipotent, lambda x: x)
    assert report.consistent
    assert report.r_phi == conjugacy_class_count(group)


def test_rejects_non_automorphisms():
    group = cyclic_group(4)
    with pytest.raises(NotAnAutomorphism):
        reidemeister_classes_finite(group, (0, 2, 1, 3))
    with pytest.raises(NotAnAutomorphism):
        reidemeister_classes_finite(group, (0, 0, 0, 0))
    with pytest.raises(NotAnAutomorphism):
        reidemeister_classes_finite(group, (0, 1))


def test_size_limit(monkeypatch):
    monkeypatch.setenv("TWISTMAT_LIMIT", "3")
    with pytest.raises(TooLarge):
        reidemeister_classes_finite(cyclic_group(4), NEGATE4)


def test_fixed_points(u4, ix423, F2):
    assert fixed_points_finite(cyclic_group(4), NEGATE4) == [0, 2]
    fixed = fixed_points_finite(u4, flip())
    assert u4.index_of(identity(ix423, F2)) in fixed
    assert u4.index_of(elementary(ix423, F2, 2, 3, one(F2))) in fixed


def test_flip_fixes_palindromic_superdiagonals(F2):
    ix = IndexSet.of(4)
    group = enumerate_finite_group(ix, F2, MOD_COMMUTATOR_U)
    fixed = fixed_points_finite(group, induce_on_quotient(flip(), MOD_COMMUTATOR_U, ix, F2))
    assert len(fixed) == 4
    triples = {tuple(str(r) for r in superdiagonal(group.elements[k])) for k in fixed}
    assert triples == {(a, b, a) for a in "01" for b in "01"}


TWIST_IX = IndexSet.of(4, {2, 3})
TWIST_RING = RINGS["Z[1/6]"]


@settings(max_examples=200, deadline=None)
@given(group_elements(TWIST_IX, TWIST_RING), group_elements(TWIST_IX, TWIST_RING), group_elements(TWIST_IX, TWIST_RING))
def test_twisted_conjugation_is_a_left_action(x, g, h):
    phi = compose(flip(), diag_conj([from_int(TWIST_RING, k) for k in (2, 1, 1, 3)]))
    assert twisted_conjugate(phi, twisted_conjugate(phi, x, g), h) == twisted_conjugate(phi, x, multiply(h, g))
    assert twisted_conjugate(phi, x, identity(TWIST_IX, TWIST_RING)) == x


def test_twisted_conjugation_is_a_left_action_on_a_finite_group(u4):
    tau = flip()
    rng = random.Random(20240001)
    for _ in range(200):
        x, g, h = (u4.elements[rng.randrange(len(u4))] for _ in range(3))
        twice = twisted_conjugate(tau, twisted_conjugate(tau, x, g, u4), h, u4)
        assert twice == twisted_conjugate(tau, x, u4.op(h, g), u4)
