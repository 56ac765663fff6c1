"""Hypothesis strategies over the supported rings and groups."""

import random

from hypothesis import strategies as st

from twistmat.groups.element import random_group_element, random_unipotent
from twistmat.groups.index_set import IndexSet
from twistmat.rings.sampling import random_element, random_unit
from twistmat.rings.spec import RingSpec

RINGS = {
    "Z": RingSpec.integers(),
    "Z[1/6]": RingSpec.s_integers([2, 3]),
    "Z[sqrt(2)]": RingSpec.quadratic(2),
    "F2[t]": RingSpec.poly(2),
    "F2[t,t^-1]": RingSpec.localized_poly(2, (), True),
    "R_f": RingSpec.localized_poly(2, [(1, 0, 1, 1)], True),
    "F3[t]": RingSpec.poly(3),
}

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def ring_elements(spec: RingSpec, height: int = 50, degree: int = 3):
    return seeds.map(lambda s: random_element(random.Random(s), spec, height, degree))


def units(spec: RingSpec):
    return seeds.map(lambda s: random_unit(random.Random(s), spec))


def index_sets(n: int):
    return st.sets(st.integers(1, n)).map(lambda members: IndexSet.of(n, members))


def group_elements(ix: IndexSet, ring: RingSpec):
    return seeds.map(lambda s: random_group_element(random.Random(s), ix, ring, 20, 3))


def unipotents(ix: IndexSet, ring: RingSpec):
    return seeds.map(lambda s: random_unipotent(random.Random(s), ix, ring, 20, 3))
