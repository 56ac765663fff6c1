"""Projective diagonal classes: D_n/Z_n versus T_I when |I| = n - 1."""

import itertools
from dataclasses import dataclass
from typing import Sequence

from ..config.limits import enumeration_limit
from ..errors import PreconditionUnmet, TooLarge
from ..rings.element import RingElement, inverse, mul, one
from ..rings.finite_fields import field_units
from ..rings.spec import RingSpec
from .element import GroupElement, diagonal_element
from .index_set import IndexSet


def _missing_index(ix: IndexSet) -> int:
    if len(ix.complement) != 1:
        raise PreconditionUnmet(f"|I| must be n-1, got I={ix.label} for n={ix.n}")
    return next(iter(ix.complement))


def projective_representative(ix: IndexSet, diagonal: Sequence[RingElement]) -> GroupElement:
    """The element of T_I in the scalar class of diag(diagonal)."""
    m = _missing_index(ix)
    scale = inverse(diagonal[m - 1])
    ring = diagonal[0].spec
    return diagonal_element(ix, ring, [mul(scale, u) for u in diagonal])


@dataclass(frozen=True)
class PBCheck:
    diagonal_count: int
    class_count: int
    torus_size: int
    homomorphism: bool
    class_invariant: bool
    surjective: bool

    @property
    def ok(self) -> bool:
        return self.homomorphism and self.class_invariant and self.surjective and self.class_count == self.torus_size


def pb_isomorphism_check(ix: IndexSet, field: RingSpec, limit: int | None = None) -> PBCheck:
    """Exhaustively compare D_n(F_q)/Z_n(F_q) with T_I(F_q) through projective_representative."""
    m = _missing_index(ix)
    units = field_units(field)
    limit = enumeration_limit() if limit is None else limit
    size = len(units) ** ix.n
    if size * size > limit:
        raise TooLarge(size * size, limit, "diagonal pair set")
    diagonals = list(itertools.product(units, repeat=ix.n))
    reps = {d: projective_representative(ix, d) for d in diagonals}
    homomorphism = all(
        reps[tuple(mul(x, y) for x, y in zip(a, b))].diagonal == tuple(mul(x, y) for x, y in zip(reps[a].diagonal, reps[b].diagonal))
        for a in diagonals
        for b in diagonals
    )
    class_invariant = all(reps[tuple(mul(lam, x) for x in d)] == reps[d] for d in diagonals for lam in units)
    classes = {frozenset(tuple(mul(lam, x) for x in d) for lam in units) for d in diagonals}
    image = {r.diagonal for r in reps.values()}
    torus = {d for d in diagonals if d[m - 1] == one(field)}
    return PBCheck(
        diagonal_count=len(diagonals),
        class_count=len(classes),
        torus_size=len(torus),
        homomorphism=homomorphism,
        class_invariant=class_invariant,
        surjective=image == torus,
    )
