"""Splitting diagonal conjugators along I and the compensating element d^c_*."""

from dataclasses import dataclass
from typing import Sequence

from ..errors import IndexOutOfPattern, NGViolated, NotAUnit
from ..groups.element import GroupElement, diagonal_element
from ..groups.index_set import IndexSet, ng_condition
from ..rings.element import RingElement, is_unit, mul, one


@dataclass(frozen=True)
class DiagonalSplit:
    d_i: tuple[RingElement, ...]
    d_c: tuple[RingElement, ...]

    def recombine(self) -> tuple[RingElement, ...]:
        return tuple(mul(a, b) for a, b in zip(self.d_i, self.d_c))


def split_diagonal(d: Sequence[RingElement], ix: IndexSet) -> DiagonalSplit:
    """d = d_I * d_c with d_I supported on I and d_c on the complement."""
    if len(d) != ix.n:
        raise IndexOutOfPattern(f"diagonal has {len(d)} entries, expected {ix.n}")
    for k, u in enumerate(d, start=1):
        if is_unit(u) is None:
            raise NotAUnit(f"diagonal entry {k} = {u} is not a unit")
    unit = one(d[0].spec)
    d_i = tuple(u if k in ix else unit for k, u in enumerate(d, start=1))
    d_c = tuple(unit if k in ix else u for k, u in enumerate(d, start=1))
    return DiagonalSplit(d_i, d_c)


def dc_star(d_c: Sequence[RingElement], ix: IndexSet) -> GroupElement:
    """d_1(u_2) d_2(u_1) d_{n-1}(u_n) d_n(u_{n-1}) with u_i = 1 for i in I.

    Conjugating by it undoes what conjugation by d_c does to the slots (1,2) and
    (n-1,n).
    """
    if not ng_condition(ix):
        raise NGViolated(f"I={ix.label} fails (NG) for n={ix.n}")
    n = ix.n
    if len(d_c) != n:
        raise IndexOutOfPattern(f"d_c has {len(d_c)} entries, expected {n}")
    unit = one(d_c[0].spec)
    for k in ix.members:
        if d_c[k - 1] != unit:
            raise IndexOutOfPattern(f"d_c must be 1 at position {k} in I={ix.label}")
    u = [None] + list(d_c)
    out = [None] + [unit] * n
    for pos, src in ((1, 2), (2, 1), (n - 1, n), (n, n - 1)):
        out[pos] = mul(out[pos], u[src])
    for k in range(1, n + 1):
        if k not in ix and out[k] != unit:
            raise NGViolated(f"d^c_* would place {out[k]} at position {k} outside I={ix.label}")
    return diagonal_element(ix, d_c[0].spec, out[1:])
