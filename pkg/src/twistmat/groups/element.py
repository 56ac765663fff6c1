"""Elements of S_n^I(R) = U_n(R) x| T_I(R) stored as (unipotent factor, diagonal).

The unipotent factor keeps only its nonzero strictly-upper entries, sorted by
position, so equal elements are structurally equal. The matrix represented is
(unipotent) * (diagonal).
"""

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Mapping, Sequence

from ..errors import IndexOutOfPattern, NotAUnit, SpecMismatch
from ..rings.element import RingElement, add, inverse, is_unit, mul, neg, one, zero
from ..rings.sampling import random_element, random_unit
from ..rings.spec import RingSpec
from .index_set import IndexSet

Position = tuple[int, int]


@lru_cache(maxsize=None)
def _one(spec: RingSpec) -> RingElement:
    return one(spec)


@lru_cache(maxsize=None)
def _zero(spec: RingSpec) -> RingElement:
    return zero(spec)


@dataclass(frozen=True)
class GroupElement:
    index_set: IndexSet
    ring: RingSpec
    upper: tuple[tuple[Position, RingElement], ...]
    diagonal: tuple[RingElement, ...]

    @property
    def n(self) -> int:
        return self.index_set.n

    @cached_property
    def entries(self) -> dict[Position, RingElement]:
        return dict(self.upper)

    def entry(self, i: int, j: int) -> RingElement:
        """Entry (i, j) of the unipotent factor."""
        return self.entries.get((i, j), _zero(self.ring))

    @property
    def is_unipotent(self) -> bool:
        unit = _one(self.ring)
        return all(d == unit for d in self.diagonal)

    @property
    def is_identity(self) -> bool:
        return not self.upper and self.is_unipotent

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)


def _build(ix: IndexSet, ring: RingSpec, entries: Mapping[Position, RingElement], diagonal: Sequence[RingElement]) -> GroupElement:
    upper = tuple(sorted((pos, x) for pos, x in entries.items() if not x.is_zero))
    return GroupElement(ix, ring, upper, tuple(diagonal))


def make_element(ix: IndexSet, ring: RingSpec, entries: Mapping[Position, RingElement] | None = None,
                 diagonal: Sequence[RingElement] | None = None) -> GroupElement:
    """Validated constructor enforcing the S_n^I pattern."""
    entries = dict(entries or {})
    n = ix.n
    for (i, j), x in entries.items():
        if not 1 <= i < j <= n:
            raise IndexOutOfPattern(f"position ({i},{j}) is not strictly upper triangular for n={n}")
        if x.spec != ring:
            raise SpecMismatch(f"entry ({i},{j}) lives in {x.spec.label}, expected {ring.label}")
    unit = _one(ring)
    if diagonal is None:
        diagonal = (unit,) * n
    if len(diagonal) != n:
        raise IndexOutOfPattern(f"diagonal has {len(diagonal)} entries, expected {n}")
    for k, d in enumerate(diagonal, start=1):
        if d.spec != ring:
            raise SpecMismatch(f"diagonal entry {k} lives in {d.spec.label}")
        if k not in ix and d != unit:
            raise IndexOutOfPattern(f"diagonal entry {k} must be 1 since {k} is not in I={ix.label}")
        if is_unit(d) is None:
            raise NotAUnit(f"diagonal entry {k} = {d} is not a unit")
    return _build(ix, ring, entries, diagonal)


def identity(ix: IndexSet, ring: RingSpec) -> GroupElement:
    return GroupElement(ix, ring, (), (_one(ring),) * ix.n)


def elementary(ix: IndexSet, ring: RingSpec, i: int, j: int, r: RingElement) -> GroupElement:
    """e_{i,j}(r)."""
    if not 1 <= i < j <= ix.n:
        raise IndexOutOfPattern(f"e_({i},{j}) is not strictly upper triangular for n={ix.n}")
    if r.spec != ring:
        raise SpecMismatch(f"{r} lives in {r.spec.label}, expected {ring.label}")
    return _build(ix, ring, {(i, j): r}, (_one(ring),) * ix.n)


def diagonal_gen(ix: IndexSet, ring: RingSpec, i: int, u: RingElement) -> GroupElement:
    """d_i(u); requires i in I and u a unit."""
    if i not in ix:
        raise IndexOutOfPattern(f"d_{i} needs {i} in I={ix.label}")
    if u.spec != ring:
        raise SpecMismatch(f"{u} lives in {u.spec.label}, expected {ring.label}")
    if is_unit(u) is None:
        raise NotAUnit(f"{u} is not a unit of {ring.label}")
    diag = [_one(ring)] * ix.n
    diag[i - 1] = u
    return GroupElement(ix, ring, (), tuple(diag))


def diagonal_element(ix: IndexSet, ring: RingSpec, diagonal: Sequence[RingElement]) -> GroupElement:
    return make_element(ix, ring, {}, diagonal)


def _check(a: GroupElement, b: GroupElement) -> None:
    if a.index_set != b.index_set or a.ring != b.ring:
        raise SpecMismatch(f"S_{a.n}^{a.index_set.label}({a.ring.label}) vs S_{b.n}^{b.index_set.label}({b.ring.label})")


def conjugate_unipotent(entries: Mapping[Position, RingElement], diagonal: Sequence[RingElement],
                        ring: RingSpec) -> dict[Position, RingElement]:
    """Entries of d U d^-1: (i, j) scaled by d_i d_j^-1."""
    unit = _one(ring)
    inv_cache: dict[int, RingElement] = {}
    out = {}
    for (i, j), x in entries.items():
        di, dj = diagonal[i - 1], diagonal[j - 1]
        if di == unit and dj == unit:
            out[(i, j)] = x
            continue
        if j not in inv_cache:
            inv_cache[j] = inverse(dj)
        out[(i, j)] = mul(mul(di, x), inv_cache[j])
    return out


def _unipotent_product(left: Mapping[Position, RingElement], right: Mapping[Position, RingElement]) -> dict[Position, RingElement]:
    out = dict(left)
    for pos, y in right.items():
        out[pos] = add(out[pos], y) if pos in out else y
    rows: dict[int, list[tuple[int, RingElement]]] = {}
    for (k, j), y in right.items():
        rows.setdefault(k, []).append((j, y))
    for (i, k), x in left.items():
        for j, y in rows.get(k, ()):
            xy = mul(x, y)
            out[(i, j)] = add(out[(i, j)], xy) if (i, j) in out else xy
    return out


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    """(U1 D1)(U2 D2) = U1 (D1 U2 D1^-1) . D1 D2."""
    _check(a, b)
    twisted = conjugate_unipotent(b.entries, a.diagonal, a.ring)
    entries = _unipotent_product(a.entries, twisted)
    diag = tuple(mul(x, y) for x, y in zip(a.diagonal, b.diagonal))
    return _build(a.index_set, a.ring, entries, diag)


def _unipotent_inverse(entries: Mapping[Position, RingElement], n: int) -> dict[Position, RingElement]:
    v: dict[Position, RingElement] = {}
    for j in range(2, n + 1):
        for i in range(j - 1, 0, -1):
            s = entries.get((i, j))
            for k in range(i + 1, j):
                u_ik = entries.get((i, k))
                v_kj = v.get((k, j))
                if u_ik is None or v_kj is None:
                    continue
                prod = mul(u_ik, v_kj)
                s = prod if s is None else add(s, prod)
            if s is not None and not s.is_zero:
                v[(i, j)] = neg(s)
    return v


def inverse_element(a: GroupElement) -> GroupElement:
    """(U D)^-1 = (D^-1 U^-1 D) D^-1."""
    inv_diag = tuple(d if d == _one(a.ring) else inverse(d) for d in a.diagonal)
    v = _unipotent_inverse(a.entries, a.n)
    return _build(a.index_set, a.ring, conjugate_unipotent(v, inv_diag, a.ring), inv_diag)


def commutator(a: GroupElement, b: GroupElement) -> GroupElement:
    """[a, b] = a b a^-1 b^-1."""
    return multiply(multiply(a, b), multiply(inverse_element(a), inverse_element(b)))


def conjugate(g: GroupElement, h: GroupElement) -> GroupElement:
    """mu(g, h) = h g h^-1."""
    return multiply(multiply(h, g), inverse_element(h))


def iterated_commutator(x: GroupElement, y: GroupElement, length: int) -> GroupElement:
    """Left-normed [x, y, ..., y] with `length` copies of y."""
    if length < 1:
        raise ValueError("iterated commutator length must be >= 1")
    out = x
    for _ in range(length):
        out = commutator(out, y)
    return out


def unipotent_part(g: GroupElement) -> GroupElement:
    return GroupElement(g.index_set, g.ring, g.upper, (_one(g.ring),) * g.n)


def diagonal_part(g: GroupElement) -> GroupElement:
    return GroupElement(g.index_set, g.ring, (), g.diagonal)


def to_matrix(g: GroupElement) -> list[list[RingElement]]:
    """Dense n x n matrix of g."""
    n = g.n
    z = _zero(g.ring)
    rows = [[z] * n for _ in range(n)]
    for k in range(n):
        rows[k][k] = g.diagonal[k]
    for (i, j), x in g.upper:
        rows[i - 1][j - 1] = mul(x, g.diagonal[j - 1])
    return rows


def from_matrix(ix: IndexSet, ring: RingSpec, rows: Sequence[Sequence[RingElement]]) -> GroupElement:
    """Inverse of to_matrix; validates triangularity and the diagonal pattern."""
    n = ix.n
    for i in range(n):
        for j in range(i):
            if not rows[i][j].is_zero:
                raise IndexOutOfPattern(f"matrix entry ({i + 1},{j + 1}) below the diagonal is nonzero")
    diag = [rows[k][k] for k in range(n)]
    entries = {}
    for i in range(n):
        for j in range(i + 1, n):
            x = rows[i][j]
            if not x.is_zero:
                entries[(i + 1, j + 1)] = mul(x, inverse(diag[j]))
    return make_element(ix, ring, entries, diag)


def random_group_element(rng: random.Random, ix: IndexSet, ring: RingSpec, height: int = 100,
                         degree: int = 4) -> GroupElement:
    n = ix.n
    entries = {(i, j): random_element(rng, ring, height, degree) for i in range(1, n) for j in range(i + 1, n + 1)}
    diag = tuple(random_unit(rng, ring) if k in ix else _one(ring) for k in range(1, n + 1))
    return _build(ix, ring, entries, diag)


def random_unipotent(rng: random.Random, ix: IndexSet, ring: RingSpec, height: int = 100, degree: int = 4) -> GroupElement:
    return unipotent_part(random_group_element(rng, ix, ring, height, degree))
