"""Finite groups as indexed element lists, and enumeration of S_n^I(F_q) and its quotients."""

import itertools
import logging
from collections import deque
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Sequence

from ..config.limits import enumeration_limit
from ..errors import IncompatibleQuotient, NotAnAutomorphism, TooLarge, UnsupportedSpec
from ..rings.finite_fields import additive_basis, field_elements, field_units, primitive_element
from ..rings.element import one
from ..rings.spec import RingSpec
from .element import GroupElement, _build, diagonal_gen, elementary
from .index_set import IndexSet
from .quotients import (
    NONE,
    QuotientElement,
    QuotientSpec,
    check_compatible,
    inverse_any,
    multiply_any,
    project,
    retained_positions,
)

logger = logging.getLogger(__name__)


class FiniteGroup:
    """A finite group given by its element list and multiplication.

    Elements are addressed by their position in `elements`; position order is the
    enumeration order and doubles as the canonical order for representatives.
    """

    def __init__(
        self,
        label: str,
        elements: Sequence[Hashable],
        op: Callable[[Any, Any], Any],
        inv: Callable[[Any], Any],
        generators: Sequence[Hashable],
        info: dict | None = None,
    ) -> None:
        self.label = label
        self.elements = tuple(elements)
        self.op = op
        self.inv = inv
        self.index = {x: k for k, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError(f"{label}: duplicate elements in enumeration")
        self.generators = tuple(self.index_of(g) for g in generators)
        self.info = dict(info or {})

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={len(self)})"

    def index_of(self, x: Hashable) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise ValueError(f"{x!r} is not an element of {self.label}") from None

    def mul(self, a: int, b: int) -> int:
        return self.index[self.op(self.elements[a], self.elements[b])]

    @cached_property
    def identity_index(self) -> int:
        g = self.elements[0]
        return self.index[self.op(g, self.inv(g))]

    @cached_property
    def table(self) -> list[list[int]]:
        """Cayley table: table[a][b] = index of elements[a] * elements[b]."""
        logger.info("building Cayley table of %s (%d elements)", self.label, len(self))
        return [[self.mul(a, b) for b in range(len(self))] for a in range(len(self))]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(self.index[self.inv(x)] for x in self.elements)

    @cached_property
    def orders(self) -> tuple[int, ...]:
        e = self.identity_index
        out = []
        for a in range(len(self)):
            k, x = 1, a
            while x != e:
                x = self.table[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    def permutation(self, phi: Callable[[Any], Any]) -> tuple[int, ...]:
        """Tabulate phi on the elements; phi must map into the group."""
        out = []
        for x in self.elements:
            y = phi(x)
            if y not in self.index:
                raise NotAnAutomorphism(f"image {y!r} of {x!r} lies outside {self.label}")
            out.append(self.index[y])
        return tuple(out)

    def subgroup_closure(self, gens: Iterable[int]) -> list[int]:
        """Indices of the subgroup generated by gens, sorted."""
        gens = list(gens)
        e = self.identity_index
        seen = {e}
        queue = deque([e])
        while queue:
            a = queue.popleft()
            for g in gens:
                b = self.table[a][g]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return sorted(seen)

    def generating_set(self) -> tuple[int, ...]:
        return self.generators


def cyclic_group(m: int) -> FiniteGroup:
    """Z/m written additively on 0..m-1."""
    if m < 1:
        raise ValueError("cyclic group order must be >= 1")
    return FiniteGroup(
        f"Z/{m}",
        range(m),
        lambda a, b: (a + b) % m,
        lambda a: (-a) % m,
        [1 % m],
        {"kind": "cyclic", "m": m},
    )


def finite_group_order(ix: IndexSet, field: RingSpec, q: QuotientSpec) -> int:
    coords = len(retained_positions(ix.n, q))
    return field.order ** coords * (field.order - 1) ** len(ix.members)


def _group_generators(ix: IndexSet, field: RingSpec) -> list[GroupElement]:
    gens = [diagonal_gen(ix, field, i, primitive_element(field)) for i in sorted(ix.members)]
    basis = additive_basis(field)
    gens += [elementary(ix, field, k, k + 1, b) for k in range(1, ix.n) for b in basis]
    return gens


def enumerate_finite_group(ix: IndexSet, field: RingSpec, q: QuotientSpec = NONE, limit: int | None = None) -> FiniteGroup:
    """All elements of S_n^I(F_q), or of its quotient by q, in lexicographic coordinate order.

    Coordinates are the retained unipotent entries in row-major order followed by the
    diagonal entries at the positions in I; each coordinate runs over the field in
    the order of field_elements.
    """
    if field.kind != "finite_field":
        raise UnsupportedSpec(f"enumeration needs a finite field, got {field.label}")
    if q.kind == "mod_ideal":
        raise IncompatibleQuotient("enumerate over the residue field directly instead of mod_ideal")
    check_compatible(ix, q)
    limit = enumeration_limit() if limit is None else limit
    size = finite_group_order(ix, field, q)
    if size > limit:
        raise TooLarge(size, limit)
    positions = retained_positions(ix.n, q)
    members = sorted(ix.members)
    one_ = one(field)
    elements: list[Any] = []
    for coords in itertools.product(field_elements(field), repeat=len(positions)):
        entries = dict(zip(positions, coords))
        for units in itertools.product(field_units(field), repeat=len(members)):
            diag = [one_] * ix.n
            for i, u in zip(members, units):
                diag[i - 1] = u
            g = _build(ix, field, entries, diag)
            elements.append(g if q.kind == "none" else QuotientElement(q, g))
    gens: list[Any] = _group_generators(ix, field)
    if q.kind != "none":
        gens = [project(g, q) for g in gens]
    label = f"S_{ix.n}^{ix.label}({field.label})" + ("" if q.kind == "none" else f"/{q.label}")
    logger.info("enumerated %s: %d elements", label, len(elements))
    return FiniteGroup(
        label,
        elements,
        multiply_any,
        inverse_any,
        gens,
        {"kind": "matrix", "index_set": ix, "ring": field, "quotient": q},
    )


def kernel_elements(group: FiniteGroup, q: QuotientSpec) -> list[int]:
    """Indices of the elements of an unquotiented matrix group that project to the identity of q."""
    info = group.info
    if info.get("kind") != "matrix" or info["quotient"].kind != "none":
        raise IncompatibleQuotient("kernel_elements needs a group enumerated without a quotient")
    if q.kind == "none":
        return [group.identity_index]
    check_compatible(info["index_set"], q)
    return [k for k, g in enumerate(group.elements) if project(g, q).is_identity]

