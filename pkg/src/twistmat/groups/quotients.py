"""Characteristic quotients of S_n^I(R).

A QuotientElement keeps a GroupElement representative with every dropped
coordinate set to zero. For mod_ideal the representative lives over the
residue field instead.
"""

import random
from dataclasses import dataclass
from typing import Literal, Union

from ..errors import IncompatibleQuotient, SpecMismatch
from ..rings import polynomials as P
from ..rings.element import RingElement, from_int, from_poly, one, variable
from ..rings.reduction import reduce_mod, residue_field
from ..rings.sampling import random_nonzero
from ..rings.spec import RingSpec
from .element import GroupElement, Position, _build, elementary, inverse_element, multiply
from .index_set import IndexSet

QuotientKind = Literal["none", "mod_commutator_u", "mod_center_u4", "mod_ideal"]


@dataclass(frozen=True)
class QuotientSpec:
    kind: QuotientKind = "none"
    modulus: Union[int, P.Poly, None] = None

    def __post_init__(self) -> None:
        if self.kind not in ("none", "mod_commutator_u", "mod_center_u4", "mod_ideal"):
            raise IncompatibleQuotient(f"unknown quotient {self.kind!r}")
        if (self.kind == "mod_ideal") != (self.modulus is not None):
            raise IncompatibleQuotient("a modulus is required exactly for mod_ideal")

    @property
    def label(self) -> str:
        if self.kind == "mod_ideal":
            m = self.modulus if isinstance(self.modulus, int) else P.format_poly(self.modulus)
            return f"mod_ideal({m})"
        return self.kind

    def to_json(self):
        if self.kind == "mod_ideal":
            m = self.modulus if isinstance(self.modulus, int) else P.format_poly(self.modulus)
            return {"quotient": "mod_ideal", "modulus": m}
        return {"quotient": self.kind}


NONE = QuotientSpec()
MOD_COMMUTATOR_U = QuotientSpec("mod_commutator_u")
MOD_CENTER_U4 = QuotientSpec("mod_center_u4")


def mod_ideal(modulus) -> QuotientSpec:
    return QuotientSpec("mod_ideal", modulus if isinstance(modulus, int) else tuple(modulus))


@dataclass(frozen=True)
class QuotientElement:
    quotient: QuotientSpec
    rep: GroupElement

    @property
    def index_set(self) -> IndexSet:
        return self.rep.index_set

    @property
    def ring(self) -> RingSpec:
        return self.rep.ring

    @property
    def n(self) -> int:
        return self.rep.n

    @property
    def is_identity(self) -> bool:
        return self.rep.is_identity

    def entry(self, i: int, j: int) -> RingElement:
        return self.rep.entry(i, j)

    @property
    def diagonal(self) -> tuple[RingElement, ...]:
        return self.rep.diagonal

    def __mul__(self, other: "QuotientElement") -> "QuotientElement":
        return multiply_any(self, other)


Element = Union[GroupElement, QuotientElement]


def check_compatible(ix: IndexSet, q: QuotientSpec) -> None:
    if q.kind == "mod_center_u4" and (ix.n != 4 or ix.members != frozenset({2, 3})):
        raise IncompatibleQuotient(f"mod_center_u4 needs n=4 and I={{2,3}}, got n={ix.n}, I={ix.label}")


def retained_positions(n: int, q: QuotientSpec) -> tuple[Position, ...]:
    """Strictly upper positions that survive in the quotient, in row-major order."""
    every = tuple((i, j) for i in range(1, n) for j in range(i + 1, n + 1))
    if q.kind == "mod_commutator_u":
        return tuple((i, j) for i, j in every if j == i + 1)
    if q.kind == "mod_center_u4":
        return tuple(pos for pos in every if pos != (1, 4))
    return every


def dropped_positions(n: int, q: QuotientSpec) -> tuple[Position, ...]:
    kept = set(retained_positions(n, q))
    return tuple((i, j) for i in range(1, n) for j in range(i + 1, n + 1) if (i, j) not in kept)


def _truncate(g: GroupElement, q: QuotientSpec) -> GroupElement:
    if q.kind in ("none", "mod_ideal"):
        return g
    dropped = set(dropped_positions(g.n, q))
    if not any(pos in dropped for pos, _ in g.upper):
        return g
    return GroupElement(g.index_set, g.ring, tuple((pos, x) for pos, x in g.upper if pos not in dropped), g.diagonal)


def reduce_element(g: GroupElement, modulus) -> GroupElement:
    """Entrywise image of g over R/(modulus)."""
    field = residue_field(g.ring, modulus)
    entries = {pos: reduce_mod(x, modulus) for pos, x in g.upper}
    diag = tuple(reduce_mod(d, modulus) for d in g.diagonal)
    return _build(g.index_set, field, entries, diag)


def project(g: GroupElement, q: QuotientSpec) -> QuotientElement:
    """Image of g in the quotient described by q."""
    check_compatible(g.index_set, q)
    if q.kind == "mod_ideal":
        return QuotientElement(q, reduce_element(g, q.modulus))
    return QuotientElement(q, _truncate(g, q))


def multiply_any(a: Element, b: Element) -> Element:
    if isinstance(a, GroupElement) and isinstance(b, GroupElement):
        return multiply(a, b)
    if not (isinstance(a, QuotientElement) and isinstance(b, QuotientElement)):
        raise SpecMismatch("cannot multiply a group element with a quotient element")
    if a.quotient != b.quotient:
        raise SpecMismatch(f"quotients differ: {a.quotient.label} vs {b.quotient.label}")
    return QuotientElement(a.quotient, _truncate(multiply(a.rep, b.rep), a.quotient))


def inverse_any(a: Element) -> Element:
    if isinstance(a, GroupElement):
        return inverse_element(a)
    return QuotientElement(a.quotient, _truncate(inverse_element(a.rep), a.quotient))


def superdiagonal(x: Element) -> tuple[RingElement, ...]:
    """Entries (k, k+1) of the unipotent factor."""
    return tuple(x.entry(k, k + 1) for k in range(1, x.n))


def sample_scalars(ring: RingSpec, rng: random.Random | None = None, samples: int = 3) -> list[RingElement]:
    """Ring elements used to instantiate one-parameter kernel generators."""
    out = [one(ring)]
    if ring.kind in ("finite_field", "poly", "localized_poly"):
        if ring.kind != "finite_field" or ring.field_degree > 1:
            out.append(variable(ring))
    elif ring.kind == "quadratic":
        out.append(RingElement(ring, (0, 1), ()))
    else:
        out.append(from_int(ring, 2))
    if rng is not None:
        out.extend(random_nonzero(rng, ring) for _ in range(samples))
    return out


def kernel_generators(ix: IndexSet, ring: RingSpec, q: QuotientSpec, rng: random.Random | None = None,
                      samples: int = 3) -> list[GroupElement]:
    """Elements generating the kernel of project(., q), instantiated on test scalars."""
    check_compatible(ix, q)
    if q.kind == "none":
        return []
    if q.kind == "mod_ideal":
        m = q.modulus
        scalar = from_int(ring, m) if isinstance(m, int) else from_poly(ring, m)
        return [elementary(ix, ring, i, j, scalar) for i, j in retained_positions(ix.n, q)]
    scalars = sample_scalars(ring, rng, samples)
    return [elementary(ix, ring, i, j, r) for i, j in dropped_positions(ix.n, q) for r in scalars]
