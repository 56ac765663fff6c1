"""Atomic automorphisms and their action on matrix group elements.

Every atom exposes `act(g)` on full GroupElements. Quotient elements are handled
by the Automorphism wrapper, which acts on the zero-filled representative and
truncates again; SuperdiagonalMap is the one atom that only exists on the
abelianised unipotent quotient.
"""

from dataclasses import dataclass
from typing import Union

from ..errors import IncompatibleAtom, SpecMismatch
from ..rings.automorphisms import IDENTITY, RingAutomorphism, apply_ring_aut, check_descriptor, inverse_descriptor
from ..rings.element import RingElement, add, inverse, is_unit, mul, neg, one, zero
from ..rings.spec import RingSpec
from ..groups.element import (
    GroupElement,
    _build,
    _unipotent_inverse,
    conjugate,
    conjugate_unipotent,
    from_matrix,
    inverse_element,
    to_matrix,
)
from ..groups.index_set import IndexSet


def _require_abels3(g: GroupElement, name: str) -> None:
    if g.n != 3 or g.index_set.members != frozenset({2}):
        raise IncompatibleAtom(f"{name} acts on S_3^{{2}} only, got S_{g.n}^{g.index_set.label}")


@dataclass(frozen=True)
class Inner:
    """x -> g x g^-1."""

    g: GroupElement
    name = "inner"

    def act(self, x: GroupElement) -> GroupElement:
        if x.index_set != self.g.index_set or x.ring != self.g.ring:
            raise IncompatibleAtom(f"inner conjugator lives in S_{self.g.n}^{self.g.index_set.label}({self.g.ring.label})")
        return conjugate(x, self.g)


@dataclass(frozen=True)
class DiagConj:
    """Conjugation by an arbitrary invertible diagonal matrix; fixes the diagonal part."""

    d: tuple[RingElement, ...]
    name = "diag_conj"

    def act(self, x: GroupElement) -> GroupElement:
        if len(self.d) != x.n:
            raise IncompatibleAtom(f"diag_conj has {len(self.d)} entries, element has n={x.n}")
        if any(u.spec != x.ring for u in self.d):
            raise IncompatibleAtom("diag_conj entries live over a different ring")
        return _build(x.index_set, x.ring, conjugate_unipotent(x.entries, self.d, x.ring), x.diagonal)


@dataclass(frozen=True)
class Flip:
    """g -> D_s w0 (g^-1)^T w0 D_s with D_s = diag((-1)^k); on U_n this is
    e_{i,j}(r) -> e_{n-j+1,n-i+1}((-1)^(j-i-1) r)."""

    name = "flip"

    def act(self, x: GroupElement) -> GroupElement:
        n = x.n
        v = _unipotent_inverse(x.entries, n)
        entries = {}
        for (i, j), r in v.items():
            a, b = n + 1 - j, n + 1 - i
            entries[(a, b)] = r if (a + b) % 2 == 0 else neg(r)
        unit = one(x.ring)
        diag = tuple(d if d == unit else inverse(d) for d in reversed(x.diagonal))
        for k, d in enumerate(diag, start=1):
            if k not in x.index_set and d != unit:
                raise IncompatibleAtom(f"flip moves a diagonal entry to position {k} outside I={x.index_set.label}")
        return _build(x.index_set, x.ring, entries, diag)


@dataclass(frozen=True)
class RingInduced:
    """alpha_*: entrywise application of a ring automorphism."""

    desc: RingAutomorphism = IDENTITY
    name = "ring"

    def act(self, x: GroupElement) -> GroupElement:
        if self.desc.kind == "identity":
            return x
        try:
            check_descriptor(self.desc, x.ring)
        except SpecMismatch as exc:
            raise IncompatibleAtom(str(exc)) from exc
        entries = {pos: apply_ring_aut(self.desc, r) for pos, r in x.upper}
        return _build(x.index_set, x.ring, entries, tuple(apply_ring_aut(self.desc, d) for d in x.diagonal))


def _dense(x: GroupElement) -> tuple[RingElement, RingElement, RingElement, RingElement]:
    m = to_matrix(x)
    return m[0][1], m[1][2], m[0][2], m[1][1]


def _from_dense(ix: IndexSet, xx: RingElement, yy: RingElement, zz: RingElement, uu: RingElement) -> GroupElement:
    ring = xx.spec
    z0, o = zero(ring), one(ring)
    return from_matrix(ix, ring, [[o, xx, zz], [z0, uu, yy], [z0, z0, o]])


@dataclass(frozen=True)
class Abels3Phi:
    """On [[1,x,z],[0,u,y],[0,0,1]] with u = +-1:
    (x, y, z, u) -> (2x + uy, ux, x^2 + uxy - z, u)."""

    name = "abels3_phi"

    def act(self, g: GroupElement) -> GroupElement:
        _require_abels3(g, self.name)
        x, y, z, u = _dense(g)
        if mul(u, u) != one(g.ring):
            raise IncompatibleAtom(f"abels3_phi needs u^2 = 1, got u = {u}")
        two_x = add(x, x)
        ux = mul(u, x)
        return _from_dense(
            g.index_set,
            add(two_x, mul(u, y)),
            ux,
            add(add(mul(x, x), mul(ux, y)), neg(z)),
            u,
        )


@dataclass(frozen=True)
class Abels3PhiV:
    """On [[1,x,z],[0,u,y],[0,0,1]]:
    (x, y, z, u) -> (-y/u, vx/u, -vxy/u + vz, 1/u)."""

    v: RingElement
    name = "abels3_phi_v"

    def act(self, g: GroupElement) -> GroupElement:
        _require_abels3(g, self.name)
        if self.v.spec != g.ring:
            raise IncompatibleAtom(f"v lives in {self.v.spec.label}, element in {g.ring.label}")
        x, y, z, u = _dense(g)
        u_inv = inverse(u)
        v = self.v
        return _from_dense(
            g.index_set,
            neg(mul(y, u_inv)),
            mul(mul(v, x), u_inv),
            add(neg(mul(mul(mul(v, x), y), u_inv)), mul(v, z)),
            u_inv,
        )


@dataclass(frozen=True)
class SlotMap:
    """An additive bijection of (R, +): a finite lookup table, or r -> scale * alpha(r)."""

    table: tuple[tuple[RingElement, RingElement], ...] | None = None
    scale: RingElement | None = None
    desc: RingAutomorphism = IDENTITY

    def __call__(self, r: RingElement) -> RingElement:
        if self.table is not None:
            for key, value in self.table:
                if key == r:
                    return value
            raise IncompatibleAtom(f"{r} is outside the slot table")
        image = apply_ring_aut(self.desc, r)
        return image if self.scale is None else mul(self.scale, image)

    def inverse(self, ring: RingSpec) -> "SlotMap | None":
        if self.table is not None:
            return SlotMap(table=tuple((v, k) for k, v in self.table))
        inv = inverse_descriptor(self.desc, ring)
        if inv is None:
            return None
        if self.scale is None:
            return SlotMap(desc=inv)
        return SlotMap(scale=apply_ring_aut(inv, inverse(self.scale)), desc=inv)


@dataclass(frozen=True)
class SuperdiagonalMap:
    """e_bar_{k,k+1}(r) -> e_bar_{s(k),s(k)+1}(Phi_k(r)) on the unipotent part of U_n/U_n'.

    sigma[k-1] is the image slot of slot k (slots numbered 1..n-1).
    """

    sigma: tuple[int, ...]
    maps: tuple[SlotMap, ...]
    name = "superdiagonal"

    def act_superdiagonal(self, x: GroupElement) -> GroupElement:
        if len(self.sigma) != x.n - 1:
            raise IncompatibleAtom(f"superdiagonal map has {len(self.sigma)} slots, element has {x.n - 1}")
        unit = one(x.ring)
        if any(d != unit for d in x.diagonal):
            raise IncompatibleAtom("superdiagonal maps act on unipotent quotient elements only")
        entries = {}
        for k in range(1, x.n):
            r = x.entry(k, k + 1)
            if r.is_zero:
                continue
            target = self.sigma[k - 1]
            entries[(target, target + 1)] = self.maps[k - 1](r)
        return _build(x.index_set, x.ring, entries, x.diagonal)


Atom = Union[Inner, DiagConj, Flip, RingInduced, Abels3Phi, Abels3PhiV, SuperdiagonalMap]


def atom_inverse(atom: Atom, ring: RingSpec) -> Atom | None:
    """Inverse atom when it has a closed form over ring."""
    if isinstance(atom, Inner):
        return Inner(inverse_element(atom.g))
    if isinstance(atom, DiagConj):
        return DiagConj(tuple(inverse(u) for u in atom.d))
    if isinstance(atom, Flip):
        return atom
    if isinstance(atom, RingInduced):
        inv = inverse_descriptor(atom.desc, ring)
        return None if inv is None else RingInduced(inv)
    if isinstance(atom, SuperdiagonalMap):
        maps: list[SlotMap | None] = [None] * len(atom.sigma)
        sigma = [0] * len(atom.sigma)
        for k, target in enumerate(atom.sigma, start=1):
            inv_map = atom.maps[k - 1].inverse(ring)
            if inv_map is None:
                return None
            sigma[target - 1] = k
            maps[target - 1] = inv_map
        return SuperdiagonalMap(tuple(sigma), tuple(maps))
    return None


def check_diag_units(d: tuple[RingElement, ...]) -> None:
    for k, u in enumerate(d, start=1):
        if is_unit(u) is None:
            raise IncompatibleAtom(f"diag_conj entry {k} = {u} is not a unit")
