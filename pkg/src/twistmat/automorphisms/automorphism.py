"""Automorphisms as ordered atom lists, applied right to left."""

from dataclasses import dataclass, field

from ..errors import BadUnit, IncompatibleAtom, SpecMismatch
from ..groups.element import GroupElement, diagonal_gen
from ..groups.index_set import IndexSet
from ..groups.quotients import NONE, Element, QuotientElement, QuotientSpec, _truncate
from ..rings.automorphisms import RingAutomorphism
from ..rings.element import RingElement, from_int, is_unit, neg, one
from ..rings.spec import RingSpec
from .atoms import (
    Abels3Phi,
    Abels3PhiV,
    Atom,
    DiagConj,
    Flip,
    Inner,
    RingInduced,
    SuperdiagonalMap,
    atom_inverse,
    check_diag_units,
)


def _apply_atom(atom: Atom, x: Element, quotient: QuotientSpec) -> Element:
    if isinstance(x, GroupElement):
        if quotient.kind != "none":
            raise IncompatibleAtom(f"automorphism acts on the {quotient.label} quotient; project the element first")
        if isinstance(atom, SuperdiagonalMap):
            raise IncompatibleAtom("superdiagonal maps only act on mod_commutator_u quotients")
        return atom.act(x)
    if x.quotient != quotient:
        raise IncompatibleAtom(f"element lives in {x.quotient.label}, automorphism in {quotient.label}")
    if isinstance(atom, SuperdiagonalMap):
        if quotient.kind != "mod_commutator_u":
            raise IncompatibleAtom("superdiagonal maps only act on mod_commutator_u quotients")
        return QuotientElement(quotient, atom.act_superdiagonal(x.rep))
    return QuotientElement(quotient, _truncate(atom.act(x.rep), quotient))


@dataclass(frozen=True)
class Automorphism:
    """phi = atoms[0] o atoms[1] o ... ; apply runs atoms[-1] first."""

    atoms: tuple[Atom, ...] = ()
    quotient: QuotientSpec = field(default=NONE)

    def apply(self, x: Element) -> Element:
        for atom in reversed(self.atoms):
            x = _apply_atom(atom, x, self.quotient)
        return x

    def __call__(self, x: Element) -> Element:
        return self.apply(x)

    @property
    def label(self) -> str:
        if not self.atoms:
            return "id"
        names = []
        for atom in self.atoms:
            if isinstance(atom, RingInduced):
                names.append(f"ring[{atom.desc.label}]")
            elif isinstance(atom, Abels3PhiV):
                names.append(f"abels3_phi_v[{atom.v}]")
            else:
                names.append(atom.name)
        base = " o ".join(names)
        return base if self.quotient.kind == "none" else f"({base}) on {self.quotient.label}"


def apply(phi: Automorphism, x: Element) -> Element:
    return phi.apply(x)


def compose(phi: Automorphism, psi: Automorphism) -> Automorphism:
    """phi o psi."""
    if phi.quotient != psi.quotient:
        raise SpecMismatch(f"cannot compose maps on {phi.quotient.label} and {psi.quotient.label}")
    return Automorphism(phi.atoms + psi.atoms, phi.quotient)


def inverse_atoms(phi: Automorphism, ring: RingSpec) -> Automorphism | None:
    """The inverse as an atom list, or None if some atom has no closed-form inverse."""
    out = []
    for atom in reversed(phi.atoms):
        inv = atom_inverse(atom, ring)
        if inv is None:
            return None
        out.append(inv)
    return Automorphism(tuple(out), phi.quotient)


IDENTITY_AUT = Automorphism()


def inner(g: GroupElement) -> Automorphism:
    return Automorphism((Inner(g),))


def diag_conj(d) -> Automorphism:
    d = tuple(d)
    check_diag_units(d)
    return Automorphism((DiagConj(d),))


def flip() -> Automorphism:
    return Automorphism((Flip(),))


def ring_induced(desc: RingAutomorphism) -> Automorphism:
    return Automorphism((RingInduced(desc),))


def abels3_phi() -> Automorphism:
    return Automorphism((Abels3Phi(),))


def abels3_phi_v(v: RingElement) -> Automorphism:
    if is_unit(v) is None:
        raise BadUnit(f"v = {v} is not a unit of {v.spec.label}")
    if v == one(v.spec) or v == neg(one(v.spec)):
        raise BadUnit("v must differ from 1 and -1")
    return Automorphism((Abels3PhiV(v),))


def psi_d2(ring: RingSpec, sign: int) -> Automorphism:
    """iota_{d_2(sign)} o abels3_phi on S_3^{2}(ring)."""
    if sign not in (1, -1):
        raise BadUnit("sign must be 1 or -1")
    d2 = diagonal_gen(IndexSet.of(3, {2}), ring, 2, from_int(ring, sign))
    return compose(inner(d2), abels3_phi())
