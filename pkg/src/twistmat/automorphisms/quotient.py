"""Automorphisms induced on quotients, and the superdiagonal normal form on finite U_n/U_n'."""

import logging
import random
from dataclasses import dataclass

from ..errors import IncompatibleAtom, KernelNotInvariant
from ..groups.element import elementary
from ..groups.finite import FiniteGroup
from ..groups.index_set import IndexSet
from ..groups.quotients import MOD_COMMUTATOR_U, QuotientSpec, kernel_generators, project, reduce_element
from ..rings.element import add, one
from ..rings.finite_fields import field_elements
from ..rings.reduction import reduce_mod
from ..rings.spec import RingSpec
from .atoms import (
    Abels3Phi,
    Abels3PhiV,
    Atom,
    DiagConj,
    Flip,
    Inner,
    RingInduced,
    SlotMap,
    SuperdiagonalMap,
)
from .automorphism import Automorphism

logger = logging.getLogger(__name__)


def _reduce_atom(atom: Atom, modulus) -> Atom:
    if isinstance(atom, Inner):
        return Inner(reduce_element(atom.g, modulus))
    if isinstance(atom, DiagConj):
        return DiagConj(tuple(reduce_mod(u, modulus) for u in atom.d))
    if isinstance(atom, (Flip, Abels3Phi)):
        return atom
    if isinstance(atom, Abels3PhiV):
        return Abels3PhiV(reduce_mod(atom.v, modulus))
    if isinstance(atom, RingInduced) and atom.desc.kind == "identity":
        return atom
    raise IncompatibleAtom(f"{atom.name} does not descend to the residue field")


def induce_on_quotient(
    phi: Automorphism,
    q: QuotientSpec,
    ix: IndexSet,
    ring: RingSpec,
    seed: int = 20240001,
    samples: int = 3,
) -> Automorphism:
    """The automorphism of S_n^I(R)/N induced by phi, where N is the kernel of project(., q).

    Each atom must send every kernel generator into the kernel; otherwise
    KernelNotInvariant names the first offending generator.
    """
    if phi.quotient.kind != "none":
        raise IncompatibleAtom(f"{phi.label} already acts on a quotient")
    if q.kind == "none":
        return phi
    if q.kind == "mod_ideal":
        atoms = tuple(_reduce_atom(atom, q.modulus) for atom in phi.atoms if not (isinstance(atom, RingInduced) and atom.desc.kind == "identity"))
        return Automorphism(atoms, q)
    rng = random.Random(seed)
    generators = kernel_generators(ix, ring, q, rng, samples)
    for atom in phi.atoms:
        for k in generators:
            if not project(atom.act(k), q).is_identity:
                raise KernelNotInvariant(f"{atom.name} moves kernel generator {k.upper} out of the kernel", generator=k)
    logger.info("%s induces an automorphism of the %s quotient (%d kernel generators checked)",
                phi.label, q.label, len(generators))
    return Automorphism(phi.atoms, q)


@dataclass(frozen=True)
class SuperdiagonalForm:
    """sigma[k-1] is the image slot of slot k; tables[k-1] lists (r, Phi_k(r)) over the field."""

    sigma: tuple[int, ...]
    tables: tuple[tuple[tuple, ...], ...]

    def fixes_slot(self, k: int) -> bool:
        return self.sigma[k - 1] == k

    @property
    def is_identity(self) -> bool:
        return all(self.fixes_slot(k) for k in range(1, len(self.sigma) + 1)) and all(
            r == s for table in self.tables for r, s in table
        )


def check_superdiagonal_form(group: FiniteGroup, perm: tuple[int, ...]) -> SuperdiagonalForm | None:
    """Decide whether the automorphism `perm` of a finite S_n^I(F)/U_n' maps every
    one-parameter family e_bar_{k,k+1}(F) into a single superdiagonal slot by an
    additive bijection.
    """
    info = group.info
    if info.get("kind") != "matrix" or info["quotient"] != MOD_COMMUTATOR_U:
        raise IncompatibleAtom("superdiagonal form needs a finite mod_commutator_u quotient group")
    ix: IndexSet = info["index_set"]
    field: RingSpec = info["ring"]
    elements = field_elements(field)
    unit = one(field)
    sigma: list[int] = []
    tables: list[tuple] = []
    for k in range(1, ix.n):
        target = None
        table = []
        for r in elements:
            source = project(elementary(ix, field, k, k + 1, r), MOD_COMMUTATOR_U)
            image = group.elements[perm[group.index_of(source)]]
            if any(d != unit for d in image.diagonal):
                return None
            slots = [j for j in range(1, ix.n) if not image.entry(j, j + 1).is_zero]
            if r.is_zero:
                if slots:
                    return None
                table.append((r, r))
                continue
            if len(slots) != 1 or (target is not None and slots[0] != target):
                return None
            target = slots[0]
            table.append((r, image.entry(target, target + 1)))
        if target is None:
            return None
        phi_k = dict(table)
        if set(phi_k.values()) != set(elements):
            return None
        if any(phi_k[add(a, b)] != add(phi_k[a], phi_k[b]) for a in elements for b in elements):
            return None
        sigma.append(target)
        tables.append(tuple(table))
    if sorted(sigma) != list(range(1, ix.n)):
        return None
    return SuperdiagonalForm(tuple(sigma), tuple(tables))


def superdiagonal_map_from_form(form: SuperdiagonalForm) -> Automorphism:
    """A SuperdiagonalMap atom reproducing `form` on unipotent quotient elements."""
    maps = tuple(SlotMap(table=table) for table in form.tables)
    return Automorphism((SuperdiagonalMap(form.sigma, maps),), MOD_COMMUTATOR_U)
