"""Twisted conjugacy classes of finite groups.

The twisted action of G on itself is g . x = g x phi(g)^-1; its orbits are the
phi-twisted conjugacy classes and their number is R(phi). Orbits are computed by
union-find over the element indices using only the group generators as moves.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence, Union

from ..config.limits import enumeration_limit
from ..errors import KernelNotInvariant, NotAnAutomorphism, TooLarge
from ..groups.finite import FiniteGroup, kernel_elements
from ..groups.quotients import QuotientSpec, inverse_any, multiply_any
from .unionfind import UnionFind

logger = logging.getLogger(__name__)

Map = Union[Callable[[Any], Any], Sequence[int]]


def twisted_conjugate(phi: Callable[[Any], Any], x: Any, g: Any, group: FiniteGroup | None = None) -> Any:
    """g x phi(g)^-1."""
    if group is not None:
        return group.op(group.op(g, x), group.inv(phi(g)))
    return multiply_any(multiply_any(g, x), inverse_any(phi(g)))


@dataclass
class ReidemeisterReport:
    group: str
    order: int
    automorphism: str
    count: int
    representatives: list[int]
    sizes: list[int]
    classes: dict[int, list[int]] = field(default_factory=dict, repr=False)

    def as_row(self) -> dict:
        return {"group": self.group, "order": self.order, "automorphism": self.automorphism, "reidemeister": self.count}


def _check_size(group: FiniteGroup) -> None:
    limit = enumeration_limit()
    if len(group) > limit:
        raise TooLarge(len(group), limit)


def as_permutation(group: FiniteGroup, phi: Map) -> tuple[int, ...]:
    if callable(phi):
        return group.permutation(phi)
    perm = tuple(phi)
    if len(perm) != len(group):
        raise NotAnAutomorphism(f"permutation has {len(perm)} entries, group has {len(group)}")
    return perm


def verify_automorphism(group: FiniteGroup, perm: Sequence[int]) -> None:
    """Bijective and multiplicative on G x generators; raises NotAnAutomorphism."""
    if len(set(perm)) != len(group):
        raise NotAnAutomorphism(f"map is not a bijection of {group.label}")
    for s in group.generators:
        for a in range(len(group)):
            if perm[group.mul(a, s)] != group.mul(perm[a], perm[s]):
                raise NotAnAutomorphism(
                    f"phi(ab) != phi(a)phi(b) for a={group.elements[a]!r}, b={group.elements[s]!r}"
                )


def _twisted_moves(group: FiniteGroup, perm: Sequence[int], movers: Sequence[int]) -> list[tuple[Any, Any]]:
    return [(group.elements[s], group.inv(group.elements[perm[s]])) for s in movers]


def _orbits(group: FiniteGroup, perm: Sequence[int], movers: Sequence[int], extra: Sequence[int] = ()) -> UnionFind:
    uf = UnionFind(len(group))
    op, index, elements = group.op, group.index, group.elements
    for s, phi_s_inv in _twisted_moves(group, perm, movers):
        for x in range(len(group)):
            uf.union(x, index[op(op(s, elements[x]), phi_s_inv)])
    for n in extra:
        m = elements[n]
        for x in range(len(group)):
            uf.union(x, index[op(elements[x], m)])
    return uf


def reidemeister_classes_finite(group: FiniteGroup, phi: Map, label: str | None = None, verify: bool = True) -> ReidemeisterReport:
    """Exact partition of G into phi-twisted classes, representatives least in enumeration order."""
    _check_size(group)
    perm = as_permutation(group, phi)
    if verify:
        verify_automorphism(group, perm)
    uf = _orbits(group, perm, group.generators)
    classes: dict[int, list[int]] = {}
    for x in range(len(group)):
        classes.setdefault(uf.find(x), []).append(x)
    reps = sorted(classes)
    name = label or getattr(phi, "label", "phi")
    logger.info("R(%s) on %s = %d", name, group.label, len(reps))
    return ReidemeisterReport(group.label, len(group), name, len(reps), reps, [len(classes[r]) for r in reps], classes)


def conjugacy_class_count(group: FiniteGroup) -> int:
    """Number of conjugacy classes via Burnside: commuting pairs / |G|."""
    table = group.table
    n = len(group)
    pairs = sum(1 for a in range(n) for b in range(n) if table[a][b] == table[b][a])
    return pairs // n


def _normal_subset(group: FiniteGroup, normal: Union[QuotientSpec, Sequence[int]]) -> list[int]:
    if isinstance(normal, QuotientSpec):
        return kernel_elements(group, normal)
    return sorted(set(normal))


def _check_invariant(group: FiniteGroup, perm: Sequence[int], members: Sequence[int]) -> None:
    inside = set(members)
    for n in members:
        if perm[n] not in inside:
            raise KernelNotInvariant(f"phi moves {group.elements[n]!r} out of N", generator=group.elements[n])


def reidemeister_lower_bound_via_quotient(group: FiniteGroup, normal: Union[QuotientSpec, Sequence[int]], phi: Map) -> int:
    """R(phi_bar) on G/N, a lower bound for R(phi); N is a normal subgroup given by
    its elements (indices) or as the kernel of a quotient."""
    perm = as_permutation(group, phi)
    members = _normal_subset(group, normal)
    _check_invariant(group, perm, members)
    uf = _orbits(group, perm, group.generators, generating_subset(group, members))
    return len(uf)


def generating_subset(group: FiniteGroup, members: Sequence[int]) -> list[int]:
    """Greedy generators of the subgroup with the given elements."""
    gens: list[int] = []
    reached = {group.identity_index}
    for m in members:
        if m not in reached:
            gens.append(m)
            reached = set(group.subgroup_closure(gens))
    return gens


@dataclass
class HeathReport:
    consistent: bool
    r_phi: int
    r_quotient: int
    upper_bound: int
    fibers: list[tuple[int, int]]


def heath_finiteness_check(group: FiniteGroup, normal: Union[QuotientSpec, Sequence[int]], phi: Map) -> HeathReport:
    """Check R(phi_bar) <= R(phi) <= sum over phi_bar-class representatives g of
    R(iota_g o phi|_N)."""
    perm = as_permutation(group, phi)
    verify_automorphism(group, perm)
    members = _normal_subset(group, normal)
    _check_invariant(group, perm, members)
    n_gens = generating_subset(group, members)
    r_phi = reidemeister_classes_finite(group, perm, verify=False).count
    quotient_uf = _orbits(group, perm, group.generators, n_gens)
    quotient_reps = quotient_uf.reps()
    local = {m: k for k, m in enumerate(members)}
    fibers = []
    for g in quotient_reps:
        g_elt, g_inv = group.elements[g], group.inv(group.elements[g])
        uf = UnionFind(len(members))
        for m in n_gens:
            m_elt = group.elements[m]
            psi_m_inv = group.inv(group.op(group.op(g_elt, group.elements[perm[m]]), g_inv))
            for k, x in enumerate(members):
                uf.union(k, local[group.index[group.op(group.op(m_elt, group.elements[x]), psi_m_inv)]])
        fibers.append((g, len(uf)))
    upper = sum(r for _, r in fibers)
    consistent = len(quotient_reps) <= r_phi <= upper
    if not consistent:
        logger.warning("Heath bookkeeping inconsistent on %s: %d <= %d <= %d fails",
                       group.label, len(quotient_reps), r_phi, upper)
    return HeathReport(consistent, r_phi, len(quotient_reps), upper, fibers)


def fixed_points_finite(group: FiniteGroup, phi: Map) -> list[int]:
    """Indices of Fix(phi)."""
    _check_size(group)
    perm = as_permutation(group, phi)
    return [k for k, image in enumerate(perm) if image == k]
