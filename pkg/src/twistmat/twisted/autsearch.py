"""Automorphisms of small finite groups by backtracking over generator images."""

import logging
from dataclasses import dataclass, field
from typing import Sequence

from ..config.limits import DEFAULT_AUT_LIMIT
from ..errors import TooLarge
from ..groups.finite import FiniteGroup
from ..automorphisms.quotient import SuperdiagonalForm, check_superdiagonal_form

logger = logging.getLogger(__name__)

Permutation = tuple[int, ...]


def _closure_map(table: list[list[int]], identity: int, gens: Sequence[int], images: Sequence[int]) -> dict[int, int] | None:
    """Extend gens -> images to the generated subgroup, or None if that is not a
    well defined injective homomorphism."""
    f = {identity: identity}
    used = {identity}
    queue = [identity]
    while queue:
        a = queue.pop()
        fa = f[a]
        for g, t in zip(gens, images):
            b, fb = table[a][g], table[fa][t]
            known = f.get(b)
            if known is not None:
                if known != fb:
                    return None
            elif fb in used:
                return None
            else:
                f[b] = fb
                used.add(fb)
                queue.append(b)
    return f


def enumerate_automorphisms_small(group: FiniteGroup, limit: int | None = None) -> list[Permutation]:
    """All automorphisms of `group` as permutation tables, sorted lexicographically.

    Generator images are chosen among elements of the same order; each partial
    assignment is extended over the subgroup it generates and dropped as soon as
    two words disagree or two elements collide.
    """
    limit = DEFAULT_AUT_LIMIT if limit is None else limit
    if len(group) > limit:
        raise TooLarge(len(group), limit, "automorphism search group")
    gens = list(group.generators)
    if len(group.subgroup_closure(gens)) != len(group):
        raise ValueError(f"generators of {group.label} do not generate it")
    table, orders, e = group.table, group.orders, group.identity_index
    candidates = [[x for x in range(len(group)) if orders[x] == orders[g]] for g in gens]
    found: list[Permutation] = []

    def search(images: list[int]) -> None:
        depth = len(images)
        if depth == len(gens):
            f = _closure_map(table, e, gens, images)
            found.append(tuple(f[x] for x in range(len(group))))
            return
        for t in candidates[depth]:
            images.append(t)
            if _closure_map(table, e, gens[: depth + 1], images) is not None:
                search(images)
            images.pop()

    search([])
    found.sort()
    logger.info("%s has %d automorphisms", group.label, len(found))
    return found


def compose_permutations(p: Permutation, q: Permutation) -> Permutation:
    """p o q."""
    return tuple(p[x] for x in q)


def invert_permutation(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def is_group(perms: Sequence[Permutation]) -> bool:
    """Closed under composition and inversion."""
    pool = set(perms)
    return all(compose_permutations(p, q) in pool for p in pool for q in pool) and all(
        invert_permutation(p) in pool for p in pool
    )


@dataclass
class AutomorphismSurvey:
    group: str
    order: int
    automorphisms: list[Permutation]
    forms: list[SuperdiagonalForm | None] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.automorphisms)

    @property
    def all_superdiagonal(self) -> bool:
        return all(form is not None for form in self.forms)

    def slot_fixed_count(self, k: int) -> int:
        return sum(1 for form in self.forms if form is not None and form.fixes_slot(k))


def survey_automorphisms(group: FiniteGroup, limit: int | None = None) -> AutomorphismSurvey:
    """Enumerate Aut(G) and, for U_n/U_n' style quotients, put each automorphism in
    superdiagonal form."""
    perms = enumerate_automorphisms_small(group, limit)
    survey = AutomorphismSurvey(group.label, len(group), perms)
    info = group.info
    if info.get("kind") == "matrix" and info["quotient"].kind == "mod_commutator_u":
        survey.forms = [check_superdiagonal_form(group, p) for p in perms]
        missing = sum(1 for form in survey.forms if form is None)
        if missing:
            logger.warning("%d automorphisms of %s are not in superdiagonal form", missing, group.label)
    return survey
