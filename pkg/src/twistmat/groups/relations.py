"""Randomised checks of the defining relations among d_i(u) and e_{i,j}(r)."""

import logging
import random
from dataclasses import dataclass, field
from typing import Callable

from ..rings.element import add, inverse, mul, one
from ..rings.sampling import random_element, random_unit
from ..rings.spec import RingSpec
from .element import (
    commutator,
    conjugate,
    diagonal_element,
    diagonal_gen,
    elementary,
    identity,
    inverse_element,
    multiply,
)
from .index_set import IndexSet

logger = logging.getLogger(__name__)

RELATIONS = (
    "diag-multiplicative",
    "diag-commute",
    "elementary-additive",
    "commutator-inverse",
    "commutator-adjacent",
    "commutator-disjoint",
    "diag-conjugation",
    "torus-conjugation",
)


@dataclass
class RelationResult:
    name: str
    samples: int = 0
    failures: int = 0
    first_failure: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def as_row(self) -> dict:
        return {
            "relation": self.name,
            "samples": self.samples,
            "failures": self.failures,
            "passed": self.passed,
            "first_failure": self.first_failure or "",
        }


Check = Callable[[random.Random], tuple[bool, str]]


def _positions(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


def _checks(ring: RingSpec, ix: IndexSet) -> dict[str, Check | None]:
    n = ix.n
    members = sorted(ix.members)
    positions = _positions(n)
    adjacent = [(a, b) for a in positions for b in positions if a[1] == b[0]]
    disjoint = [(a, b) for a in positions for b in positions if a[0] != b[1] and b[0] != a[1]]

    def elem(rng):
        return random_element(rng, ring)

    def diag_multiplicative(rng):
        i = rng.choice(members)
        u, v = random_unit(rng, ring), random_unit(rng, ring)
        lhs = multiply(diagonal_gen(ix, ring, i, u), diagonal_gen(ix, ring, i, v))
        return lhs == diagonal_gen(ix, ring, i, mul(u, v)), f"i={i}, u={u}, v={v}"

    def diag_commute(rng):
        i, j = rng.choice(members), rng.choice(members)
        a = diagonal_gen(ix, ring, i, random_unit(rng, ring))
        b = diagonal_gen(ix, ring, j, random_unit(rng, ring))
        return multiply(a, b) == multiply(b, a), f"i={i}, j={j}"

    def elementary_additive(rng):
        i, j = rng.choice(positions)
        r, s = elem(rng), elem(rng)
        lhs = multiply(elementary(ix, ring, i, j, r), elementary(ix, ring, i, j, s))
        return lhs == elementary(ix, ring, i, j, add(r, s)), f"({i},{j}), r={r}, s={s}"

    def commutator_inverse(rng):
        (i, j), (k, l) = rng.choice(positions), rng.choice(positions)
        x = elementary(ix, ring, i, j, elem(rng))
        y = elementary(ix, ring, k, l, elem(rng))
        ok = inverse_element(commutator(x, y)) == commutator(x, inverse_element(y))
        return ok, f"({i},{j}), ({k},{l})"

    def commutator_adjacent(rng):
        (i, j), (_, l) = rng.choice(adjacent)
        r, s = elem(rng), elem(rng)
        lhs = commutator(elementary(ix, ring, i, j, r), elementary(ix, ring, j, l, s))
        return lhs == elementary(ix, ring, i, l, mul(r, s)), f"({i},{j}), ({j},{l}), r={r}, s={s}"

    def commutator_disjoint(rng):
        (i, j), (k, l) = rng.choice(disjoint)
        lhs = commutator(elementary(ix, ring, i, j, elem(rng)), elementary(ix, ring, k, l, elem(rng)))
        return lhs == identity(ix, ring), f"({i},{j}), ({k},{l})"

    def diag_conjugation(rng):
        i = rng.choice(members)
        k, l = rng.choice(positions)
        u, r = random_unit(rng, ring), elem(rng)
        if i == k:
            expected = mul(u, r)
        elif i == l:
            expected = mul(inverse(u), r)
        else:
            expected = r
        lhs = conjugate(elementary(ix, ring, k, l, r), diagonal_gen(ix, ring, i, u))
        return lhs == elementary(ix, ring, k, l, expected), f"i={i}, ({k},{l}), u={u}, r={r}"

    def torus_conjugation(rng):
        d = diagonal_element(ix, ring, [random_unit(rng, ring) if k in ix else one(ring) for k in range(1, n + 1)])
        i, j = rng.choice(positions)
        r = elem(rng)
        scaled = mul(mul(d.diagonal[i - 1], inverse(d.diagonal[j - 1])), r)
        lhs = conjugate(elementary(ix, ring, i, j, r), d)
        return lhs == elementary(ix, ring, i, j, scaled), f"({i},{j}), d={[str(u) for u in d.diagonal]}"

    return {
        "diag-multiplicative": diag_multiplicative if members else None,
        "diag-commute": diag_commute if members else None,
        "elementary-additive": elementary_additive,
        "commutator-inverse": commutator_inverse,
        "commutator-adjacent": commutator_adjacent if adjacent else None,
        "commutator-disjoint": commutator_disjoint if disjoint else None,
        "diag-conjugation": diag_conjugation if members else None,
        "torus-conjugation": torus_conjugation,
    }


def verify_relations(ring: RingSpec, ix: IndexSet, samples: int = 200, seed: int = 20240001) -> list[RelationResult]:
    """Run every relation on `samples` random instantiations.

    Relations with no admissible instantiation (e.g. diagonal ones when I is empty)
    are reported with zero samples.
    """
    rng = random.Random(seed)
    results = []
    for name, check in _checks(ring, ix).items():
        result = RelationResult(name)
        if check is None:
            result.notes.append("vacuous")
        else:
            for _ in range(samples):
                ok, where = check(rng)
                result.samples += 1
                if not ok:
                    result.failures += 1
                    if result.first_failure is None:
                        result.first_failure = where
        logger.info("relation %s on S_%d^%s(%s): %d/%d passed", name, ix.n, ix.label, ring.label,
                    result.samples - result.failures, result.samples)
        results.append(result)
    return results
