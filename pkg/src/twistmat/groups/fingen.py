"""Finite generation of S_n^I(R) from ring-theoretic facts.

S_n^I(R) is finitely generated when either
  (i)  (R, +) is finitely generated, or
  (ii) U(R) is finitely generated, R is a finitely generated module over the
       group ring Z[U(R)], and I satisfies (NG).
The facts about R are not computable uniformly, so each supported ring kind
carries them below.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from ..errors import UnsupportedSpec
from ..rings.spec import RingSpec
from .index_set import IndexSet, ng_condition

Verdict = Literal["yes", "no"]


@dataclass(frozen=True)
class RingFacts:
    additive_fg: bool
    units_fg: bool
    module_fg: bool
    citation: str


@dataclass(frozen=True)
class FinGenVerdict:
    verdict: Verdict
    condition: str | None
    failing_clause: str | None
    facts: RingFacts

    @property
    def is_yes(self) -> bool:
        return self.verdict == "yes"

    def as_row(self, ring: RingSpec, ix: IndexSet) -> dict:
        return {
            "ring": ring.label,
            "n": ix.n,
            "set_i": ix.label,
            "verdict": self.verdict,
            "condition": self.condition or "",
            "failing_clause": self.failing_clause or "",
        }


def ring_facts(ring: RingSpec) -> RingFacts:
    kind = ring.kind
    if kind == "integers":
        return RingFacts(True, True, True, "Z is cyclic as an additive group")
    if kind == "quadratic":
        return RingFacts(True, True, True, "Z[sqrt(d)] is free of rank 2 over Z")
    if kind == "finite_field":
        return RingFacts(True, True, True, "finite rings are finitely generated")
    if kind == "s_integers":
        return RingFacts(False, True, True, "U(Z[1/S]) = {+-1} x <S>; Z[1/S] is spanned by units")
    if kind == "poly":
        return RingFacts(False, True, False, "U(F_q[t]) = F_q^* is finite and F_q[t] is infinite-dimensional over F_q")
    if kind == "localized_poly":
        return RingFacts(
            False,
            True,
            True,
            "U(R) = F_q^* x <inverted generators>; R is finite over the span of the units",
        )
    raise UnsupportedSpec(f"no finite generation facts for {ring.label}")


def is_finitely_generated(ring: RingSpec, ix: IndexSet) -> FinGenVerdict:
    facts = ring_facts(ring)
    if facts.additive_fg:
        return FinGenVerdict("yes", "(i)", None, facts)
    if not facts.units_fg:
        return FinGenVerdict("no", None, "units", facts)
    if not facts.module_fg:
        return FinGenVerdict("no", None, "module", facts)
    if not ng_condition(ix):
        return FinGenVerdict("no", None, "ng", facts)
    return FinGenVerdict("yes", "(ii)", None, facts)


def all_index_sets(n: int) -> list[IndexSet]:
    """All 2^n subsets of {1..n}, ordered by size then lexicographically."""
    out = []
    for size in range(n + 1):
        out.extend(IndexSet.of(n, combo) for combo in combinations(range(1, n + 1), size))
    return out

