"""Randomised homomorphism and bijectivity checks for maps between matrix groups."""

import logging
import random
from dataclasses import dataclass
from typing import Any, Callable

from ..groups.element import random_group_element
from ..groups.index_set import IndexSet
from ..groups.quotients import NONE, QuotientSpec, multiply_any, project
from ..rings.spec import RingSpec
from .automorphism import Automorphism, inverse_atoms

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomomorphismCheck:
    ok: bool
    samples: int
    counterexample: tuple[Any, ...] | None = None
    reason: str | None = None
    inverse_checked: bool = False


def sampler_for(ix: IndexSet, ring: RingSpec, quotient: QuotientSpec = NONE, height: int = 100,
                degree: int = 4) -> Callable[[random.Random], Any]:
    def sample(rng: random.Random):
        g = random_group_element(rng, ix, ring, height, degree)
        return g if quotient.kind == "none" else project(g, quotient)

    return sample


def verify_homomorphism(
    phi: Callable[[Any], Any],
    sampler: Callable[[random.Random], Any],
    samples: int = 500,
    seed: int = 20240001,
    inverse: Callable[[Any], Any] | None = None,
    ring: RingSpec | None = None,
) -> HomomorphismCheck:
    """Check phi(ab) = phi(a) phi(b) on random pairs, and phi^-1 o phi = id when an inverse is known.

    For an Automorphism the inverse is taken from inverse_atoms when `ring` is given.
    """
    if inverse is None and isinstance(phi, Automorphism) and ring is not None:
        inverse = inverse_atoms(phi, ring)
    rng = random.Random(seed)
    for k in range(samples):
        a, b = sampler(rng), sampler(rng)
        if phi(multiply_any(a, b)) != multiply_any(phi(a), phi(b)):
            logger.info("homomorphism check failed after %d samples", k + 1)
            return HomomorphismCheck(False, k + 1, (a, b), "phi(ab) != phi(a)phi(b)", inverse is not None)
        if inverse is not None:
            if inverse(phi(a)) != a:
                return HomomorphismCheck(False, k + 1, (a,), "phi^-1(phi(a)) != a", True)
            if phi(inverse(a)) != a:
                return HomomorphismCheck(False, k + 1, (a,), "phi(phi^-1(a)) != a", True)
    return HomomorphismCheck(True, samples, None, None, inverse is not None)
