"""Fixed points: certified infinite fixed families and exhaustive box scans.

An infinite Fix(phi) in a finitely generated residually finite group forces
R(phi) to be infinite. The certificate here records finitely many verified fixed
elements of an infinite family together with the finite generation verdict; it
never claims the infinite statement on its own.
"""

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import NGViolated, ParameterNotFixed, PreconditionUnmet, UnsupportedSpec
from ..groups.element import GroupElement, elementary, make_element, multiply
from ..groups.fingen import FinGenVerdict, is_finitely_generated
from ..groups.index_set import IndexSet, ng_condition
from ..groups.quotients import MOD_COMMUTATOR_U, project
from ..rings.automorphisms import IDENTITY, RingAutomorphism, apply_ring_aut, check_descriptor, fixed_transcendental
from ..rings.element import RingElement, divide, from_int, inverse, mul, one, power, sqrt_d
from ..rings.sampling import random_unit
from ..rings.spec import RingSpec
from ..automorphisms.atoms import DiagConj, Flip, Inner, RingInduced, check_diag_units
from ..automorphisms.automorphism import Automorphism
from ..automorphisms.diagonal import dc_star
from ..automorphisms.quotient import induce_on_quotient

logger = logging.getLogger(__name__)

RESIDUAL_FINITENESS = (
    "S_n^I(R) is a linear group over a commutative ring; finitely generated linear groups "
    "are residually finite (Mal'cev)"
)


@dataclass
class FixFamilyCertificate:
    quotient: str
    automorphism: Automorphism
    parameters: str
    verified: int
    count: int
    d_c: tuple[RingElement, ...]
    finite_generation: FinGenVerdict
    residual_finiteness: str = RESIDUAL_FINITENESS

    @property
    def complete(self) -> bool:
        return self.verified == self.count

    @property
    def infinite_reidemeister(self) -> bool:
        """Both hypotheses of the fixed-point criterion are on record."""
        return self.complete and self.finite_generation.is_yes


def _random_dc(rng: random.Random, ix: IndexSet, ring: RingSpec) -> tuple[RingElement, ...]:
    unit = one(ring)
    return tuple(unit if k in ix else random_unit(rng, ring) for k in range(1, ix.n + 1))


def parameter_set(ring: RingSpec, count: int) -> tuple[str, list[RingElement]]:
    """The first `count` members of S and a description of S."""
    if ring.characteristic == 0:
        return f"1..{count}", [from_int(ring, s) for s in range(1, count + 1)]
    try:
        x = fixed_transcendental(ring)
    except UnsupportedSpec as exc:
        raise PreconditionUnmet(f"no fixed transcendental in {ring.label}: {exc}") from exc
    return f"x^k for k=1..{count}, x={x}", [power(x, k) for k in range(1, count + 1)]


def fix_family_certify(
    n: int,
    ix: IndexSet,
    ring: RingSpec,
    eps: int,
    alpha: RingAutomorphism = IDENTITY,
    d_c: Sequence[RingElement] | None = None,
    count: int = 100,
    seed: int = 20240001,
) -> FixFamilyCertificate:
    """Verify e_bar_{1,2}(s) e_bar_{n-1,n}(s) is fixed by the map induced on U_n/U_n'
    by iota_{d^c_*} o iota_{d^c} o Flip^eps o alpha_* for the first `count` s in S."""
    if n < 4:
        raise PreconditionUnmet(f"fixed families need n >= 4, got {n}")
    if ix.n != n:
        raise PreconditionUnmet(f"index set is for n={ix.n}, not {n}")
    if not ng_condition(ix):
        raise PreconditionUnmet(f"I={ix.label} fails (NG)")
    if eps not in (0, 1):
        raise PreconditionUnmet(f"eps must be 0 or 1, got {eps}")
    check_descriptor(alpha, ring)
    d_c = tuple(d_c) if d_c is not None else _random_dc(random.Random(seed), ix, ring)
    check_diag_units(d_c)
    try:
        star = dc_star(d_c, ix)
    except NGViolated as exc:
        raise PreconditionUnmet(str(exc)) from exc
    atoms = [Inner(star), DiagConj(d_c)]
    if eps:
        atoms.append(Flip())
    atoms.append(RingInduced(alpha))
    phi = induce_on_quotient(Automorphism(tuple(atoms)), MOD_COMMUTATOR_U, ix, ring, seed=seed)
    description, params = parameter_set(ring, count)
    verified = 0
    for s in params:
        if apply_ring_aut(alpha, s) != s:
            raise ParameterNotFixed(f"{alpha.label} moves the parameter {s}", parameter=s)
        element = project(multiply(elementary(ix, ring, 1, 2, s), elementary(ix, ring, n - 1, n, s)), MOD_COMMUTATOR_U)
        if phi(element) != element:
            raise ParameterNotFixed(f"{phi.label} moves the family element at s={s}", parameter=s)
        verified += 1
    verdict = is_finitely_generated(ring, ix)
    logger.info("fixed family over %s, n=%d, I=%s: %d/%d verified, finitely generated: %s",
                ring.label, n, ix.label, verified, count, verdict.verdict)
    return FixFamilyCertificate(MOD_COMMUTATOR_U.label, phi, description, verified, count, d_c, verdict)


@dataclass
class FixSearchReport:
    automorphism: str
    ring: str
    bound: int
    exponent_bound: int
    box_size: int
    fixed: list[GroupElement] = field(default_factory=list)

    @property
    def only_identity(self) -> bool:
        return len(self.fixed) == 1 and self.fixed[0].is_identity


def box_values(ring: RingSpec, bound: int, exponent_bound: int = 1) -> list[RingElement]:
    """Coordinate values with numerator height <= bound and, for Z[1/S], denominator
    exponents <= exponent_bound."""
    numerators = [from_int(ring, a) for a in range(-bound, bound + 1)]
    if ring.kind == "integers":
        return numerators
    if ring.kind == "s_integers":
        denominators = []
        for exps in itertools.product(range(exponent_bound + 1), repeat=len(ring.primes)):
            den = 1
            for q, e in zip(ring.primes, exps):
                den *= q**e
            denominators.append(from_int(ring, den))
        return list(dict.fromkeys(divide(a, den) for den in denominators for a in numerators))
    if ring.kind == "quadratic":
        root = sqrt_d(ring)
        return [a + mul(b, root) for a in numerators for b in numerators]
    raise UnsupportedSpec(f"box search is not defined over {ring.label}")


def fix_trivial_box_search(phi: Automorphism, ring: RingSpec, bound: int, exponent_bound: int = 1) -> FixSearchReport:
    """All unipotent g in S_3^{2}(ring) with coordinates in the box and phi(g) = g."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    ix = IndexSet.of(3, {2})
    values = box_values(ring, bound, exponent_bound)
    report = FixSearchReport(phi.label, ring.label, bound, exponent_bound, len(values) ** 3)
    for x, y, z in itertools.product(values, repeat=3):
        g = make_element(ix, ring, {(1, 2): x, (2, 3): y, (1, 3): z})
        if phi(g) == g:
            report.fixed.append(g)
    logger.info("box search for %s over %s, B=%d: %d of %d points fixed",
                phi.label, ring.label, bound, len(report.fixed), report.box_size)
    return report


@dataclass
class UnitSwapCheck:
    samples: int
    homomorphism_failures: int
    involution_failures: int
    fixed_failures: int
    moved_witness: tuple[RingElement, RingElement] | None

    @property
    def ok(self) -> bool:
        return not (self.homomorphism_failures or self.involution_failures or self.fixed_failures)


def _swap(pair: tuple[RingElement, RingElement]) -> tuple[RingElement, RingElement]:
    u, v = pair
    return inverse(v), inverse(u)


def _pair_mul(a: tuple[RingElement, RingElement], b: tuple[RingElement, RingElement]) -> tuple[RingElement, RingElement]:
    return mul(a[0], b[0]), mul(a[1], b[1])


def unit_pair_swap_check(ring: RingSpec, samples: int = 200, seed: int = 20240001) -> UnitSwapCheck:
    """(u, v) -> (v^-1, u^-1) on U(R)^2: an involutive automorphism fixing (u, u^-1)."""
    rng = random.Random(seed)
    hom = inv = fix = 0
    witness = None
    for _ in range(samples):
        a = (random_unit(rng, ring), random_unit(rng, ring))
        b = (random_unit(rng, ring), random_unit(rng, ring))
        if _swap(_pair_mul(a, b)) != _pair_mul(_swap(a), _swap(b)):
            hom += 1
        if _swap(_swap(a)) != a:
            inv += 1
        diagonal = (a[0], inverse(a[0]))
        if _swap(diagonal) != diagonal:
            fix += 1
        if witness is None and a[1] != inverse(a[0]) and _swap(a) != a:
            witness = a
    return UnitSwapCheck(samples, hom, inv, fix, witness)
