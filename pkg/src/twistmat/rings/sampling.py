"""Seeded random ring elements and units for property checks."""

import random
from functools import lru_cache

from sympy.solvers.diophantine.diophantine import diop_DN

from . import polynomials as P
from .element import RingElement, _canonical, from_int, neg, power, sqrt_d
from .spec import RingSpec

DEFAULT_HEIGHT = 100
DEFAULT_DEGREE = 4
UNIT_EXPONENT = 3


@lru_cache(maxsize=None)
def fundamental_unit(spec: RingSpec) -> RingElement | None:
    """Fundamental unit of Z[sqrt(d)] for d > 0; None when the unit group is finite."""
    if spec.d < 0:
        return None
    sols = diop_DN(spec.d, -1) or diop_DN(spec.d, 1)
    x, y = min(sols)
    return RingElement(spec, (int(x), int(y)), ())


def _random_poly(rng: random.Random, p: int, degree: int) -> P.Poly:
    return P.strip([rng.randrange(p) for _ in range(degree + 1)], p)


def random_element(rng: random.Random, spec: RingSpec, height: int = DEFAULT_HEIGHT, degree: int = DEFAULT_DEGREE) -> RingElement:
    """Coefficients bounded by `height` (char 0) or degree <= `degree` (char p)."""
    kind = spec.kind
    gens = spec.generators
    if kind == "integers":
        return from_int(spec, rng.randint(-height, height))
    if kind == "s_integers":
        exps = tuple(-rng.randint(0, 2) for _ in gens)
        return _canonical(spec, rng.randint(-height, height), exps)
    if kind == "quadratic":
        return RingElement(spec, (rng.randint(-height, height), rng.randint(-height, height)), ())
    if kind == "finite_field":
        return _canonical(spec, P.rem(_random_poly(rng, spec.p, spec.field_degree - 1), spec.modulus, spec.p), ())
    if kind == "poly":
        return _canonical(spec, _random_poly(rng, spec.p, degree), ())
    exps = tuple(-rng.randint(0, 2) for _ in gens)
    return _canonical(spec, _random_poly(rng, spec.p, degree), exps)


def random_unit(rng: random.Random, spec: RingSpec) -> RingElement:
    kind = spec.kind
    gens = spec.generators
    if kind == "integers":
        return from_int(spec, rng.choice((1, -1)))
    if kind == "s_integers":
        exps = tuple(rng.randint(-UNIT_EXPONENT, UNIT_EXPONENT) for _ in gens)
        return _canonical(spec, rng.choice((1, -1)), exps)
    if kind == "quadratic":
        eps = fundamental_unit(spec)
        if eps is None:
            base = sqrt_d(spec) if spec.d == -1 else from_int(spec, -1)
            return power(base, rng.randint(0, 3))
        u = power(eps, rng.randint(-UNIT_EXPONENT, UNIT_EXPONENT))
        return neg(u) if rng.random() < 0.5 else u
    if kind == "finite_field":
        while True:
            a = random_element(rng, spec)
            if not a.is_zero:
                return a
    const = P.constant(rng.randint(1, spec.p - 1), spec.p)
    if kind == "poly":
        return _canonical(spec, const, ())
    exps = tuple(rng.randint(-UNIT_EXPONENT, UNIT_EXPONENT) for _ in gens)
    return _canonical(spec, const, exps)


def random_nonzero(rng: random.Random, spec: RingSpec) -> RingElement:
    while True:
        a = random_element(rng, spec)
        if not a.is_zero:
            return a

