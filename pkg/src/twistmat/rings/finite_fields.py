"""Element enumeration for finite fields, in a fixed lexicographic order."""

from functools import lru_cache

from sympy import factorint

from ..errors import UnsupportedSpec
from . import polynomials as P
from .element import RingElement, from_poly, one, power
from .spec import RingSpec


def _require_field(spec: RingSpec) -> None:
    if spec.kind != "finite_field":
        raise UnsupportedSpec(f"{spec.label} is not a finite field")


@lru_cache(maxsize=None)
def field_elements(spec: RingSpec) -> tuple[RingElement, ...]:
    """All q elements: 0, 1, ..., s, s+1, ... (coefficient vectors in lexicographic order)."""
    _require_field(spec)
    return tuple(from_poly(spec, f) for f in P.all_polys_below(spec.field_degree, spec.p))


def field_units(spec: RingSpec) -> tuple[RingElement, ...]:
    return tuple(a for a in field_elements(spec) if not a.is_zero)


@lru_cache(maxsize=None)
def primitive_element(spec: RingSpec) -> RingElement:
    """First element (in enumeration order) generating the multiplicative group."""
    _require_field(spec)
    q1 = spec.order - 1
    identity = one(spec)
    for a in field_units(spec):
        if all(power(a, q1 // r) != identity for r in factorint(q1)):
            return a
    raise AssertionError(f"no primitive element in {spec.label}")


def additive_basis(spec: RingSpec) -> tuple[RingElement, ...]:
    """1, s, ..., s^(k-1) as field elements."""
    _require_field(spec)
    return tuple(from_poly(spec, P.monomial(k, spec.p)) for k in range(spec.field_degree))
