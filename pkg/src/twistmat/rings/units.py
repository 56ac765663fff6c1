"""Writing elements as sums of units, and extending unit maps additively."""

from typing import Callable

from ..errors import UnsupportedSpec
from . import polynomials as P
from .element import RingElement, _canonical, add, zero


def sum_of_units(a: RingElement) -> list[RingElement]:
    """Units u_1, ..., u_k with a = u_1 + ... + u_k.

    In F_q[t, t^-1, f_i^-1] each monomial c*t^k of the numerator, times the
    generator part of a, is a unit.
    """
    spec = a.spec
    if a.is_zero:
        return []
    if spec.kind == "finite_field":
        return [a]
    if spec.kind != "localized_poly" or not spec.t_inverted:
        raise UnsupportedSpec(f"{spec.label} is not spanned by units term by term")
    deg = P.degree(a.num)
    units = []
    for i, c in enumerate(a.num):
        if c:
            units.append(_canonical(spec, P.monomial(deg - i, spec.p, c), a.exps))
    return units


def extend_unit_map(unit_map: Callable[[RingElement], RingElement], a: RingElement) -> RingElement:
    """The additive extension sum(unit_map(u_i)) over sum_of_units(a)."""
    out = zero(a.spec)
    for u in sum_of_units(a):
        out = add(out, unit_map(u))
    return out
