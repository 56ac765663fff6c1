"""Exact arithmetic over the supported base rings."""

from .element import (
    RingElement,
    UnitFactorization,
    add,
    divide,
    from_int,
    from_poly,
    inverse,
    is_unit,
    mul,
    neg,
    normalize,
    one,
    power,
    sub,
    variable,
    zero,
)
from .polynomials import is_irreducible, is_self_reciprocal, parse_poly, reciprocal_poly
from .spec import RingSpec
