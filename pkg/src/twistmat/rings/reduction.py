"""Reduction of ring elements onto finite residue fields."""

from sympy import isprime
from sympy.ntheory import sqrt_mod

from ..errors import IdealNotCoprime, UnsupportedSpec
from . import polynomials as P
from .element import RingElement, _canonical, from_poly, inverse, mul, power
from .spec import RingSpec


def residue_field(spec: RingSpec, modulus) -> RingSpec:
    """The field R/(modulus): F_p for an int prime, F_p[s]/(g) for a polynomial g."""
    if spec.kind in ("integers", "s_integers", "quadratic"):
        p = int(modulus)
        if not isprime(p):
            raise UnsupportedSpec(f"{p} is not a prime")
        if spec.kind == "s_integers" and p in spec.primes:
            raise IdealNotCoprime(f"{p} is inverted in {spec.label}")
        if spec.kind == "quadratic":
            if p == 2:
                raise UnsupportedSpec("reduction of Z[sqrt(d)] needs an odd prime")
            if _sqrt_mod(spec.d, p) is None:
                raise UnsupportedSpec(f"{spec.d} is not a square mod {p}")
        return RingSpec.finite_field(p)
    if spec.kind in ("poly", "localized_poly"):
        g = tuple(modulus)
        if not g or g[0] != 1 or not P.is_irreducible(g, spec.p):
            raise UnsupportedSpec(f"{P.format_poly(g)} is not monic irreducible")
        for h in spec.generators:
            if P.gcd(g, h, spec.p) != (1,):
                raise IdealNotCoprime(f"{P.format_poly(g)} shares a factor with inverted {P.format_poly(h)}")
        return RingSpec.finite_field(spec.p, g)
    raise UnsupportedSpec(f"no reduction defined on {spec.label}")


def _sqrt_mod(d: int, p: int) -> int | None:
    roots = sqrt_mod(d % p, p, all_roots=True)
    return min(roots) if roots else None


def reduce_mod(a: RingElement, modulus) -> RingElement:
    """Image of a in R/(modulus); the square root of d is the smallest one mod p."""
    spec = a.spec
    field = residue_field(spec, modulus)
    p = field.p
    if spec.kind == "quadratic":
        r = _sqrt_mod(spec.d, p)
        return from_poly(field, ((a.num[0] + a.num[1] * r) % p,))
    if spec.kind in ("integers", "s_integers"):
        num = from_poly(field, (a.num % p,))
    else:
        num = _canonical(field, P.rem(a.num, field.modulus, p), ())
    out = num
    for g, e in zip(spec.generators, a.exps):
        if e:
            g_image = from_poly(field, (g % p,)) if isinstance(g, int) else _canonical(field, P.rem(g, field.modulus, p), ())
            out = mul(out, power(inverse(g_image), -e))
    return out
