"""Dense polynomials over a prime field GF(p).

Polynomials are tuples of Python ints in sympy's galoistools convention:
highest-degree coefficient first, no leading zeros, the zero polynomial is ().
The helpers here convert to and from the list/ZZ form galoistools expects.
"""

import itertools
import re
from typing import Iterable, Iterator, Sequence

from sympy.polys import galoistools as gf
from sympy.polys.domains import ZZ

Poly = tuple[int, ...]

_TERM = re.compile(r"^(\d*)\*?([ts])?(?:\^(\d+))?$")


def _in(f: Sequence[int]) -> list:
    return [ZZ(c) for c in f]


def _out(f: Iterable) -> Poly:
    return tuple(int(c) for c in f)


def strip(f: Sequence[int], p: int) -> Poly:
    """Reduce coefficients mod p and drop leading zeros."""
    return _out(gf.gf_from_int_poly([int(c) % p for c in f], p))


def constant(c: int, p: int) -> Poly:
    c %= p
    return (c,) if c else ()


def monomial(k: int, p: int, coeff: int = 1) -> Poly:
    """coeff * t^k."""
    coeff %= p
    if not coeff:
        return ()
    return (coeff,) + (0,) * k


def degree(f: Poly) -> int:
    return len(f) - 1


def is_constant(f: Poly) -> bool:
    return len(f) <= 1


def add(f: Poly, g: Poly, p: int) -> Poly:
    return _out(gf.gf_add(_in(f), _in(g), p, ZZ))


def sub(f: Poly, g: Poly, p: int) -> Poly:
    return _out(gf.gf_sub(_in(f), _in(g), p, ZZ))


def neg(f: Poly, p: int) -> Poly:
    return _out(gf.gf_neg(_in(f), p, ZZ))


def mul(f: Poly, g: Poly, p: int) -> Poly:
    return _out(gf.gf_mul(_in(f), _in(g), p, ZZ))


def scale(f: Poly, c: int, p: int) -> Poly:
    return _out(gf.gf_mul_ground(_in(f), ZZ(c % p), p, ZZ))


def divmod_(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    q, r = gf.gf_div(_in(f), _in(g), p, ZZ)
    return _out(q), _out(r)


def rem(f: Poly, g: Poly, p: int) -> Poly:
    return _out(gf.gf_rem(_in(f), _in(g), p, ZZ))


def divides(g: Poly, f: Poly, p: int) -> bool:
    return not rem(f, g, p)


def power(f: Poly, k: int, p: int) -> Poly:
    return _out(gf.gf_pow(_in(f), k, p, ZZ))


def power_mod(f: Poly, k: int, modulus: Poly, p: int) -> Poly:
    return _out(gf.gf_pow_mod(_in(f), k, _in(modulus), p, ZZ))


def gcd(f: Poly, g: Poly, p: int) -> Poly:
    """Monic gcd."""
    return _out(gf.gf_gcd(_in(f), _in(g), p, ZZ))


def inverse_mod(f: Poly, modulus: Poly, p: int) -> Poly | None:
    """Inverse of f modulo `modulus`, or None when they share a factor."""
    s, _, h = gf.gf_gcdex(_in(f), _in(modulus), p, ZZ)
    if _out(h) != (1,):
        return None
    return rem(_out(s), modulus, p)


def monic(f: Poly, p: int) -> tuple[int, Poly]:
    lc, g = gf.gf_monic(_in(f), p, ZZ)
    return int(lc), _out(g)


def compose(f: Poly, g: Poly, p: int) -> Poly:
    """f(g(t))."""
    return _out(gf.gf_compose(_in(f), _in(g), p, ZZ))


def is_irreducible(f: Poly, p: int) -> bool:
    """Irreducibility over GF(p); degree must be at least 1."""
    if degree(f) < 1:
        raise ValueError("irreducibility is only defined for degree >= 1")
    return bool(gf.gf_irreducible_p(_in(f), p, ZZ))


def reciprocal_poly(f: Poly, p: int) -> Poly:
    """t^deg(f) * f(1/t): the coefficient vector reversed."""
    if not f:
        raise ValueError("reciprocal of the zero polynomial")
    return strip(tuple(reversed(f)), p)


def is_self_reciprocal(f: Poly, p: int) -> bool:
    return reciprocal_poly(f, p) == f


def monic_polys(deg: int, p: int) -> Iterator[Poly]:
    """Monic polynomials of the given degree, lexicographic in the lower coefficients."""
    for tail in itertools.product(range(p), repeat=deg):
        yield (1,) + tail


def all_polys_below(deg: int, p: int) -> Iterator[Poly]:
    """Every polynomial of degree < deg, lexicographic in the coefficient vector."""
    for coeffs in itertools.product(range(p), repeat=deg):
        yield strip(coeffs, p)


def smallest_irreducible(p: int, coprime_to: Sequence[Poly] = (), max_degree: int = 64) -> Poly:
    """Smallest-degree monic irreducible coprime to every polynomial given.

    Ties are broken by the lexicographic order of `monic_polys`.
    """
    for deg in range(1, max_degree + 1):
        for f in monic_polys(deg, p):
            if not is_irreducible(f, p):
                continue
            if all(gcd(f, g, p) == (1,) for g in coprime_to if g):
                return f
    raise ValueError(f"no irreducible of degree <= {max_degree} avoids {list(coprime_to)}")


def from_ascending(coeffs: Sequence[int], p: int) -> Poly:
    return strip(tuple(reversed(coeffs)), p)


def parse_poly(text: str, p: int) -> Poly:
    """Parse "1101" (ascending coefficients) or sparse "t^3+t+1" over GF(p).

    Either variable name `t` or `s` is accepted in sparse form.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s.isdigit():
        if p > 10:
            raise ValueError(f"coefficient strings need p <= 10, got p={p}; use sparse form")
        return from_ascending([int(ch) for ch in s], p)
    coeffs: dict[int, int] = {}
    for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
        m = _TERM.match(body)
        if m is None:
            raise ValueError(f"cannot parse polynomial term {body!r} in {text!r}")
        coef_s, var, exp_s = m.groups()
        if var is None and exp_s is not None:
            raise ValueError(f"exponent without variable in {body!r}")
        coef = int(coef_s) if coef_s else 1
        if not coef_s and var is None:
            raise ValueError(f"empty term in {text!r}")
        k = (int(exp_s) if exp_s else 1) if var else 0
        coeffs[k] = coeffs.get(k, 0) + (-coef if sign == "-" else coef)
    top = max(coeffs)
    return from_ascending([coeffs.get(k, 0) for k in range(top + 1)], p)


def format_poly(f: Poly, var: str = "t") -> str:
    """Sparse human form, highest degree first: t^3+t+1."""
    if not f:
        return "0"
    d = degree(f)
    terms = []
    for i, c in enumerate(f):
        if not c:
            continue
        k = d - i
        if k == 0:
            terms.append(str(c))
            continue
        mono = var if k == 1 else f"{var}^{k}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms)
