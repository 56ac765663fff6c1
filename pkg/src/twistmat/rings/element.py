"""Canonical ring elements and exact arithmetic.

An element is stored as numerator * prod(g_i ** e_i) where g_i are the inverted
generators of its spec and every e_i <= 0. Canonical form: whenever e_i < 0 the
numerator is not divisible by g_i, and zero has the all-zero exponent vector.
Structural equality of canonical forms is ring equality.

Numerator encoding per kind:
    integers, s_integers   int
    quadratic              (a, b) meaning a + b*sqrt(d)
    finite_field           Poly in s reduced modulo spec.modulus
    poly, localized_poly   Poly in t
"""

from dataclasses import dataclass
from typing import Any

from ..errors import DenominatorNotInvertible, NotAUnit, SpecMismatch
from . import polynomials as P
from .spec import RingSpec


@dataclass(frozen=True)
class RingElement:
    spec: RingSpec
    num: Any
    exps: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return _num_is_zero(self.spec, self.num)

    def __add__(self, other: "RingElement") -> "RingElement":
        return add(self, other)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return sub(self, other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return mul(self, other)

    def __neg__(self) -> "RingElement":
        return neg(self)

    def __pow__(self, k: int) -> "RingElement":
        return power(self, k)

    def __str__(self) -> str:
        return format_element(self)


@dataclass(frozen=True)
class UnitFactorization:
    """a = constant * prod(generator_i ** exponents_i)."""

    constant: RingElement
    exponents: tuple[int, ...]

    def expand(self) -> RingElement:
        return _from_exponents(self.constant.spec, self.constant.num, self.exponents)

    def as_dict(self) -> dict:
        labels = self.constant.spec.generator_labels
        return {"constant": str(self.constant), "exponents": dict(zip(labels, self.exponents))}


# Numerator helpers


def _zero_num(spec: RingSpec) -> Any:
    if spec.kind in ("integers", "s_integers"):
        return 0
    if spec.kind == "quadratic":
        return (0, 0)
    return ()


def _one_num(spec: RingSpec) -> Any:
    if spec.kind in ("integers", "s_integers"):
        return 1
    if spec.kind == "quadratic":
        return (1, 0)
    return (1,)


def _num_is_zero(spec: RingSpec, n: Any) -> bool:
    return n == _zero_num(spec)


def _reduce_num(spec: RingSpec, n: Any) -> Any:
    if spec.kind in ("integers", "s_integers"):
        return int(n)
    if spec.kind == "quadratic":
        return (int(n[0]), int(n[1]))
    f = P.strip(n, spec.p)
    if spec.kind == "finite_field":
        return P.rem(f, spec.modulus, spec.p)
    return f


def _num_add(spec: RingSpec, a: Any, b: Any) -> Any:
    kind = spec.kind
    if kind in ("integers", "s_integers"):
        return a + b
    if kind == "quadratic":
        return (a[0] + b[0], a[1] + b[1])
    return P.add(a, b, spec.p)


def _num_neg(spec: RingSpec, a: Any) -> Any:
    kind = spec.kind
    if kind in ("integers", "s_integers"):
        return -a
    if kind == "quadratic":
        return (-a[0], -a[1])
    return P.neg(a, spec.p)


def _num_mul(spec: RingSpec, a: Any, b: Any) -> Any:
    kind = spec.kind
    if kind in ("integers", "s_integers"):
        return a * b
    if kind == "quadratic":
        return (a[0] * b[0] + spec.d * a[1] * b[1], a[0] * b[1] + a[1] * b[0])
    if kind == "finite_field":
        return P.rem(P.mul(a, b, spec.p), spec.modulus, spec.p)
    return P.mul(a, b, spec.p)


def _num_pow(spec: RingSpec, a: Any, k: int) -> Any:
    out = _one_num(spec)
    base = a
    while k:
        if k & 1:
            out = _num_mul(spec, out, base)
        base = _num_mul(spec, base, base)
        k >>= 1
    return out


def _num_divides(spec: RingSpec, g: Any, n: Any) -> bool:
    if spec.kind == "s_integers":
        return n % g == 0
    return P.divides(g, n, spec.p)


def _num_exact_div(spec: RingSpec, n: Any, g: Any) -> Any:
    if spec.kind == "s_integers":
        return n // g
    return P.divmod_(n, g, spec.p)[0]


def _canonical(spec: RingSpec, num: Any, exps) -> RingElement:
    gens = spec.generators
    if not gens:
        return RingElement(spec, num, ())
    if _num_is_zero(spec, num):
        return RingElement(spec, num, (0,) * len(gens))
    out = list(exps)
    for i, g in enumerate(gens):
        if out[i] > 0:
            num = _num_mul(spec, num, _num_pow(spec, g, out[i]))
            out[i] = 0
        while out[i] < 0 and _num_divides(spec, g, num):
            num = _num_exact_div(spec, num, g)
            out[i] += 1
    return RingElement(spec, num, tuple(out))


def _from_exponents(spec: RingSpec, const_num: Any, xs) -> RingElement:
    return _canonical(spec, const_num, tuple(xs))


def _base_unit_inverse(spec: RingSpec, c: Any) -> Any | None:
    """Inverse of a numerator that has no inverted-generator factors, if it is a unit."""
    kind = spec.kind
    if kind in ("integers", "s_integers"):
        return c if c in (1, -1) else None
    if kind == "quadratic":
        norm = c[0] * c[0] - spec.d * c[1] * c[1]
        if norm not in (1, -1):
            return None
        return (c[0] * norm, -c[1] * norm)
    if kind == "finite_field":
        if not c:
            return None
        return P.inverse_mod(c, spec.modulus, spec.p)
    if len(c) != 1:
        return None
    return P.constant(pow(c[0], -1, spec.p), spec.p)


# Public constructors


def zero(spec: RingSpec) -> RingElement:
    return _canonical(spec, _zero_num(spec), (0,) * len(spec.generators))


def one(spec: RingSpec) -> RingElement:
    return _canonical(spec, _one_num(spec), (0,) * len(spec.generators))


def from_int(spec: RingSpec, n: int) -> RingElement:
    if spec.kind in ("integers", "s_integers"):
        num: Any = int(n)
    elif spec.kind == "quadratic":
        num = (int(n), 0)
    else:
        num = P.constant(n, spec.p)
    return _canonical(spec, num, (0,) * len(spec.generators))


def from_poly(spec: RingSpec, f) -> RingElement:
    """The polynomial f (in t, or in s for finite fields) as an element of spec."""
    if spec.kind not in ("finite_field", "poly", "localized_poly"):
        raise SpecMismatch(f"{spec.label} has no polynomial elements")
    return _canonical(spec, _reduce_num(spec, f), (0,) * len(spec.generators))


def variable(spec: RingSpec) -> RingElement:
    """t in a polynomial ring, s in an extension field."""
    return from_poly(spec, (1, 0))


def sqrt_d(spec: RingSpec) -> RingElement:
    if spec.kind != "quadratic":
        raise SpecMismatch(f"{spec.label} has no sqrt(d)")
    return RingElement(spec, (0, 1), ())


def normalize(spec: RingSpec, numerator: Any, denominator: Any = None) -> RingElement:
    """Canonical form of numerator/denominator.

    The denominator must be a product of inverted generators times a unit of
    the base ring.
    """
    num = _reduce_num(spec, numerator)
    den = _one_num(spec) if denominator is None else _reduce_num(spec, denominator)
    if _num_is_zero(spec, den):
        raise DenominatorNotInvertible("zero denominator")
    gens = spec.generators
    exps = [0] * len(gens)
    for i, g in enumerate(gens):
        while _num_divides(spec, g, den):
            den = _num_exact_div(spec, den, g)
            exps[i] -= 1
    inv = _base_unit_inverse(spec, den)
    if inv is None:
        raise DenominatorNotInvertible(f"denominator factor {den!r} is not inverted in {spec.label}")
    return _canonical(spec, _num_mul(spec, num, inv), exps)


def _check(a: RingElement, b: RingElement) -> RingSpec:
    if a.spec != b.spec:
        raise SpecMismatch(f"{a.spec.label} vs {b.spec.label}")
    return a.spec


# Arithmetic


def add(a: RingElement, b: RingElement) -> RingElement:
    spec = _check(a, b)
    gens = spec.generators
    if not gens:
        return RingElement(spec, _num_add(spec, a.num, b.num), ())
    if a.exps == b.exps:
        return _canonical(spec, _num_add(spec, a.num, b.num), a.exps)
    common = tuple(min(x, y) for x, y in zip(a.exps, b.exps))
    na, nb = a.num, b.num
    for g, x, y, c in zip(gens, a.exps, b.exps, common):
        if x > c:
            na = _num_mul(spec, na, _num_pow(spec, g, x - c))
        if y > c:
            nb = _num_mul(spec, nb, _num_pow(spec, g, y - c))
    return _canonical(spec, _num_add(spec, na, nb), common)


def neg(a: RingElement) -> RingElement:
    return RingElement(a.spec, _num_neg(a.spec, a.num), a.exps)


def sub(a: RingElement, b: RingElement) -> RingElement:
    return add(a, neg(b))


def mul(a: RingElement, b: RingElement) -> RingElement:
    spec = _check(a, b)
    if not spec.generators:
        return RingElement(spec, _num_mul(spec, a.num, b.num), ())
    return _canonical(spec, _num_mul(spec, a.num, b.num), tuple(x + y for x, y in zip(a.exps, b.exps)))


def is_unit(a: RingElement) -> UnitFactorization | None:
    """Factor a unit as constant * prod(generator ** k); None for non-units and zero."""
    spec = a.spec
    if a.is_zero:
        return None
    kind = spec.kind
    gens = spec.generators
    if kind in ("integers", "quadratic", "finite_field", "poly"):
        if _base_unit_inverse(spec, a.num) is None:
            return None
        return UnitFactorization(a, ())
    n = abs(a.num) if kind == "s_integers" else a.num
    counts = [0] * len(gens)
    for i, g in enumerate(gens):
        while _num_divides(spec, g, n):
            n = _num_exact_div(spec, n, g)
            counts[i] += 1
    if kind == "s_integers":
        if n != 1:
            return None
        const: Any = 1 if a.num > 0 else -1
    else:
        if not P.is_constant(n):
            return None
        const = n
    exps = tuple(c + e for c, e in zip(counts, a.exps))
    return UnitFactorization(_canonical(spec, const, (0,) * len(gens)), exps)


def inverse(a: RingElement) -> RingElement:
    fac = is_unit(a)
    if fac is None:
        raise NotAUnit(f"{a} is not a unit of {a.spec.label}")
    inv_c = _base_unit_inverse(a.spec, fac.constant.num)
    return _from_exponents(a.spec, inv_c, tuple(-x for x in fac.exponents))


def divide(a: RingElement, b: RingElement) -> RingElement:
    """a * b^-1 for a unit b."""
    return mul(a, inverse(b))


def power(a: RingElement, k: int) -> RingElement:
    if k < 0:
        a = inverse(a)
        k = -k
    out = one(a.spec)
    base = a
    while k:
        if k & 1:
            out = mul(out, base)
        base = mul(base, base)
        k >>= 1
    return out


# Formatting


def _format_quadratic(a: int, b: int, d: int) -> str:
    root = f"sqrt({d})"
    if b == 0:
        return str(a)
    if b == 1:
        tail = root
    elif b == -1:
        tail = f"-{root}"
    else:
        tail = f"{b}*{root}"
    if a == 0:
        return tail
    return f"{a}{tail}" if tail.startswith("-") else f"{a}+{tail}"


def format_element(a: RingElement) -> str:
    spec = a.spec
    kind = spec.kind
    if kind == "integers":
        return str(a.num)
    if kind == "s_integers":
        den = 1
        for q, e in zip(spec.primes, a.exps):
            den *= q ** (-e)
        return str(a.num) if den == 1 else f"{a.num}/{den}"
    if kind == "quadratic":
        return _format_quadratic(a.num[0], a.num[1], spec.d)
    if kind == "finite_field":
        if spec.field_degree == 1:
            return str(a.num[0]) if a.num else "0"
        return P.format_poly(a.num, "s")
    head = P.format_poly(a.num)
    if not any(a.exps):
        return head
    parts = []
    if a.num != (1,):
        parts.append(f"({head})" if "+" in head else head)
    for g, e in zip(spec.generators, a.exps):
        if e:
            gs = P.format_poly(g)
            parts.append(f"{gs}^{e}" if g == (1, 0) else f"({gs})^{e}")
    return "*".join(parts)
