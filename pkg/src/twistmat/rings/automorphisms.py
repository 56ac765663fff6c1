"""Ring automorphisms: descriptors, scalar action, search and the invariant element."""

import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from ..errors import PreconditionUnmet, SpecMismatch, UnsupportedSpec
from . import polynomials as P
from .element import RingElement, _canonical, add, from_int, from_poly, inverse, is_unit, mul, power, zero
from .sampling import random_element
from .spec import RingSpec

logger = logging.getLogger(__name__)

AutKind = Literal["identity", "quad_conj", "frobenius", "monomial", "affine", "mobius"]

DEFAULT_SEARCH_BOUND = 5
HOMOMORPHISM_SAMPLES = 50
DEFAULT_SEED = 20240001


@dataclass(frozen=True)
class RingAutomorphism:
    """Descriptor of a ring automorphism.

    monomial: t -> scale * t^a f^b and f -> f_scale * t^c f^d (Laurent rings have no f;
              then b = c = 0, d = 1).
    affine:   t -> scale * t + shift on F_p[t].
    mobius:   t -> (alpha * t + beta) / (gamma * t + delta), matrix = (alpha, beta, gamma, delta).
    frobenius: x -> x^(p^power) on a finite field.
    """

    kind: AutKind = "identity"
    power: int = 0
    a: int = 1
    b: int = 0
    c: int = 0
    d: int = 1
    scale: int = 1
    f_scale: int = 1
    shift: int = 0
    matrix: tuple[int, int, int, int] = (1, 0, 0, 1)

    @property
    def determinant(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def label(self) -> str:
        if self.kind == "identity":
            return "id"
        if self.kind == "quad_conj":
            return "quad_conj"
        if self.kind == "frobenius":
            return f"frobenius^{self.power}"
        if self.kind == "affine":
            return f"t->{self.scale}*t+{self.shift}"
        if self.kind == "mobius":
            alpha, beta, gamma, delta = self.matrix
            return f"t->({alpha}*t+{beta})/({gamma}*t+{delta})"
        lam = "" if self.scale == 1 else f"{self.scale}*"
        mu = "" if self.f_scale == 1 else f"{self.f_scale}*"
        return f"t->{lam}t^{self.a}f^{self.b}, f->{mu}t^{self.c}f^{self.d}"

    def to_json(self):
        if self.kind in ("identity", "quad_conj"):
            return "id" if self.kind == "identity" else "quad_conj"
        if self.kind == "frobenius":
            return {"frobenius": self.power}
        if self.kind == "affine":
            return {"affine": [self.scale, self.shift]}
        if self.kind == "mobius":
            return {"mobius": list(self.matrix)}
        out = {"monomial": [self.a, self.b, self.c, self.d]}
        if (self.scale, self.f_scale) != (1, 1):
            out["scales"] = [self.scale, self.f_scale]
        return out


IDENTITY = RingAutomorphism()
QUADRATIC_CONJUGATION = RingAutomorphism("quad_conj")


def frobenius(power: int) -> RingAutomorphism:
    return IDENTITY if power == 0 else RingAutomorphism("frobenius", power=power)


def monomial(a: int, b: int, c: int, d: int, scale: int = 1, f_scale: int = 1) -> RingAutomorphism:
    if (a, b, c, d, scale, f_scale) == (1, 0, 0, 1, 1, 1):
        return IDENTITY
    return RingAutomorphism("monomial", a=a, b=b, c=c, d=d, scale=scale, f_scale=f_scale)


def affine(scale: int, shift: int) -> RingAutomorphism:
    if (scale, shift) == (1, 0):
        return IDENTITY
    return RingAutomorphism("affine", scale=scale, shift=shift)


def mobius(alpha: int, beta: int, gamma: int, delta: int, p: int | None = None) -> RingAutomorphism:
    """t -> (alpha*t + beta)/(gamma*t + delta).

    With p given the matrix is reduced mod p and scaled so the denominator is monic,
    which picks one representative per element of PGL2(F_p).
    """
    m = (alpha, beta, gamma, delta)
    if p is not None:
        m = tuple(v % p for v in m)
        if (m[0] * m[3] - m[1] * m[2]) % p == 0:
            raise ValueError(f"singular matrix {m} over F{p}")
        inv = pow(m[2] or m[3], -1, p)
        m = tuple(v * inv % p for v in m)
    if m == (1, 0, 0, 1):
        return IDENTITY
    return RingAutomorphism("mobius", matrix=m)


@lru_cache(maxsize=None)
def _mobius_images(desc: RingAutomorphism, spec: RingSpec) -> tuple[RingElement, tuple[RingElement, ...]] | None:
    """Images of t and of the inverted generators, or None when desc does not map spec into itself."""
    p = spec.p
    alpha, beta, gamma, delta = desc.matrix
    if (alpha * delta - beta * gamma) % p == 0:
        return None
    den = from_poly(spec, P.strip((gamma, delta), p))
    if is_unit(den) is None:
        return None
    t_image = mul(from_poly(spec, P.strip((alpha, beta), p)), inverse(den))
    images = []
    for g in spec.generators:
        image = _substitute(g, t_image)
        if is_unit(image) is None:
            return None
        images.append(image)
    return t_image, tuple(images)


def check_descriptor(desc: RingAutomorphism, spec: RingSpec) -> None:
    """Raise SpecMismatch unless desc acts on spec."""
    kind = desc.kind
    if kind == "identity":
        return
    if kind == "quad_conj" and spec.kind == "quadratic":
        return
    if kind == "frobenius" and spec.kind == "finite_field":
        return
    if kind == "affine" and spec.kind == "poly" and desc.scale % spec.p:
        return
    if kind == "monomial" and spec.kind == "localized_poly" and spec.t_inverted:
        if len(spec.inverted) == 1:
            return
        if not spec.inverted and desc.b == 0:
            return
    if kind == "mobius" and spec.is_polynomial and _mobius_images(desc, spec) is not None:
        return
    raise SpecMismatch(f"{desc.label} does not act on {spec.label}")


def _image_of_t(desc: RingAutomorphism, spec: RingSpec) -> RingElement:
    exps = (desc.a, desc.b) if spec.inverted else (desc.a,)
    return _canonical(spec, P.constant(desc.scale, spec.p), exps)


def _image_of_f(desc: RingAutomorphism, spec: RingSpec) -> RingElement:
    return _canonical(spec, P.constant(desc.f_scale, spec.p), (desc.c, desc.d))


def _substitute(coeffs: P.Poly, image: RingElement) -> RingElement:
    """Horner evaluation of a polynomial in t at a ring element."""
    spec = image.spec
    acc = zero(spec)
    for c in coeffs:
        acc = add(mul(acc, image), from_int(spec, c))
    return acc


def apply_ring_aut(desc: RingAutomorphism, x: RingElement) -> RingElement:
    spec = x.spec
    check_descriptor(desc, spec)
    kind = desc.kind
    if kind == "identity":
        return x
    if kind == "quad_conj":
        return RingElement(spec, (x.num[0], -x.num[1]), ())
    if kind == "frobenius":
        if not x.num:
            return x
        return _canonical(spec, P.power_mod(x.num, spec.p ** desc.power, spec.modulus, spec.p), ())
    if kind == "affine":
        image = P.strip((desc.scale, desc.shift), spec.p)
        return _canonical(spec, P.compose(x.num, image, spec.p), ())
    if kind == "mobius":
        t_image, gen_images = _mobius_images(desc, spec)
        out = _substitute(x.num, t_image)
        for image, e in zip(gen_images, x.exps):
            if e:
                out = mul(out, power(image, e))
        return out
    t_image = _image_of_t(desc, spec)
    out = _substitute(x.num, t_image)
    if x.exps[0]:
        out = mul(out, power(t_image, x.exps[0]))
    if spec.inverted and x.exps[1]:
        out = mul(out, power(_image_of_f(desc, spec), x.exps[1]))
    return out


def inverse_descriptor(desc: RingAutomorphism, spec: RingSpec) -> RingAutomorphism | None:
    """Inverse descriptor, or None when it has no closed form here."""
    kind = desc.kind
    if kind in ("identity", "quad_conj"):
        return desc
    if kind == "frobenius":
        return frobenius((-desc.power) % spec.field_degree)
    if kind == "affine":
        inv = pow(desc.scale, -1, spec.p)
        return affine(inv, (-desc.shift * inv) % spec.p)
    if kind == "mobius":
        alpha, beta, gamma, delta = desc.matrix
        return mobius(delta, -beta, -gamma, alpha, spec.p)
    if (desc.scale, desc.f_scale) != (1, 1) or desc.determinant not in (1, -1):
        return None
    det = desc.determinant
    return monomial(desc.d * det, -desc.b * det, -desc.c * det, desc.a * det)


def _is_homomorphism_on_samples(desc: RingAutomorphism, spec: RingSpec, rng: random.Random, samples: int) -> bool:
    for _ in range(samples):
        x = random_element(rng, spec, degree=3)
        y = random_element(rng, spec, degree=3)
        if apply_ring_aut(desc, add(x, y)) != add(apply_ring_aut(desc, x), apply_ring_aut(desc, y)):
            return False
        if apply_ring_aut(desc, mul(x, y)) != mul(apply_ring_aut(desc, x), apply_ring_aut(desc, y)):
            return False
    return True


def ring_aut_search(spec: RingSpec, bound: int = DEFAULT_SEARCH_BOUND, seed: int = DEFAULT_SEED) -> list[RingAutomorphism]:
    """Automorphisms of F_p[t, t^-1, f^-1] sending t and f to units within exponent bound B.

    For each t -> lam * t^a f^b the image f(lam t^a f^b) is computed exactly; it
    determines (mu, c, d) through its unit factorization, and the candidate survives
    when |c|, |d| <= B and ad - bc = +-1. Survivors are then checked to be ring
    homomorphisms on random pairs. The identity is always included.
    """
    if spec.kind != "localized_poly" or not spec.t_inverted or len(spec.inverted) != 1:
        raise UnsupportedSpec("ring_aut_search needs F_p[t, t^-1, f^-1] with exactly one inverted f")
    p = spec.p
    f = spec.inverted[0]
    if f == P.strip((1, -1), p):
        raise UnsupportedSpec("f = t - 1 is excluded")
    rng = random.Random(seed)
    found = [IDENTITY]
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            for lam in range(1, p):
                if (a, b, lam) == (1, 0, 1):
                    continue
                image = _canonical(spec, P.constant(lam, p), (a, b))
                fac = is_unit(_substitute(f, image))
                if fac is None:
                    continue
                c, d = fac.exponents
                if max(abs(c), abs(d)) > bound or a * d - b * c not in (1, -1):
                    continue
                desc = monomial(a, b, c, d, lam, fac.constant.num[0])
                if _is_homomorphism_on_samples(desc, spec, rng, HOMOMORPHISM_SAMPLES):
                    found.append(desc)
                else:
                    logger.warning("candidate %s satisfies the f-equation but failed sampling", desc.label)
    logger.info("ring_aut_search over %s with bound %d: %d survivors", spec.label, bound, len(found))
    return found


def ring_automorphisms(spec: RingSpec, bound: int = DEFAULT_SEARCH_BOUND) -> list[RingAutomorphism]:
    """The automorphism group of spec as a finite list, identity first."""
    kind = spec.kind
    if kind in ("integers", "s_integers"):
        return [IDENTITY]
    if kind == "quadratic":
        return [IDENTITY, QUADRATIC_CONJUGATION]
    if kind == "finite_field":
        return [frobenius(k) for k in range(spec.field_degree)]
    p = spec.p
    if kind == "poly":
        return [affine(lam, beta) for lam in range(1, p) for beta in range(p)]
    if spec.t_inverted and not spec.inverted:
        return [monomial(e, 0, 0, 1, lam) for e in (1, -1) for lam in range(1, p)]
    if spec.t_inverted and len(spec.inverted) == 1:
        return ring_aut_search(spec, bound)
    return mobius_stabilizer(spec)


def mobius_stabilizer(spec: RingSpec) -> list[RingAutomorphism]:
    """Every element of PGL2(F_p) that maps the localized ring spec onto itself, identity first.

    The F_p-automorphisms of F_p(t) are the maps t -> (at+b)/(ct+d); one of them restricts
    to an automorphism of spec exactly when it sends t into spec and every inverted
    generator to a unit.
    """
    if not spec.is_polynomial:
        raise UnsupportedSpec(f"{spec.label} is not a polynomial ring")
    p = spec.p
    found = [IDENTITY]
    for gamma, delta in [(0, 1)] + [(1, d) for d in range(p)]:
        for alpha in range(p):
            for beta in range(p):
                if (alpha * delta - beta * gamma) % p == 0:
                    continue
                desc = mobius(alpha, beta, gamma, delta, p)
                if desc != IDENTITY and _mobius_images(desc, spec) is not None:
                    found.append(desc)
    logger.info("%s has %d automorphisms", spec.label, len(found))
    return found


def fixed_transcendental(spec: RingSpec, bound: int = DEFAULT_SEARCH_BOUND) -> RingElement:
    """A non-unit x fixed by every ring automorphism: the product of all images of g.

    g is the smallest-degree monic irreducible coprime to t and the inverted f_i.
    """
    if not spec.is_polynomial:
        raise UnsupportedSpec(f"{spec.label} is not a polynomial ring")
    g = from_poly(spec, P.smallest_irreducible(spec.p, ((1, 0),) + spec.inverted))
    auts = ring_automorphisms(spec, bound)
    x = from_int(spec, 1)
    for sigma in auts:
        x = mul(x, apply_ring_aut(sigma, g))
    for sigma in auts:
        if apply_ring_aut(sigma, x) != x:
            raise PreconditionUnmet(f"{x} is moved by {sigma.label}; automorphism list is not a group")
    if is_unit(x) is not None:
        raise PreconditionUnmet(f"{x} is a unit of {spec.label}")
    return x
