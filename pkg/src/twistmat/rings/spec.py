"""Ring specifications: which integral domain an element lives in."""

from dataclasses import dataclass
from typing import Literal

from sympy import factorint, isprime

from ..errors import UnsupportedSpec
from . import polynomials as P
from .polynomials import Poly

RingKind = Literal["integers", "s_integers", "quadratic", "finite_field", "poly", "localized_poly"]

PRIME_MODULUS: Poly = (1, 0)


@dataclass(frozen=True)
class RingSpec:
    """A supported base ring.

    Only the fields relevant to `kind` are meaningful; the rest keep their
    defaults so that equal rings compare and hash equal.

    kind            fields
    integers        -
    s_integers      primes (sorted)
    quadratic       d (square-free, not 0 or 1)
    finite_field    p, modulus (monic irreducible; degree 1 for the prime field)
    poly            p
    localized_poly  p, inverted (monic irreducibles), t_inverted
    """

    kind: RingKind
    p: int = 0
    modulus: Poly = ()
    d: int = 0
    primes: tuple[int, ...] = ()
    inverted: tuple[Poly, ...] = ()
    t_inverted: bool = False

    def __post_init__(self) -> None:
        if self.kind == "integers":
            return
        if self.kind == "s_integers":
            if len(set(self.primes)) != len(self.primes):
                raise UnsupportedSpec(f"repeated primes in {self.primes}")
            for q in self.primes:
                if not isprime(q):
                    raise UnsupportedSpec(f"{q} is not a prime")
            if tuple(sorted(self.primes)) != self.primes:
                raise UnsupportedSpec("primes must be sorted; use RingSpec.s_integers")
            return
        if self.kind == "quadratic":
            if self.d in (0, 1):
                raise UnsupportedSpec("quadratic ring needs d not in {0, 1}")
            if any(e > 1 for e in factorint(abs(self.d)).values()):
                raise UnsupportedSpec(f"d={self.d} is not square-free")
            return
        if self.kind in ("finite_field", "poly", "localized_poly"):
            if not isprime(self.p):
                raise UnsupportedSpec(f"characteristic {self.p} is not a prime")
        if self.kind == "finite_field":
            lc, _ = P.monic(self.modulus, self.p) if self.modulus else (0, ())
            if lc != 1 or not P.is_irreducible(self.modulus, self.p):
                raise UnsupportedSpec(f"modulus {P.format_poly(self.modulus, 's')} is not monic irreducible")
            return
        if self.kind == "poly":
            return
        if self.kind == "localized_poly":
            for f in self.inverted:
                if not f or f[0] != 1 or not P.is_irreducible(f, self.p):
                    raise UnsupportedSpec(f"inverted polynomial {P.format_poly(f)} is not monic irreducible")
                if f == (1, 0):
                    raise UnsupportedSpec("invert t through t_inverted, not as an inverted polynomial")
            if len(set(self.inverted)) != len(self.inverted):
                raise UnsupportedSpec("inverted polynomials must be pairwise coprime (distinct irreducibles)")
            return
        raise UnsupportedSpec(f"unknown ring kind {self.kind!r}")

    # Constructors

    @classmethod
    def integers(cls) -> "RingSpec":
        return cls("integers")

    @classmethod
    def s_integers(cls, primes) -> "RingSpec":
        primes = tuple(sorted(int(q) for q in primes))
        if not primes:
            return cls.integers()
        return cls("s_integers", primes=primes)

    @classmethod
    def quadratic(cls, d: int) -> "RingSpec":
        return cls("quadratic", d=int(d))

    @classmethod
    def finite_field(cls, p: int, modulus: Poly | None = None) -> "RingSpec":
        return cls("finite_field", p=int(p), modulus=tuple(modulus) if modulus else PRIME_MODULUS)

    @classmethod
    def poly(cls, p: int) -> "RingSpec":
        return cls("poly", p=int(p))

    @classmethod
    def localized_poly(cls, p: int, inverted=(), t_inverted: bool = False) -> "RingSpec":
        inverted = tuple(tuple(f) for f in inverted)
        if not inverted and not t_inverted:
            return cls.poly(p)
        return cls("localized_poly", p=int(p), inverted=inverted, t_inverted=bool(t_inverted))

    # Derived facts

    @property
    def characteristic(self) -> int:
        return self.p if self.kind in ("finite_field", "poly", "localized_poly") else 0

    @property
    def is_polynomial(self) -> bool:
        return self.kind in ("poly", "localized_poly")

    @property
    def field_degree(self) -> int:
        if self.kind != "finite_field":
            raise UnsupportedSpec(f"{self.label} is not a finite field")
        return P.degree(self.modulus)

    @property
    def order(self) -> int:
        """Number of elements of a finite field."""
        return self.p ** self.field_degree

    @property
    def generators(self) -> tuple:
        """Numerators of the inverted generators, in exponent-vector order."""
        if self.kind == "s_integers":
            return self.primes
        if self.kind == "localized_poly":
            head = ((1, 0),) if self.t_inverted else ()
            return head + self.inverted
        return ()

    @property
    def generator_labels(self) -> tuple[str, ...]:
        if self.kind == "s_integers":
            return tuple(str(q) for q in self.primes)
        if self.kind == "localized_poly":
            return tuple(P.format_poly(g) for g in self.generators)
        return ()

    @property
    def label(self) -> str:
        """Short human name, e.g. Z[1/6], F2[t,t^-1,(t^3+t+1)^-1]."""
        if self.kind == "integers":
            return "Z"
        if self.kind == "s_integers":
            prod = 1
            for q in self.primes:
                prod *= q
            return f"Z[1/{prod}]"
        if self.kind == "quadratic":
            return f"Z[sqrt({self.d})]"
        if self.kind == "finite_field":
            if self.field_degree == 1:
                return f"F{self.p}"
            return f"F{self.order}"
        if self.kind == "poly":
            return f"F{self.p}[t]"
        parts = ["t"]
        if self.t_inverted:
            parts.append("t^-1")
        parts.extend(f"({P.format_poly(f)})^-1" for f in self.inverted)
        return f"F{self.p}[{','.join(parts)}]"

    def to_json(self) -> dict:
        if self.kind == "integers":
            return {"kind": "integers"}
        if self.kind == "s_integers":
            return {"kind": "s_integers", "primes": list(self.primes)}
        if self.kind == "quadratic":
            return {"kind": "quadratic", "d": self.d}
        if self.kind == "finite_field":
            return {"kind": "finite_field", "p": self.p, "modulus": P.format_poly(self.modulus, "s")}
        if self.kind == "poly":
            return {"kind": "poly", "p": self.p}
        return {
            "kind": "localized_poly",
            "p": self.p,
            "t_inverted": self.t_inverted,
            "inverted": [P.format_poly(f) for f in self.inverted],
        }
