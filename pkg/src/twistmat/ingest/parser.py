"""Decoding of ring specs, ring elements, group elements and automorphisms from text/JSON."""

import json
import re
from typing import Any, Mapping

from ..automorphisms.automorphism import (
    IDENTITY_AUT,
    Automorphism,
    abels3_phi,
    abels3_phi_v,
    compose,
    diag_conj,
    flip,
    inner,
    ring_induced,
)
from ..groups.element import GroupElement, diagonal_gen, elementary, identity, inverse_element, make_element, multiply
from ..groups.index_set import IndexSet
from ..groups.quotients import NONE, QuotientSpec, mod_ideal
from ..rings import polynomials as P
from ..rings.automorphisms import (
    IDENTITY,
    QUADRATIC_CONJUGATION,
    RingAutomorphism,
    affine,
    check_descriptor,
    frobenius,
    mobius,
    monomial,
)
from ..rings.element import RingElement, divide, from_int, mul, neg, power, sqrt_d, variable
from ..rings.spec import RingSpec

_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt|[ts])|([-+*/^(),;]))")


def _load(obj: Any, what: str) -> Any:
    if isinstance(obj, str):
        try:
            return json.loads(obj)
        except json.JSONDecodeError as e:
            raise ValueError(f"{what} is not valid JSON: {e}") from e
    return obj


def _int_field(obj: Mapping, key: str) -> int:
    value = obj.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"ring.{key} must be an integer")
    return value


def _poly_field(text: Any, p: int, key: str) -> P.Poly:
    if not isinstance(text, str):
        raise ValueError(f"ring.{key} must be a polynomial string")
    try:
        return P.parse_poly(text, p)
    except ValueError as e:
        raise ValueError(f"ring.{key}: {e}") from e


def parse_ring_spec(obj: Any) -> RingSpec:
    """RingSpec from a JSON object or JSON text.

    Examples: {"kind": "integers"}, {"kind": "s_integers", "primes": [2, 3]},
    {"kind": "localized_poly", "p": 2, "t_inverted": true, "inverted": ["1101"]}.
    """
    obj = _load(obj, "ring")
    if not isinstance(obj, dict):
        raise ValueError("ring must be a JSON object")
    kind = obj.get("kind")
    if kind == "integers":
        return RingSpec.integers()
    if kind == "s_integers":
        primes = obj.get("primes")
        if not isinstance(primes, list) or not all(isinstance(q, int) for q in primes):
            raise ValueError("ring.primes must be a list of integers")
        return RingSpec.s_integers(primes)
    if kind == "quadratic":
        return RingSpec.quadratic(_int_field(obj, "d"))
    if kind == "finite_field":
        p = _int_field(obj, "p")
        modulus = obj.get("modulus")
        return RingSpec.finite_field(p, _poly_field(modulus, p, "modulus") if modulus else None)
    if kind == "poly":
        return RingSpec.poly(_int_field(obj, "p"))
    if kind == "localized_poly":
        p = _int_field(obj, "p")
        inverted = obj.get("inverted", [])
        if not isinstance(inverted, list):
            raise ValueError("ring.inverted must be a list of polynomial strings")
        polys = []
        for f in inverted:
            g = _poly_field(f, p, "inverted")
            if g == (1, 0):
                raise ValueError("ring.inverted: invert t with t_inverted")
            polys.append(P.monic(g, p)[1])
        return RingSpec.localized_poly(p, polys, bool(obj.get("t_inverted", False)))
    raise ValueError(f"ring.kind must be one of integers, s_integers, quadratic, finite_field, poly, localized_poly; got {kind!r}")


class _ElementParser:
    """Recursive descent over + - * / ^ with atoms: integers, t, s, sqrt(d), (expr)."""

    def __init__(self, spec: RingSpec, text: str) -> None:
        self.spec = spec
        self.text = text
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text: str) -> list[str]:
        tokens, i = [], 0
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            m = _TOKEN.match(text, i)
            if m is None or m.end() == i:
                raise ValueError(f"unexpected character {text[i]!r} in {text!r}")
            tokens.append(next(g for g in m.groups() if g is not None))
            i = m.end()
        return tokens

    def _peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self, expected: str | None = None) -> str:
        tok = self._peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected or 'a term'} in {self.text!r}")
        self.pos += 1
        return tok

    def parse(self) -> RingElement:
        value = self._expr()
        if self._peek() is not None:
            raise ValueError(f"unexpected {self._peek()!r} in {self.text!r}")
        return value

    def _expr(self) -> RingElement:
        sign = None
        if self._peek() in ("+", "-"):
            sign = self._take()
        value = self._term()
        if sign == "-":
            value = neg(value)
        while self._peek() in ("+", "-"):
            op = self._take()
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> RingElement:
        value = self._factor()
        while True:
            tok = self._peek()
            if tok == "*":
                self._take()
                value = mul(value, self._factor())
            elif tok == "/":
                self._take()
                value = divide(value, self._factor())
            elif tok is not None and (tok.isdigit() or tok in ("t", "s", "sqrt", "(")):
                value = mul(value, self._factor())
            else:
                return value

    def _factor(self) -> RingElement:
        if self._peek() == "-":
            self._take()
            return neg(self._factor())
        base = self._atom()
        if self._peek() == "^":
            self._take()
            negative = False
            if self._peek() == "-":
                self._take()
                negative = True
            k = self._take()
            if not k.isdigit():
                raise ValueError(f"exponent must be an integer in {self.text!r}")
            return power(base, -int(k) if negative else int(k))
        return base

    def _atom(self) -> RingElement:
        tok = self._take()
        spec = self.spec
        if tok.isdigit():
            return from_int(spec, int(tok))
        if tok == "(":
            value = self._expr()
            self._take(")")
            return value
        if tok == "t":
            if not spec.is_polynomial:
                raise ValueError(f"{spec.label} has no variable t")
            return variable(spec)
        if tok == "s":
            if spec.kind != "finite_field":
                raise ValueError(f"{spec.label} has no field generator s")
            return variable(spec)
        if tok == "sqrt":
            self._take("(")
            negative = self._peek() == "-"
            if negative:
                self._take()
            d = int(self._take())
            self._take(")")
            if spec.kind != "quadratic" or spec.d != (-d if negative else d):
                raise ValueError(f"sqrt({'-' if negative else ''}{d}) is not in {spec.label}")
            return sqrt_d(spec)
        raise ValueError(f"unexpected {tok!r} in {self.text!r}")


def parse_element(spec: RingSpec, text: Any) -> RingElement:
    """Ring element from text such as "(t+1)*t^-2", "5/6", "1+2*sqrt(2)"."""
    if isinstance(text, int) and not isinstance(text, bool):
        return from_int(spec, text)
    if not isinstance(text, str) or not text.strip():
        raise ValueError(f"ring element must be a non-empty string, got {text!r}")
    return _ElementParser(spec, text).parse()


def parse_index_set(n: int, members: Any) -> IndexSet:
    """IndexSet from "2,3", "{2,3}", "" or a list of integers."""
    if isinstance(members, str):
        body = members.strip().strip("{}")
        try:
            members = [int(s) for s in body.split(",") if s.strip()]
        except ValueError:
            raise ValueError(f"index set must be a comma list of integers, got {members!r}") from None
    return IndexSet.of(n, members)


def parse_quotient(obj: Any, ring: RingSpec | None = None) -> QuotientSpec:
    """QuotientSpec from "mod_commutator_u", {"quotient": ...} or {"mod_ideal": 5}."""
    if obj is None:
        return NONE
    if isinstance(obj, str):
        if obj.strip().startswith("{"):
            return parse_quotient(_load(obj, "quotient"), ring)
        return QuotientSpec(obj)
    if not isinstance(obj, dict):
        raise ValueError("quotient must be a string or an object")
    if "mod_ideal" in obj or obj.get("quotient") == "mod_ideal":
        modulus = obj.get("mod_ideal", obj.get("modulus"))
        if isinstance(modulus, int) and not isinstance(modulus, bool):
            return mod_ideal(modulus)
        if isinstance(modulus, str):
            if modulus.isdigit() and (ring is None or not ring.is_polynomial):
                return mod_ideal(int(modulus))
            if ring is None or not ring.is_polynomial:
                raise ValueError("a polynomial modulus needs a polynomial ring")
            return mod_ideal(P.parse_poly(modulus, ring.p))
        raise ValueError("quotient.mod_ideal must be a prime or a polynomial string")
    kind = obj.get("quotient")
    if not isinstance(kind, str):
        raise ValueError("quotient object needs a 'quotient' key")
    return QuotientSpec(kind)


def _position(key: str) -> tuple[int, int]:
    try:
        i, j = (int(s) for s in key.split(","))
    except ValueError:
        raise ValueError(f"matrix position must look like '1,2', got {key!r}") from None
    return i, j


def parse_group_element(ix: IndexSet, ring: RingSpec, obj: Any) -> GroupElement:
    """GroupElement from {"diag": [...], "upper": {"1,2": "r"}} or a word string.

    `upper` holds the entries of the unipotent factor U in g = U * D.
    """
    if isinstance(obj, str):
        if obj.strip().startswith("{"):
            return parse_group_element(ix, ring, _load(obj, "group element"))
        return parse_word(ix, ring, obj)
    if not isinstance(obj, dict):
        raise ValueError("group element must be an object or a word")
    upper = obj.get("upper", {})
    if not isinstance(upper, dict):
        raise ValueError("group element 'upper' must be an object")
    entries = {_position(k): parse_element(ring, v) for k, v in upper.items()}
    diag = obj.get("diag")
    diagonal = None if diag is None else [parse_element(ring, u) for u in diag]
    return make_element(ix, ring, entries, diagonal)


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:k])
            start = k + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


_LETTER = re.compile(r"^([ed])\((.*)\)(?:\^(-?\d+))?$")


def parse_word(ix: IndexSet, ring: RingSpec, text: str) -> GroupElement:
    """Product of generators, e.g. "e(1,2;t+1)*d(2;t^-1)" or "e(1,3;1)^-1"."""
    g = identity(ix, ring)
    if text.strip() in ("", "1", "id"):
        return g
    for letter in _split_top(text, "*"):
        m = _LETTER.match(letter)
        if m is None:
            raise ValueError(f"cannot parse generator {letter!r}")
        name, args, exp = m.groups()
        head, _, value = args.partition(";")
        if not value:
            raise ValueError(f"generator {letter!r} needs 'indices;value'")
        indices = [int(s) for s in head.split(",")]
        r = parse_element(ring, value)
        if name == "e":
            if len(indices) != 2:
                raise ValueError(f"e(i,j;r) needs two indices, got {letter!r}")
            x = elementary(ix, ring, indices[0], indices[1], r)
        else:
            if len(indices) != 1:
                raise ValueError(f"d(i;u) needs one index, got {letter!r}")
            x = diagonal_gen(ix, ring, indices[0], r)
        k = int(exp) if exp else 1
        step = x if k > 0 else inverse_element(x)
        for _ in range(abs(k)):
            g = multiply(g, step)
    return g


def _matrix(value: Any) -> tuple[int, int, int, int]:
    if not isinstance(value, (list, tuple)) or len(value) != 4:
        raise ValueError(f"mobius needs four integers [alpha, beta, gamma, delta], got {value!r}")
    return tuple(int(v) for v in value)


def parse_ring_automorphism(obj: Any) -> RingAutomorphism:
    """Descriptor from "id", "quad_conj", {"frobenius": k}, {"affine": [scale, shift]},
    {"mobius": [alpha, beta, gamma, delta]}, {"monomial": [a, b, c, d], "scales": [lam, mu]}
    or {"kind": ..., field: ...}."""
    if isinstance(obj, str):
        text = obj.strip()
        if text.startswith("{"):
            return parse_ring_automorphism(_load(text, "ring automorphism"))
        if text in ("id", "identity"):
            return IDENTITY
        if text in ("quad_conj", "conj"):
            return QUADRATIC_CONJUGATION
        raise ValueError(f"unknown ring automorphism {obj!r}")
    if not isinstance(obj, dict):
        raise ValueError("ring automorphism must be a string or an object")
    if "kind" in obj:
        kind = obj["kind"]
        if kind in ("identity", "quad_conj"):
            return IDENTITY if kind == "identity" else QUADRATIC_CONJUGATION
        if kind == "frobenius":
            return frobenius(int(obj.get("power", 1)))
        if kind == "affine":
            return affine(int(obj.get("scale", 1)), int(obj.get("shift", 0)))
        if kind == "mobius":
            return mobius(*_matrix(obj.get("matrix")))
        if kind == "monomial":
            return monomial(*(int(obj.get(k, v)) for k, v in (("a", 1), ("b", 0), ("c", 0), ("d", 1),
                                                               ("scale", 1), ("f_scale", 1))))
        raise ValueError(f"unknown ring automorphism kind {kind!r}")
    if "frobenius" in obj:
        return frobenius(int(obj["frobenius"]))
    if "affine" in obj:
        scale, shift = obj["affine"]
        return affine(int(scale), int(shift))
    if "mobius" in obj:
        return mobius(*_matrix(obj["mobius"]))
    if "monomial" in obj:
        a, b, c, d = (int(v) for v in obj["monomial"])
        scale, f_scale = obj.get("scales", [1, 1])
        return monomial(a, b, c, d, int(scale), int(f_scale))
    raise ValueError(f"cannot parse ring automorphism {obj!r}")


def _atom_automorphism(ix: IndexSet, ring: RingSpec, atom: Mapping) -> Automorphism:
    name = atom.get("atom")
    if name == "identity":
        return IDENTITY_AUT
    if name == "flip":
        return flip()
    if name == "inner":
        return inner(parse_group_element(ix, ring, atom.get("g", "1")))
    if name == "diag_conj":
        d = atom.get("d")
        if not isinstance(d, list) or len(d) != ix.n:
            raise ValueError(f"diag_conj needs a list 'd' of {ix.n} units")
        return diag_conj(parse_element(ring, u) for u in d)
    if name == "ring":
        desc = parse_ring_automorphism(atom.get("desc", "id"))
        check_descriptor(desc, ring)
        return ring_induced(desc)
    if name == "abels3_phi":
        return abels3_phi()
    if name == "abels3_phi_v":
        return abels3_phi_v(parse_element(ring, atom.get("v", "")))
    raise ValueError(f"unknown automorphism atom {name!r}")


def parse_automorphism(ix: IndexSet, ring: RingSpec, atoms: Any) -> Automorphism:
    """Automorphism from a JSON atom list, leftmost atom applied last."""
    atoms = _load(atoms, "automorphism")
    if isinstance(atoms, dict):
        atoms = [atoms]
    if not isinstance(atoms, list):
        raise ValueError("automorphism must be a list of atoms")
    phi = IDENTITY_AUT
    for atom in atoms:
        if not isinstance(atom, dict):
            raise ValueError(f"automorphism atom must be an object, got {atom!r}")
        phi = compose(phi, _atom_automorphism(ix, ring, atom))
    return phi
