"""Exact multivariate polynomials over the rationals.

Monomials are exponent tuples; the canonical term order is graded reverse
lexicographic with variables ordered as listed in the ring.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, Sequence, Tuple

from .errors import PolynomialSyntaxError, RingMismatch, UnknownVariable

Monomial = Tuple[int, ...]
Ring = Tuple[str, ...]


def grevlex_key(m: Monomial):
    """Sort key: larger key means larger in grevlex."""
    return (sum(m), tuple(-e for e in reversed(m)))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def format_monomial(m: Monomial, ring: Ring) -> str:
    parts = []
    for name, e in zip(ring, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """Immutable polynomial: ring (variable names) plus a map monomial -> nonzero Fraction."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Sequence[str], terms: Dict[Monomial, Fraction] | None = None):
        self.ring = tuple(ring)
        clean = {}
        n = len(self.ring)
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n:
                raise RingMismatch(f"monomial {m} has wrong arity for ring {self.ring}")
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
                if not clean[m]:
                    del clean[m]
        self.terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, ring):
        return cls(ring)

    @classmethod
    def constant(cls, ring, c):
        ring = tuple(ring)
        return cls(ring, {(0,) * len(ring): Fraction(c)})

    @classmethod
    def monomial(cls, ring, m: Monomial, c=1):
        return cls(ring, {tuple(m): Fraction(c)})

    @classmethod
    def var(cls, ring, name_or_index):
        ring = tuple(ring)
        i = ring.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        exps = [0] * len(ring)
        exps[i] = 1
        return cls(ring, {tuple(exps): Fraction(1)})

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def nvars(self) -> int:
        return len(self.ring)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=grevlex_key)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def sorted_terms(self):
        """Terms in decreasing canonical order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    # arithmetic
    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatch(f"rings {self.ring} and {other.ring} differ")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial(self.ring)
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.ring, {mono_mul(m, mono): v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.ring, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def eval(self, point: Sequence) -> Fraction:
        if len(point) != len(self.ring):
            raise RingMismatch(f"point of length {len(point)} for {len(self.ring)} variables")
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x ** e
            total += v
        return total

    def derivative(self, i: int = 0) -> "Polynomial":
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                d = list(m)
                d[i] -= 1
                out[tuple(d)] = c * m[i]
        return Polynomial(self.ring, out)

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute images[i] for the i-th variable."""
        if len(images) != len(self.ring):
            raise RingMismatch("need one image per variable")
        ring = images[0].ring if images else self.ring
        total = Polynomial.zero(ring)
        for m, c in self.terms.items():
            t = Polynomial.constant(ring, c)
            for img, e in zip(images, m):
                if e:
                    t = t * img ** e
            total = total + t
        return total

    def substitute_ring(self, ring, index: int) -> "Polynomial":
        """Embed a univariate polynomial into ``ring`` as a polynomial in variable ``index``."""
        if len(self.ring) != 1:
            raise RingMismatch("only univariate polynomials can be re-embedded")
        n = len(ring)
        out = {}
        for (e,), c in self.terms.items():
            m = [0] * n
            m[index] = e
            out[tuple(m)] = c
        return Polynomial(ring, out)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            mono = format_monomial(m, self.ring)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if k == 0:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, ring={self.ring})"


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p * q


def poly_eval(p: Polynomial, point: Sequence) -> Fraction:
    return p.eval(point)


def iter_monomials_in_box(bounds: Iterable[int]):
    """All exponent tuples with 0 <= e_i < bounds[i]."""
    return itertools.product(*(range(b) for b in bounds))


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def poly_parse(text: str, ring: Sequence[str]) -> Polynomial:
    """Parse ``text`` (e.g. ``"x*y - 1/2"``) into a Polynomial over ``ring``."""
    ring = tuple(ring)
    index = {name: i for i, name in enumerate(ring)}
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def take(kind=None, value=None):
        nonlocal pos
        tok = tokens[pos]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise PolynomialSyntaxError(f"expected {want}, got {got!r}", tok[2])
        pos += 1
        return tok

    def varpow(exps):
        tok = take("name")
        if tok[1] not in index:
            raise UnknownVariable(f"unknown variable {tok[1]!r} at position {tok[2]}")
        e = 1
        if peek()[1] == "^":
            take("op", "^")
            e = int(take("int")[1])
        exps[index[tok[1]]] += e

    def term():
        exps = [0] * len(ring)
        coeff = Fraction(1)
        if peek()[0] == "int":
            num = int(take("int")[1])
            den = 1
            if peek()[1] == "/":
                take("op", "/")
                tok = take("int")
                den = int(tok[1])
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", tok[2])
            coeff = Fraction(num, den)
            while peek()[1] == "*":
                take("op", "*")
                varpow(exps)
        elif peek()[0] == "name":
            varpow(exps)
            while peek()[1] == "*":
                take("op", "*")
                varpow(exps)
        else:
            tok = peek()
            raise PolynomialSyntaxError(f"expected a term, got {tok[1] or 'end of input'!r}", tok[2])
        return tuple(exps), coeff

    terms: Dict[Monomial, Fraction] = {}
    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if take("op")[1] == "-" else 1
    while True:
        m, c = term()
        terms[m] = terms.get(m, Fraction(0)) + sign * c
        tok = peek()
        if tok[0] == "end":
            break
        if tok[1] not in ("+", "-"):
            raise PolynomialSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        take("op")
        sign = -1 if tok[1] == "-" else 1
    return Polynomial(ring, terms)


def parse_monomial(text: str, ring: Sequence[str]) -> Monomial:
    """Parse a bare monomial such as ``"x*y^2"`` or ``"1"``."""
    p = poly_parse(text, ring)
    if len(p.terms) != 1 or next(iter(p.terms.values())) != 1:
        raise PolynomialSyntaxError(f"{text!r} is not a monomial", 0)
    return next(iter(p.terms))


# ---------------------------------------------------------- univariate tools


def _require_univariate(p: Polynomial):
    if len(p.ring) != 1:
        raise RingMismatch(f"expected a univariate polynomial, got ring {p.ring}")


def degree(p: Polynomial) -> int:
    _require_univariate(p)
    return p.total_degree()


def univariate_divmod(a: Polynomial, b: Polynomial):
    _require_univariate(a)
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    q = Polynomial.zero(a.ring)
    r = a
    db = degree(b)
    lb = b.terms[(db,)]
    while not r.is_zero() and degree(r) >= db:
        dr = degree(r)
        c = r.terms[(dr,)] / lb
        t = Polynomial.monomial(a.ring, (dr - db,), c)
        q = q + t
        r = r - t * b
    return q, r


def univariate_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm (zero if both are zero)."""
    while not b.is_zero():
        _, r = univariate_divmod(a, b)
        a, b = b, r
    return a.monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    """Monic p / gcd(p, p'): same roots as p, each with multiplicity one."""
    _require_univariate(p)
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial is undefined")
    g = univariate_gcd(p, p.derivative(0))
    q, r = univariate_divmod(p, g)
    assert r.is_zero()
    return q.monic()


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Polynomial):
    """Distinct rational roots of a nonzero univariate polynomial, sorted."""
    _require_univariate(p)
    if p.is_zero():
        raise ValueError("zero polynomial")
    roots = set()
    low = min(e for (e,) in p.terms)
    if low > 0:
        roots.add(Fraction(0))
    # clear denominators and strip the factor z^low
    den = 1
    for c in p.terms.values():
        den = lcm(den, c.denominator)
    coeffs = {e - low: int(c * den) for (e,), c in p.terms.items()}
    top = max(coeffs)
    if top == 0:
        return sorted(roots)
    lead, const = coeffs[top], coeffs[0]
    for num in _divisors(const):
        for dd in _divisors(lead):
            for cand in (Fraction(num, dd), Fraction(-num, dd)):
                if cand in roots:
                    continue
                # Horner in exact arithmetic
                v = Fraction(0)
                for e in range(top, -1, -1):
                    v = v * cand + coeffs.get(e, 0)
                if v == 0:
                    roots.add(cand)
    return sorted(roots)
