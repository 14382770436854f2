"""Groebner bases and zero-dimensional (cofinite) ideals.

Everything is computed under the grevlex order of :mod:`currentkm.polyring`,
so reduced bases, standard monomials and point lists are canonical.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, NamedTuple, Sequence, Tuple

from . import exact
from .errors import NonRationalPoint, NotCofinite, RingMismatch
from .polyring import (
    Monomial,
    Polynomial,
    divides,
    format_monomial,
    grevlex_key,
    mono_div,
    mono_lcm,
    rational_roots,
    squarefree_part,
)

MINPOLY_RING = ("z",)


@dataclass(frozen=True)
class Ideal:
    ring: Tuple[str, ...]
    generators: Tuple[Polynomial, ...]

    def __init__(self, ring, generators):
        ring = tuple(ring)
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatch(f"generator {g} is not in ring {ring}")
            if not g.is_zero():
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


@dataclass(frozen=True)
class ReducedGroebnerBasis:
    """Monic reduced basis, elements sorted by increasing leading monomial."""

    ring: Tuple[str, ...]
    elements: Tuple[Polynomial, ...]

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial() for g in self.elements]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.elements)

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.elements)

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero()

    def __str__(self):
        return "{" + ", ".join(str(g) for g in self.elements) + "}"


class Cofiniteness(NamedTuple):
    cofinite: bool
    dimension: int | None


# ------------------------------------------------------------ reduction


def _heap_key(m: Monomial):
    # heapq is a min-heap, so negate the grevlex key
    return (-sum(m), tuple(reversed(m)))


def _reduce_terms(terms: Dict[Monomial, Fraction], basis) -> Dict[Monomial, Fraction]:
    """Full reduction of a term map by ``basis`` = [(lm, monic terms)]."""
    p = dict(terms)
    heap = [(_heap_key(m), m) for m in p]
    heapq.heapify(heap)
    rem: Dict[Monomial, Fraction] = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue  # stale entry: cancelled or already handled
        for lm, g in basis:
            if divides(lm, m):
                shift = mono_div(m, lm)
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    t = tuple(a + b for a, b in zip(gm, shift))
                    old = p.get(t)
                    v = (old or 0) - c * gc
                    if v:
                        if old is None:
                            heapq.heappush(heap, (_heap_key(t), t))
                        p[t] = v
                    elif old is not None:
                        del p[t]
                break
        else:
            rem[m] = c
    return rem


def _as_basis(polys):
    out = []
    for g in polys:
        g = g.monic()
        out.append((g.leading_monomial(), g.terms))
    return out


def normal_form(p: Polynomial, gb: ReducedGroebnerBasis) -> Polynomial:
    """Remainder of ``p`` on full reduction by ``gb``."""
    if p.ring != gb.ring:
        raise RingMismatch(f"rings {p.ring} and {gb.ring} differ")
    return Polynomial(p.ring, _reduce_terms(p.terms, _as_basis(gb.elements)))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    l = mono_lcm(lf, lg)
    return f.mul_term(mono_div(l, lf), 1 / f.leading_coefficient()) - g.mul_term(
        mono_div(l, lg), 1 / g.leading_coefficient()
    )


def _interreduce(polys: List[Polynomial]) -> List[Polynomial]:
    polys = [p.monic() for p in polys if not p.is_zero()]
    # keep minimal leading monomials (first occurrence on ties)
    polys.sort(key=lambda p: grevlex_key(p.leading_monomial()))
    minimal = []
    for p in polys:
        lm = p.leading_monomial()
        if not any(divides(q.leading_monomial(), lm) for q in minimal):
            minimal.append(p)
    reduced = []
    for i, p in enumerate(minimal):
        others = _as_basis(minimal[:i] + minimal[i + 1:])
        reduced.append(Polynomial(p.ring, _reduce_terms(p.terms, others)).monic())
    reduced.sort(key=lambda p: grevlex_key(p.leading_monomial()))
    return reduced


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def buchberger(ideal: Ideal) -> ReducedGroebnerBasis:
    """Reduced Groebner basis.

    Normal selection strategy with the Gebauer-Moeller pair update, which
    applies the product and chain criteria and drops redundant elements.
    """
    ring = ideal.ring
    gens = [g.monic() for g in ideal.generators if not g.is_zero()]
    if not gens:
        return ReducedGroebnerBasis(ring, ())
    if any(g.is_constant() for g in gens):
        return ReducedGroebnerBasis(ring, (Polynomial.constant(ring, 1),))
    gens = sorted(dict.fromkeys(gens), key=lambda g: grevlex_key(g.leading_monomial()))

    polys: List[Polynomial] = []  # every element ever added, by index
    lms: List[Monomial] = []
    active: List[int] = []  # indices of the current (non-redundant) basis
    pairs: Dict[Tuple[int, int], Monomial] = {}
    heap: list = []

    def add(h: Polynomial):
        k = len(polys)
        polys.append(h)
        lh = h.leading_monomial()
        lms.append(lh)
        lcms = {g: mono_lcm(lh, lms[g]) for g in active}
        # chain criterion on the new pairs; coprime pairs survive it so that
        # they can still shadow others, then the product criterion drops them
        cands = list(active)
        keep = []
        for idx, g in enumerate(cands):
            if _coprime(lh, lms[g]) or not any(divides(lcms[o], lcms[g]) for o in cands[idx + 1:] + keep):
                keep.append(g)
        fresh = [g for g in keep if not _coprime(lh, lms[g])]
        # old pairs made redundant by the new leading monomial
        for (a, b), l in list(pairs.items()):
            if divides(lh, l) and mono_lcm(lms[a], lh) != l and mono_lcm(lms[b], lh) != l:
                del pairs[(a, b)]
        for g in fresh:
            pairs[(g, k)] = lcms[g]
            heapq.heappush(heap, (grevlex_key(lcms[g]), g, k))
        active[:] = [g for g in active if not divides(lh, lms[g])] + [k]

    for g in gens:
        r = Polynomial(ring, _reduce_terms(g.terms, [(lms[a], polys[a].terms) for a in active])) if active else g
        if r.is_zero():
            continue
        if r.is_constant():
            return ReducedGroebnerBasis(ring, (Polynomial.constant(ring, 1),))
        add(r.monic())

    while heap:
        _, i, j = heapq.heappop(heap)
        if pairs.pop((i, j), None) is None:
            continue
        s = s_polynomial(polys[i], polys[j])
        r = Polynomial(ring, _reduce_terms(s.terms, [(lms[a], polys[a].terms) for a in active]))
        if r.is_zero():
            continue
        if r.is_constant():
            return ReducedGroebnerBasis(ring, (Polynomial.constant(ring, 1),))
        add(r.monic())
    return ReducedGroebnerBasis(ring, tuple(_interreduce([polys[a] for a in active])))


def is_groebner(gb: ReducedGroebnerBasis) -> bool:
    """Buchberger certificate: every S-polynomial reduces to zero."""
    for f, g in itertools.combinations(gb.elements, 2):
        if not normal_form(s_polynomial(f, g), gb).is_zero():
            return False
    return True


# ------------------------------------------------------------ cofiniteness


def _pure_power_bounds(gb: ReducedGroebnerBasis):
    n = len(gb.ring)
    bounds: List[int | None] = [None] * n
    for lm in gb.leading_monomials:
        support = [i for i, e in enumerate(lm) if e]
        if not support:
            return [0] * n
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or lm[i] < bounds[i]:
                bounds[i] = lm[i]
    return bounds


def standard_monomials(gb: ReducedGroebnerBasis) -> List[Monomial]:
    bounds = _pure_power_bounds(gb)
    if any(b is None for b in bounds):
        raise NotCofinite(f"ideal {gb} is not zero-dimensional")
    lms = gb.leading_monomials
    out = [m for m in itertools.product(*(range(b) for b in bounds)) if not any(divides(l, m) for l in lms)]
    out.sort(key=grevlex_key)
    return out


def is_cofinite(gb: ReducedGroebnerBasis) -> Cofiniteness:
    bounds = _pure_power_bounds(gb)
    if any(b is None for b in bounds):
        return Cofiniteness(False, None)
    return Cofiniteness(True, len(standard_monomials(gb)))


@dataclass(frozen=True, eq=False)
class QuotientAlgebra:
    """A/I in the standard-monomial basis, with one multiplication matrix per variable.

    ``matrices[i][r][c]`` is the coefficient of basis[r] in x_i * basis[c].
    """

    gb: ReducedGroebnerBasis
    basis: Tuple[Monomial, ...]
    matrices: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]
    _table: list = field(repr=False)

    @property
    def ring(self):
        return self.gb.ring

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, m: Monomial) -> int:
        return self.basis.index(tuple(m))

    def basis_labels(self) -> List[str]:
        return [format_monomial(m, self.ring) for m in self.basis]

    def coords(self, p: Polynomial) -> List[Fraction]:
        r = normal_form(p, self.gb)
        v = [Fraction(0)] * self.dim
        for m, c in r.terms.items():
            v[self.basis.index(m)] = c
        return v

    def to_poly(self, v: Sequence) -> Polynomial:
        return Polynomial(self.ring, {m: c for m, c in zip(self.basis, v) if c})

    def basis_product(self, s: int, t: int) -> List[Fraction]:
        """Coordinates of basis[s] * basis[t]."""
        return self._table[s][t]

    def mul(self, u: Sequence, v: Sequence) -> List[Fraction]:
        out = [Fraction(0)] * self.dim
        for s, a in enumerate(u):
            if not a:
                continue
            for t, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for w, c in enumerate(self._table[s][t]):
                    if c:
                        out[w] += ab * c
        return out

    def one(self) -> List[Fraction]:
        return self.coords(Polynomial.constant(self.ring, 1))

    def element_matrix(self, v: Sequence) -> exact.Matrix:
        """Matrix of multiplication by the element with coordinates v."""
        n = self.dim
        m = exact.zeros(n, n)
        for c in range(n):
            col = self.mul(v, [Fraction(int(k == c)) for k in range(n)])
            for r in range(n):
                m[r][c] = col[r]
        return m


def quotient_algebra(gb: ReducedGroebnerBasis) -> QuotientAlgebra:
    basis = tuple(standard_monomials(gb))
    ring = gb.ring
    n = len(basis)
    idx = {m: i for i, m in enumerate(basis)}
    gbasis = _as_basis(gb.elements)

    def coords_of_monomial(m):
        v = [Fraction(0)] * n
        for mm, c in _reduce_terms({m: Fraction(1)}, gbasis).items():
            v[idx[mm]] = c
        return v

    table = [[None] * n for _ in range(n)]
    for s in range(n):
        for t in range(s, n):
            prod = tuple(a + b for a, b in zip(basis[s], basis[t]))
            table[s][t] = table[t][s] = coords_of_monomial(prod)
    matrices = []
    for i in range(len(ring)):
        cols = []
        for m in basis:
            shifted = list(m)
            shifted[i] += 1
            cols.append(coords_of_monomial(tuple(shifted)))
        matrices.append(tuple(tuple(cols[c][r] for c in range(n)) for r in range(n)))
    return QuotientAlgebra(gb, basis, tuple(matrices), table)


def minimal_polynomial_of_matrix(m: Sequence[Sequence[Fraction]]) -> Polynomial:
    """Monic least-degree polynomial killing ``m`` (linear dependence of powers)."""
    n = len(m)
    powers = [exact.identity(n)]
    flat = [[x for row in powers[0] for x in row]]
    while True:
        nxt = exact.matmul(powers[-1], m) if n else []
        target = [x for row in nxt for x in row]
        # solve sum_k c_k M^k = M^d
        cols = list(zip(*flat)) if flat[0] else []
        sol = exact.solve([list(r) for r in cols], target) if cols else []
        if sol is not None:
            d = len(flat)
            terms = {(d,): Fraction(1)}
            for k, c in enumerate(sol):
                if c:
                    terms[(k,)] = -c
            return Polynomial(MINPOLY_RING, terms)
        powers.append(nxt)
        flat.append(target)


def minimal_polynomial(q: QuotientAlgebra, var_index: int) -> Polynomial:
    if not 0 <= var_index < len(q.ring):
        raise IndexError(f"variable index {var_index} out of range")
    return minimal_polynomial_of_matrix(q.matrices[var_index])


def radical_zero_dim(gb: ReducedGroebnerBasis) -> ReducedGroebnerBasis:
    """sqrt(I) for cofinite I: add squarefree parts of each variable's minimal polynomial."""
    if not is_cofinite(gb).cofinite:
        raise NotCofinite(f"ideal {gb} is not zero-dimensional")
    if gb.is_unit():
        return gb
    q = quotient_algebra(gb)
    extra = []
    for i in range(len(gb.ring)):
        s = squarefree_part(minimal_polynomial(q, i))
        extra.append(s.substitute_ring(gb.ring, i))
    return buchberger(Ideal(gb.ring, list(gb.elements) + extra))


def _generators(x):
    if isinstance(x, ReducedGroebnerBasis):
        return x.ring, x.elements
    return x.ring, x.generators


def ideal_product(a, b) -> Ideal:
    """Ideal generated by all pairwise products of generators."""
    ra, ga = _generators(a)
    rb, gb_ = _generators(b)
    if ra != rb:
        raise RingMismatch(f"rings {ra} and {rb} differ")
    return Ideal(ra, [f * g for f in ga for g in gb_])


def maximal_points(radical_gb: ReducedGroebnerBasis) -> List[Tuple[Fraction, ...]]:
    """Rational points of a radical cofinite ideal, sorted lexicographically."""
    q = quotient_algebra(radical_gb)
    if q.dim == 0:
        return []
    candidates = [rational_roots(minimal_polynomial(q, i)) for i in range(len(q.ring))]
    points = [
        pt for pt in itertools.product(*candidates) if all(g.eval(pt) == 0 for g in radical_gb.elements)
    ]
    if len(points) < q.dim:
        raise NonRationalPoint(
            f"only {len(points)} rational points for a radical ideal of codimension {q.dim}: "
            f"some residue field is larger than Q"
        )
    return sorted(points)


def crt_idempotents(q: QuotientAlgebra, points: Sequence[Sequence[Fraction]]) -> List[Tuple[Fraction, ...]]:
    """Coordinates of e_j in A/J with e_j(point_m) = delta_jm, in the order of ``points``."""
    k = len(points)
    if k != q.dim:
        raise ValueError(f"{k} points for a quotient of dimension {q.dim}")
    vander = [
        [Polynomial.monomial(q.ring, m).eval(pt) for m in q.basis] for pt in points
    ]
    try:
        inv = exact.inverse(vander)
    except ZeroDivisionError as exc:
        raise ValueError("evaluation matrix is singular; points do not match the ideal") from exc
    return [tuple(inv[s][j] for s in range(k)) for j in range(k)]


def vanishing_ideal(ring: Sequence[str], points: Sequence[Sequence]) -> ReducedGroebnerBasis:
    """Radical ideal of a finite set of distinct rational points (product of maximal ideals)."""
    ring = tuple(ring)
    result = ReducedGroebnerBasis(ring, (Polynomial.constant(ring, 1),))
    for pt in dict.fromkeys(tuple(Fraction(x) for x in p) for p in points):
        m = Ideal(ring, [Polynomial.var(ring, i) - c for i, c in enumerate(pt)])
        result = buchberger(ideal_product(result, m))
    return result
