"""Brute-force verification on explicitly constructed modules.

For g' = sl_{n+1} realized by elementary matrices E_pq and a finite quotient
A/I, the Verma-type module M(psi) is built on PBW monomials in the lowering
generators E_qp (x) b_s (q > p, b_s a standard monomial). V(psi) is M(psi)
modulo the radical of the contravariant form defined by the transpose
anti-involution, so weight dimensions of V(psi) are Gram ranks.

Vectors are dicts ``monomial -> Fraction`` where a monomial is a
non-decreasing tuple of lowering-generator indices; ``()`` is the vacuum.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import exact
from .classify import PsiSpec
from .errors import UnsupportedOracleType
from .hwchar import CharacterTable
from .liecore import cartan_type_a, lattice_points_of_height
from .polyring import Polynomial
from .zerodim import Ideal, ReducedGroebnerBasis, buchberger, ideal_product, is_cofinite

Generator = Tuple[int, int, int]  # (row, col, basis index): E_row,col (x) b_s
Vector = Dict[Tuple[int, ...], Fraction]

VACUUM: Vector = {(): Fraction(1)}


def _add(target: Vector, src: Vector, coef=1):
    if not coef:
        return
    for m, c in src.items():
        v = target.get(m, 0) + coef * c
        if v:
            target[m] = v
        else:
            target.pop(m, None)


@dataclass(frozen=True)
class NotNilpotentUpTo:
    """Sentinel: no power up to ``bound`` killed the vector."""

    bound: int

    def __str__(self):
        return f"NotNilpotentUpTo({self.bound})"


class CurrentAlgebraModule:
    """M(psi) and V(psi) for sl_{n+1} (x) A/I with psi from a PsiSpec."""

    def __init__(self, spec: PsiSpec):
        n = spec.cartan.rank
        if spec.cartan.matrix != cartan_type_a(n).matrix:
            raise UnsupportedOracleType("the oracle realizes only type A Cartan matrices")
        self.spec = spec
        self.rank = n
        self.size = n + 1
        self.algebra = spec.algebra
        self.dim = spec.algebra.dim
        D = self.dim
        # extend psi to diagonal matrices: psi(E_pp x b) = sum_{r >= p} psi(h_r x b), E_nn -> 0
        self.diag = [[sum((spec.values[r][s] for r in range(p, n)), Fraction(0)) for s in range(D)] for p in range(n + 1)]
        self.products = [[spec.algebra.basis_product(s, t) for t in range(D)] for s in range(D)]
        roots = []
        for p in range(n + 1):
            for q in range(p + 1, n + 1):
                roots.append((tuple(int(p <= k < q) for k in range(n)), q, p))
        roots.sort(key=lambda r: (sum(r[0]), r[0]))
        self.lowering: List[Generator] = []
        self.drops: List[Tuple[int, ...]] = []
        for root, q, p in roots:
            for s in range(D):
                self.lowering.append((q, p, s))
                self.drops.append(root)
        self.low_index = {g: i for i, g in enumerate(self.lowering)}
        self._act_cache: Dict[tuple, Vector] = {}
        self._basis_cache: Dict[tuple, List[tuple]] = {}
        self._gram_cache: Dict[tuple, exact.Matrix] = {}

    # ------------------------------------------------------------ algebra

    def bracket(self, x: Generator, y: Generator) -> List[Tuple[Fraction, Generator]]:
        """[E_rc (x) b_s, E_r'c' (x) b_s'] as a combination of generators."""
        r, c, s = x
        r1, c1, s1 = y
        out = []
        for w, cw in enumerate(self.products[s][s1]):
            if not cw:
                continue
            if c == r1:
                out.append((cw, (r, c1, w)))
            if c1 == r:
                out.append((-cw, (r1, c, w)))
        return out

    @staticmethod
    def transpose(x: Generator) -> Generator:
        r, c, s = x
        return (c, r, s)

    def drop_of(self, mono: Sequence[int]) -> Tuple[int, ...]:
        d = [0] * self.rank
        for g in mono:
            for k, v in enumerate(self.drops[g]):
                d[k] += v
        return tuple(d)

    # ------------------------------------------------------------ action

    def act_generator(self, x: Generator, mono: Tuple[int, ...]) -> Vector:
        """E_rc (x) b_s applied to a PBW monomial, straightened."""
        key = (x, mono)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        r, c, s = x
        out: Vector = {}
        if not mono:
            if r > c:
                out = {(self.low_index[x],): Fraction(1)}
            elif r == c:
                val = self.diag[r][s]
                out = {(): val} if val else {}
        elif r > c and self.low_index[x] <= mono[0]:
            out = {(self.low_index[x],) + mono: Fraction(1)}
        else:
            # x f rest = f (x rest) + [x, f] rest
            first = self.lowering[mono[0]]
            rest = mono[1:]
            for m, coef in self.act_generator(x, rest).items():
                _add(out, self.act_generator(first, m), coef)
            for coef, z in self.bracket(x, first):
                _add(out, self.act_generator(z, rest), coef)
        self._act_cache[key] = out
        return out

    def act(self, x: Generator, v: Vector) -> Vector:
        out: Vector = {}
        for m, c in v.items():
            _add(out, self.act_generator(x, m), c)
        return out

    def act_element(self, row: int, col: int, coords: Sequence, v: Vector) -> Vector:
        """(E_row,col (x) a) v for a in A/I given by coordinates."""
        out: Vector = {}
        for s, a in enumerate(coords):
            if a:
                _add(out, self.act((row, col, s), v), a)
        return out

    def act_coroot(self, i: int, coords: Sequence, v: Vector) -> Vector:
        """(h_i (x) a) v with h_i = E_ii - E_{i+1,i+1}."""
        out = self.act_element(i, i, coords, v)
        _add(out, self.act_element(i + 1, i + 1, coords, v), -1)
        return out

    def simple_lowering(self, i: int) -> Tuple[int, int]:
        return (i + 1, i)

    def simple_raising(self, i: int) -> Tuple[int, int]:
        return (i, i + 1)

    # ------------------------------------------------------------ weight spaces

    def pbw_basis(self, beta: Sequence[int]) -> List[Tuple[int, ...]]:
        """PBW monomials of drop beta, sorted."""
        beta = tuple(beta)
        hit = self._basis_cache.get(beta)
        if hit is not None:
            return hit
        out = []

        def rec(start, remaining, acc):
            if not any(remaining):
                out.append(tuple(acc))
                return
            for g in range(start, len(self.lowering)):
                d = self.drops[g]
                nxt = tuple(a - b for a, b in zip(remaining, d))
                if min(nxt) < 0:
                    continue
                acc.append(g)
                rec(g, nxt, acc)
                acc.pop()

        if min(beta) >= 0:
            rec(0, beta, [])
        out.sort()
        self._basis_cache[beta] = out
        return out

    def gram(self, beta: Sequence[int]) -> exact.Matrix:
        """Contravariant form on the PBW basis at drop beta.

        <f_g u', w> = <u', e_g w>, so each Gram matrix is assembled from the
        one at beta - root(g) and the raising action.
        """
        beta = tuple(beta)
        hit = self._gram_cache.get(beta)
        if hit is not None:
            return hit
        basis = self.pbw_basis(beta)
        if not any(beta):
            g = [[Fraction(1)]]
            self._gram_cache[beta] = g
            return g
        n = len(basis)
        g = exact.zeros(n, n)
        by_first: Dict[int, List[int]] = {}
        for row, u in enumerate(basis):
            by_first.setdefault(u[0], []).append(row)
        for first, rows in by_first.items():
            lower = tuple(b - d for b, d in zip(beta, self.drops[first]))
            lower_basis = self.pbw_basis(lower)
            lower_index = {m: k for k, m in enumerate(lower_basis)}
            lower_gram = self.gram(lower)
            raise_x = self.transpose(self.lowering[first])
            for col, w in enumerate(basis):
                image = self.act_generator(raise_x, w)
                if not image:
                    continue
                for row in rows:
                    sub = lower_index[basis[row][1:]]
                    grow = lower_gram[sub]
                    val = Fraction(0)
                    for m, c in image.items():
                        val += c * grow[lower_index[m]]
                    g[row][col] = val
        self._gram_cache[beta] = g
        return g

    def weight_dimension(self, beta: Sequence[int]) -> int:
        basis = self.pbw_basis(beta)
        if not basis:
            return 0
        return exact.rank(self.gram(beta))

    def form(self, u: Vector, w: Vector) -> Fraction:
        """Contravariant pairing of two vectors (summed over common drops)."""
        total = Fraction(0)
        for beta, uc in self._split(u).items():
            wc = self._split(w).get(beta)
            if wc is None:
                continue
            g = self.gram(beta)
            for a, x in enumerate(uc):
                if x:
                    total += x * sum((g[a][b] * y for b, y in enumerate(wc) if y), Fraction(0))
        return total

    def _split(self, v: Vector) -> Dict[Tuple[int, ...], List[Fraction]]:
        parts: Dict[Tuple[int, ...], List[Fraction]] = {}
        for m, c in v.items():
            beta = self.drop_of(m)
            if beta not in parts:
                parts[beta] = [Fraction(0)] * len(self.pbw_basis(beta))
            parts[beta][self.pbw_basis(beta).index(m)] += c
        return parts

    def is_zero_in_irreducible(self, v: Vector) -> bool:
        """v lies in the radical of the form, i.e. vanishes in V(psi)."""
        for beta, coords in self._split(v).items():
            if any(exact.matvec(self.gram(beta), coords)):
                return False
        return True


def _require_module(spec_or_module) -> CurrentAlgebraModule:
    if isinstance(spec_or_module, CurrentAlgebraModule):
        return spec_or_module
    return CurrentAlgebraModule(spec_or_module)


def act(generator: Generator, v: Vector, spec) -> Vector:
    return _require_module(spec).act(generator, v)


def shapovalov_gram(spec, beta: Sequence[int]) -> exact.Matrix:
    return _require_module(spec).gram(beta)


def irreducible_character(spec, depth: int) -> CharacterTable:
    """beta -> rank of the Gram matrix, for all drops of height <= depth."""
    module = _require_module(spec)
    entries = {}
    for h in range(depth + 1):
        for beta in lattice_points_of_height(module.rank, h):
            r = module.weight_dimension(beta)
            if r:
                entries[beta] = r
    highest = tuple(module.spec.psi(i, module.algebra.one()) for i in range(module.rank))
    return CharacterTable(module.spec.cartan, highest, depth, entries)


def nilpotency_probe(spec, generator: Tuple[int, int, Sequence], start: Vector | None = None, max_power: int = 8):
    """Least k <= max_power with (E_rc (x) a)^k v = 0 in V(psi), else NotNilpotentUpTo.

    ``generator`` is ``(row, col, coords)``; coords may be a basis index.
    """
    module = _require_module(spec)
    row, col, a = generator
    if isinstance(a, int):
        a = [Fraction(int(s == a)) for s in range(module.dim)]
    v = dict(VACUUM if start is None else start)
    for k in range(max_power + 1):
        if module.is_zero_in_irreducible(v):
            return k
        if k == max_power:
            break
        v = module.act_element(row, col, a, v)
    return NotNilpotentUpTo(max_power)


@dataclass(frozen=True)
class RecoveredIdeal:
    coroot: int
    ideal: ReducedGroebnerBasis
    codimension: int
    weight_space_dim: int


@dataclass(frozen=True)
class AnnihilatorReport:
    annihilates: bool
    failure: str | None
    recovered: Tuple[RecoveredIdeal, ...]
    product: ReducedGroebnerBasis
    product_codimension: int | None
    product_kills_psi: bool


def _span_of_ideal(module: CurrentAlgebraModule, elements: Sequence[Sequence[Fraction]]):
    """Basis of the ideal of A/I generated by ``elements`` (coordinates)."""
    D = module.dim
    rows = []
    for a in elements:
        for s in range(D):
            rows.append(module.algebra.mul(a, [Fraction(int(t == s)) for t in range(D)]))
    if not rows:
        return []
    red, pivots = exact.rref(rows)
    return [red[k] for k in range(len(pivots))]


def recovered_ideals(module: CurrentAlgebraModule) -> List[RecoveredIdeal]:
    """I_i = {a : (f_i (x) a) vac = 0 in V(psi)}, lifted to A with I added."""
    spec = module.spec
    out = []
    for i in range(module.rank):
        beta = tuple(int(k == i) for k in range(module.rank))
        basis = module.pbw_basis(beta)
        g = module.gram(beta)
        # basis at a simple drop is exactly {f_i (x) b_s}; map it to coordinates in A/I
        order = [module.lowering[m[0]][2] for m in basis]
        kernel = exact.nullspace(g, len(basis))
        lifts = []
        for vec in kernel:
            coords = [Fraction(0)] * module.dim
            for k, s in enumerate(order):
                coords[s] = vec[k]
            lifts.append(module.algebra.to_poly(coords))
        gb = buchberger(Ideal(spec.ring, list(spec.gb.elements) + lifts))
        out.append(RecoveredIdeal(i, gb, is_cofinite(gb).dimension, exact.rank(g)))
    return out


def annihilator_probe(spec, candidates: Sequence, depth: int = 5) -> AnnihilatorReport:
    """Does g' (x) I0 kill V(psi) on every PBW vector of height <= depth - 1?

    ``candidates`` generate I0 inside A/I (polynomials or coordinate tuples);
    the whole ideal they span is tested, not only the listed elements.
    """
    module = _require_module(spec)
    n = module.rank
    coords = []
    for a in candidates:
        if isinstance(a, Polynomial):
            coords.append(module.algebra.coords(a))
        else:
            coords.append([Fraction(x) for x in a])
    span = _span_of_ideal(module, coords)
    operators = [(r, c) for r in range(n + 1) for c in range(n + 1) if r != c]
    failure = None
    for h in range(depth):
        for beta in lattice_points_of_height(n, h):
            for u in module.pbw_basis(beta):
                vec = {u: Fraction(1)}
                for a in span:
                    for r, c in operators:
                        if not module.is_zero_in_irreducible(module.act_element(r, c, a, vec)):
                            failure = f"E_{r + 1}{c + 1} x ({module.algebra.to_poly(a)}) on {u}"
                            break
                    else:
                        for i in range(n):
                            if not module.is_zero_in_irreducible(module.act_coroot(i, a, vec)):
                                failure = f"h{i + 1} x ({module.algebra.to_poly(a)}) on {u}"
                                break
                    if failure:
                        break
                if failure:
                    break
            if failure:
                break
        if failure:
            break

    recovered = recovered_ideals(module)
    product = None
    for rec in recovered:
        sq = ideal_product(rec.ideal, rec.ideal)
        product = sq if product is None else ideal_product(product, sq)
    product_gb = buchberger(product)
    kills = all(
        _psi_zero(module.spec, g * Polynomial.monomial(module.spec.ring, m))
        for g in product_gb.elements
        for m in module.algebra.basis
    )
    return AnnihilatorReport(
        failure is None,
        failure,
        tuple(recovered),
        product_gb,
        is_cofinite(product_gb).dimension,
        kills,
    )


def _psi_zero(spec: PsiSpec, p: Polynomial) -> bool:
    c = spec.algebra.coords(p)
    return all(spec.psi(i, c) == 0 for i in range(spec.cartan.rank))


def psi_vanishes_on_ideal(spec: PsiSpec, candidates: Sequence) -> bool:
    """psi(h' (x) I0) = 0 for the ideal I0 of A/I generated by ``candidates``."""
    elements = []
    for a in candidates:
        elements.append(spec.algebra.coords(a) if isinstance(a, Polynomial) else [Fraction(x) for x in a])
    D = spec.dim
    for a in elements:
        for s in range(D):
            b = spec.algebra.mul(a, [Fraction(int(t == s)) for t in range(D)])
            if any(spec.psi(i, b) for i in range(spec.cartan.rank)):
                return False
    return True


def verma_dimension(module: CurrentAlgebraModule, beta: Sequence[int]) -> int:
    """Independent count of PBW monomials: colored partitions of beta into positive roots."""
    n = module.rank
    roots = sorted({d for d in module.drops})
    beta = tuple(beta)
    # coefficient extraction from prod_gamma (1 - x^gamma)^(-dim A/I)
    series = {(0,) * n: 1}
    for gamma in roots:
        for _ in range(module.dim):
            nxt = dict(series)
            for point in sorted(itertools.product(*(range(b + 1) for b in beta)), key=sum):
                prev = tuple(p - g for p, g in zip(point, gamma))
                if min(prev) < 0:
                    continue
                nxt[point] = nxt.get(point, 0) + nxt.get(prev, 0)
            series = nxt
    return series.get(beta, 0)
