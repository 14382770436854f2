"""Generalized Cartan matrices, root multiplicities and weights.

Weights are stored only through their pairings with the simple coroots and
roots through simple-root coordinates, so nothing here depends on a choice
of realization of the Cartan subalgebra.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, List, Sequence, Tuple

from . import exact
from .errors import NotDominant, NotFiniteType, NotGCM, NotSymmetrizable

Root = Tuple[int, ...]
Weight = Tuple[Fraction, ...]

FINITE, AFFINE, INDEFINITE = "finite", "affine", "indefinite"


@dataclass(frozen=True)
class CartanData:
    matrix: Tuple[Tuple[int, ...], ...]
    symmetrizer: Tuple[Fraction, ...]
    kind: str
    _roots: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def symmetrized(self) -> List[List[Fraction]]:
        """B = D A, i.e. B[i][j] = (alpha_i, alpha_j)."""
        return [[self.symmetrizer[i] * a for a in row] for i, row in enumerate(self.matrix)]

    def reflect(self, i: int, beta: Sequence[int]) -> Root:
        """Simple reflection s_i on a root-lattice element."""
        shift = sum(self.matrix[i][j] * b for j, b in enumerate(beta))
        out = list(beta)
        out[i] -= shift
        return tuple(out)


def _components(a) -> List[List[int]]:
    n = len(a)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and (a[i][j] or a[j][i]):
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _block_kind(b, comp) -> str:
    sub = [[b[i][j] for j in comp] for i in comp]
    proper_positive = all(
        exact.det([[sub[i][j] for j in idx] for i in idx]) > 0
        for r in range(1, len(comp))
        for idx in itertools.combinations(range(len(comp)), r)
    )
    d = exact.det(sub)
    if proper_positive and d > 0:
        return FINITE
    if proper_positive and d == 0:
        return AFFINE
    return INDEFINITE


def validate_gcm(matrix: Sequence[Sequence[int]]) -> CartanData:
    n = len(matrix)
    a = []
    for row in matrix:
        if len(row) != n:
            raise NotGCM("Cartan matrix must be square")
        for x in row:
            if int(x) != x:
                raise NotGCM(f"entry {x} is not an integer")
        a.append(tuple(int(x) for x in row))
    for i in range(n):
        if a[i][i] != 2:
            raise NotGCM(f"diagonal entry a[{i}][{i}] = {a[i][i]} != 2")
        for j in range(n):
            if i == j:
                continue
            if a[i][j] > 0:
                raise NotGCM(f"off-diagonal entry a[{i}][{j}] = {a[i][j]} is positive")
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise NotGCM(f"a[{i}][{j}] = {a[i][j]} but a[{j}][{i}] = {a[j][i]}")

    d: List[Fraction | None] = [None] * n
    for comp in _components(a):
        root = comp[0]
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in comp:
                if j == i or a[i][j] == 0:
                    continue
                want = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    raise NotSymmetrizable(f"no symmetrizer: cycle through {i}, {j} is inconsistent")
        # smallest positive integers on this component
        den = lcm(*(d[i].denominator for i in comp))
        nums = [int(d[i] * den) for i in comp]
        g = 0
        for x in nums:
            g = gcd(g, x)
        for i, x in zip(comp, nums):
            d[i] = Fraction(x // g)

    sym = [[d[i] * a[i][j] for j in range(n)] for i in range(n)]
    kinds = [_block_kind(sym, comp) for comp in _components(a)]
    if all(k == FINITE for k in kinds):
        kind = FINITE
    elif all(k in (FINITE, AFFINE) for k in kinds):
        kind = AFFINE
    else:
        kind = INDEFINITE
    return CartanData(tuple(a), tuple(d), kind)


def cartan_type_a(n: int) -> CartanData:
    return validate_gcm([[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)])


def symmetric_form(c: CartanData, x: Sequence, y: Sequence) -> Fraction:
    """(x, y) for root-lattice coordinates x, y."""
    if len(x) != c.rank or len(y) != c.rank:
        raise ValueError("coordinate length does not match the rank")
    total = Fraction(0)
    for i, xi in enumerate(x):
        if not xi:
            continue
        di = c.symmetrizer[i]
        row = c.matrix[i]
        for j, yj in enumerate(y):
            if yj and row[j]:
                total += xi * yj * di * row[j]
    return total


def weight_pairing(c: CartanData, weight: Sequence, beta: Sequence) -> Fraction:
    """(lambda, beta) for a weight given by its coroot values lambda(h_i)."""
    return sum((Fraction(w) * c.symmetrizer[i] * b for i, (w, b) in enumerate(zip(weight, beta))), Fraction(0))


def rho_pairing(c: CartanData, beta: Sequence) -> Fraction:
    """(rho, beta) with rho(h_i) = 1."""
    return sum((c.symmetrizer[i] * b for i, b in enumerate(beta)), Fraction(0))


def height(beta: Sequence[int]) -> int:
    return sum(beta)


def lattice_points_of_height(rank: int, h: int):
    """All non-negative integer tuples of length ``rank`` summing to ``h``."""
    if rank == 0:
        if h == 0:
            yield ()
        return
    if rank == 1:
        yield (h,)
        return
    for first in range(h, -1, -1):
        for rest in lattice_points_of_height(rank - 1, h - first):
            yield (first,) + rest


@dataclass(frozen=True)
class RootTable:
    bound: int
    multiplicities: Dict[Root, int]

    def __contains__(self, beta):
        return tuple(beta) in self.multiplicities

    def __getitem__(self, beta) -> int:
        return self.multiplicities.get(tuple(beta), 0)

    def __iter__(self):
        return iter(self.multiplicities)

    def __len__(self):
        return len(self.multiplicities)

    def items(self):
        return self.multiplicities.items()

    def of_height(self, h: int):
        return [b for b in self.multiplicities if sum(b) == h]


class _PetersonState:
    """Memo for the Peterson recursion, extended one height at a time."""

    def __init__(self, c: CartanData):
        self.c = c
        self.height = 1
        n = c.rank
        self.mult: Dict[Root, int] = {}
        self.cbeta: Dict[Root, Fraction] = {}
        for i in range(n):
            e = tuple(int(k == i) for k in range(n))
            self.mult[e] = 1
            self.cbeta[e] = Fraction(1)

    def extend_to(self, bound: int):
        c = self.c
        while self.height < bound:
            h = self.height + 1
            known = list(self.cbeta.items())
            new_c: Dict[Root, Fraction] = {}
            for beta in lattice_points_of_height(c.rank, h):
                # sum_{n>=2} mult(beta/n)/n from the lower layers
                divided = Fraction(0)
                for n in range(2, h + 1):
                    if all(b % n == 0 for b in beta):
                        sub = tuple(b // n for b in beta)
                        divided += Fraction(self.mult.get(sub, 0), n)
                lhs = symmetric_form(c, beta, beta) - 2 * rho_pairing(c, beta)
                if lhs == 0:
                    # only simple roots have a zero coefficient and a nonzero multiplicity
                    m = Fraction(0)
                else:
                    rhs = Fraction(0)
                    for b1, c1 in known:
                        b2 = tuple(x - y for x, y in zip(beta, b1))
                        if min(b2) < 0:
                            continue
                        c2 = self.cbeta.get(b2)
                        if c2:
                            rhs += symmetric_form(c, b1, b2) * c1 * c2
                    m = rhs / lhs - divided
                if m.denominator != 1 or m < 0:
                    raise ArithmeticError(f"Peterson recursion produced multiplicity {m} at {beta}")
                total = m + divided
                if m:
                    self.mult[beta] = int(m)
                if total:
                    new_c[beta] = total
            self.cbeta.update(new_c)
            self.height = h


def roots_up_to_height(c: CartanData, bound: int) -> RootTable:
    """Positive roots of height <= bound with multiplicities (Peterson recursion)."""
    if bound < 1:
        raise ValueError("height bound must be at least 1")
    state = c._roots.get("peterson")
    if state is None:
        state = c._roots["peterson"] = _PetersonState(c)
    state.extend_to(bound)
    return RootTable(bound, {b: m for b, m in state.mult.items() if sum(b) <= bound})


def positive_roots(c: CartanData) -> RootTable:
    """All positive roots of a finite-type matrix (grows the bound until a height is empty)."""
    if c.kind != FINITE:
        raise NotFiniteType(f"{c.kind} Cartan matrix has infinitely many roots")
    bound = 1
    while True:
        table = roots_up_to_height(c, bound + 1)
        if not table.of_height(bound + 1):
            return roots_up_to_height(c, bound)
        bound += 1


def is_dominant_integral(w: Sequence) -> bool:
    return all(Fraction(x).denominator == 1 and x >= 0 for x in w)


def weyl_dim(c: CartanData, w: Sequence) -> int:
    """Weyl dimension formula prod (lambda+rho, alpha)/(rho, alpha) over positive roots."""
    if c.kind != FINITE:
        raise NotFiniteType("Weyl dimension formula needs a finite-type Cartan matrix")
    if len(w) != c.rank:
        raise ValueError("weight length does not match the rank")
    if not is_dominant_integral(w):
        raise NotDominant(f"{tuple(str(x) for x in w)} is not dominant integral")
    num = Fraction(1)
    for alpha in positive_roots(c):
        num *= (weight_pairing(c, w, alpha) + rho_pairing(c, alpha)) / rho_pairing(c, alpha)
    assert num.denominator == 1
    return int(num)
