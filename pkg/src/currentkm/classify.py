"""Classification of highest-weight data psi presented over a cofinite ideal.

Pipeline: validate psi on (h' x A/I), push it down to the radical J,
split A/J into its rational points with idempotents, read off one weight
per point and test dominance. The result predicts the module as a tensor
product of irreducible integrable modules, one per point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

from .errors import MissingPsiEntry, NonDominantWeight, NotCofinite, NotIntegrable, RadicalObstruction, UnknownPsiKey
from .hwchar import CharacterTable, freudenthal_character, tensor_character
from .liecore import CartanData, is_dominant_integral, validate_gcm
from .polyring import Polynomial, format_monomial, parse_monomial
from .zerodim import (
    Ideal,
    QuotientAlgebra,
    ReducedGroebnerBasis,
    buchberger,
    crt_idempotents,
    is_cofinite,
    maximal_points,
    quotient_algebra,
    radical_zero_dim,
)

INTEGRABLE = "Integrable"
NOT_INTEGRABLE = "NotIntegrable"


@dataclass(frozen=True, eq=False)
class PsiSpec:
    """psi on (h' x A/I) + h''.

    ``values[i][s]`` is psi(h_i x basis[s]) for the standard monomials of A/I.
    """

    cartan: CartanData
    ideal: Ideal
    algebra: QuotientAlgebra
    values: Tuple[Tuple[Fraction, ...], ...]
    hpp: Tuple[Fraction, ...] | None = None

    @property
    def ring(self):
        return self.ideal.ring

    @property
    def gb(self) -> ReducedGroebnerBasis:
        return self.algebra.gb

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def psi(self, i: int, coords: Sequence) -> Fraction:
        """psi(h_i x a) for an element a of A/I given by coordinates."""
        return sum((v * c for v, c in zip(self.values[i], coords) if c), Fraction(0))

    def psi_of(self, i: int, p: Polynomial) -> Fraction:
        return self.psi(i, self.algebra.coords(p))

    def psi_prime(self) -> Dict[Tuple[int, Tuple[int, ...]], Fraction]:
        return {(i, m): self.values[i][s] for i in range(self.cartan.rank) for s, m in enumerate(self.algebra.basis)}

    def scaled(self, factor) -> "PsiSpec":
        f = Fraction(factor)
        return PsiSpec(self.cartan, self.ideal, self.algebra, tuple(tuple(v * f for v in row) for row in self.values), self.hpp)


def psi_validate(cartan, ideal: Ideal, psi_prime: Mapping, hpp: Sequence | None = None) -> PsiSpec:
    """Build a PsiSpec, checking cofiniteness and exact coverage of the standard basis.

    ``psi_prime`` maps ``(coroot index, monomial)`` to a value; monomials may be
    exponent tuples or strings such as ``"x*y"``.
    """
    if not isinstance(cartan, CartanData):
        cartan = validate_gcm(cartan)
    gb = buchberger(ideal)
    if not is_cofinite(gb).cofinite:
        raise NotCofinite(f"ideal {ideal} does not have a finite-dimensional quotient")
    q = quotient_algebra(gb)
    index = {m: s for s, m in enumerate(q.basis)}
    values = [[None] * q.dim for _ in range(cartan.rank)]
    for key, value in psi_prime.items():
        try:
            i, mono = key
        except (TypeError, ValueError):
            raise UnknownPsiKey(key) from None
        if not isinstance(i, int) or not 0 <= i < cartan.rank:
            raise UnknownPsiKey(key)
        if isinstance(mono, str):
            try:
                mono = parse_monomial(mono, ideal.ring)
            except ValueError:
                raise UnknownPsiKey(key) from None
        mono = tuple(mono)
        if mono not in index:
            raise UnknownPsiKey(key)
        values[i][index[mono]] = Fraction(value)
    for i, row in enumerate(values):
        for s, v in enumerate(row):
            if v is None:
                raise MissingPsiEntry(i, format_monomial(q.basis[s], ideal.ring))
    hpp_t = None if hpp is None else tuple(Fraction(x) for x in hpp)
    return PsiSpec(cartan, ideal, q, tuple(tuple(r) for r in values), hpp_t)


def radical_descent(spec: PsiSpec) -> PsiSpec:
    """Rewrite psi over A/J, J = sqrt(I); raises RadicalObstruction if psi(h' x J) != 0."""
    q = spec.algebra
    j_gb = radical_zero_dim(spec.gb)
    for g in j_gb.elements:
        for m in q.basis:
            witness = g * Polynomial.monomial(spec.ring, m)
            coords = q.coords(witness)
            for i in range(spec.cartan.rank):
                if spec.psi(i, coords) != 0:
                    raise RadicalObstruction(i, witness)
    qj = quotient_algebra(j_gb)
    # standard monomials of J are standard for I, so their psi values carry over
    values = tuple(tuple(spec.values[i][q.index(m)] for m in qj.basis) for i in range(spec.cartan.rank))
    return PsiSpec(spec.cartan, j_gb.ideal(), qj, values, spec.hpp)


def evaluation_weights(spec: PsiSpec, points, idempotents) -> List[Tuple[Fraction, ...]]:
    """lambda_j(h_i) = psi(h_i x e_j)."""
    if len(points) != len(idempotents):
        raise ValueError("points and idempotents are not aligned")
    return [tuple(spec.psi(i, e) for i in range(spec.cartan.rank)) for e in idempotents]


@dataclass(frozen=True)
class Decomposition:
    cartan: CartanData
    verdict: str
    reason: dict | None
    points: Tuple[Tuple[Fraction, ...], ...]
    weights: Tuple[Tuple[Fraction, ...], ...]
    idempotents: Tuple[Polynomial, ...]
    radical: ReducedGroebnerBasis
    dimension: int
    hpp: Tuple[Fraction, ...] | None = None
    obstruction: NotIntegrable | None = field(default=None, compare=False, repr=False)

    @property
    def integrable(self) -> bool:
        return self.verdict == INTEGRABLE

    @property
    def k(self) -> int:
        return len(self.points)


def classify_module(spec: PsiSpec) -> Decomposition:
    """Radical descent, rational points, CRT weights and the dominance verdict."""
    j_gb = radical_zero_dim(spec.gb)
    try:
        down = radical_descent(spec)
    except RadicalObstruction as obs:
        return Decomposition(spec.cartan, NOT_INTEGRABLE, obs.as_dict(), (), (), (), j_gb, spec.dim, spec.hpp, obs)
    points = maximal_points(down.gb)
    idem = crt_idempotents(down.algebra, points)
    weights = evaluation_weights(down, points, idem)
    idem_polys = tuple(down.algebra.to_poly(e) for e in idem)
    obstruction = None
    for j, w in enumerate(weights):
        if not is_dominant_integral(w):
            i = next(i for i, x in enumerate(w) if x.denominator != 1 or x < 0)
            obstruction = NonDominantWeight(j, i, w[i])
            break
    verdict = INTEGRABLE if obstruction is None else NOT_INTEGRABLE
    return Decomposition(
        spec.cartan,
        verdict,
        None if obstruction is None else obstruction.as_dict(),
        tuple(tuple(p) for p in points),
        tuple(weights),
        idem_polys,
        j_gb,
        spec.dim,
        spec.hpp,
        obstruction,
    )


def predicted_character(d: Decomposition, depth: int) -> CharacterTable:
    """Character of the tensor product of V(lambda_j) over the points, to ``depth``."""
    if not d.integrable:
        raise d.obstruction if d.obstruction is not None else NotIntegrable("decomposition is not integrable")
    parts = [freudenthal_character(d.cartan, w, depth) for w in d.weights]
    if not parts:
        zero = (0,) * d.cartan.rank
        return CharacterTable(d.cartan, tuple(Fraction(0) for _ in zero), depth, {zero: 1})
    return tensor_character(parts, depth)
