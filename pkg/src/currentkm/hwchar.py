"""Weight multiplicities of integrable highest-weight modules.

A character is a table ``beta -> dim V_{lambda - beta}`` indexed by drops
beta in the positive root lattice, truncated at a height ``depth``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from .errors import ContextMismatch, InsufficientDepth, NotDominant, NotFiniteType
from .liecore import (
    CartanData,
    Root,
    is_dominant_integral,
    lattice_points_of_height,
    rho_pairing,
    roots_up_to_height,
    symmetric_form,
    weight_pairing,
)


@dataclass(frozen=True)
class CharacterTable:
    cartan: CartanData
    highest: Tuple[Fraction, ...]
    depth: int
    entries: Dict[Root, int]  # nonzero entries only

    def __getitem__(self, beta) -> int:
        return self.entries.get(tuple(beta), 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def drops(self):
        """Every beta of height <= depth, layer by layer."""
        for h in range(self.depth + 1):
            yield from lattice_points_of_height(self.cartan.rank, h)

    def layer(self, h: int) -> Dict[Root, int]:
        return {b: m for b, m in self.entries.items() if sum(b) == h}

    def is_stable(self) -> bool:
        """True when some layer within the depth is empty, so nothing deeper can occur."""
        return any(not self.layer(h) for h in range(1, self.depth + 1))

    def sequence(self, direction: Sequence[int] | None = None):
        """Multiplicities along k*direction for k = 0..depth (rank one by default)."""
        if direction is None:
            direction = (1,) * self.cartan.rank
        h = sum(direction)
        return [self[tuple(k * d for d in direction)] for k in range(self.depth // h + 1)]

    def same_entries(self, other: "CharacterTable", depth: int | None = None) -> bool:
        depth = min(self.depth, other.depth) if depth is None else depth
        a = {b: m for b, m in self.entries.items() if sum(b) <= depth}
        b = {b: m for b, m in other.entries.items() if sum(b) <= depth}
        return a == b


def freudenthal_character(c: CartanData, weight: Sequence, depth: int) -> CharacterTable:
    """Freudenthal recursion, top down by height of the drop."""
    lam = tuple(Fraction(x) for x in weight)
    if len(lam) != c.rank:
        raise ValueError("weight length does not match the rank")
    if not is_dominant_integral(lam):
        raise NotDominant(f"{tuple(str(x) for x in lam)} is not dominant integral")
    if depth < 0:
        raise ValueError("depth must be non-negative")
    zero = (0,) * c.rank
    entries: Dict[Root, int] = {zero: 1}
    if depth == 0:
        return CharacterTable(c, lam, depth, entries)
    roots = list(roots_up_to_height(c, depth).items())
    lam_alpha = {}  # (lambda, alpha) per root
    for alpha, _ in roots:
        lam_alpha[alpha] = weight_pairing(c, lam, alpha)
    for h in range(1, depth + 1):
        for beta in lattice_points_of_height(c.rank, h):
            # 2(lambda+rho, beta) - (beta, beta)
            denom = 2 * (weight_pairing(c, lam, beta) + rho_pairing(c, beta)) - symmetric_form(c, beta, beta)
            num = Fraction(0)
            for alpha, mult in roots:
                # mu + k alpha has drop beta - k alpha; (mu + k alpha, alpha)
                base = lam_alpha[alpha] - symmetric_form(c, beta, alpha)
                norm = symmetric_form(c, alpha, alpha)
                k = 1
                while True:
                    drop = tuple(b - k * a for b, a in zip(beta, alpha))
                    if min(drop) < 0:
                        break
                    m = entries.get(drop)
                    if m:
                        num += mult * m * (base + k * norm)
                    k += 1
            num *= 2
            if num == 0:
                continue
            if denom == 0:
                raise ArithmeticError(f"zero Freudenthal denominator at drop {beta} with nonzero numerator")
            value = num / denom
            if value.denominator != 1 or value < 0:
                raise ArithmeticError(f"non-integral multiplicity {value} at drop {beta}")
            entries[beta] = int(value)
    return CharacterTable(c, lam, depth, entries)


def tensor_character(parts: Sequence[CharacterTable], depth: int) -> CharacterTable:
    """Character of the tensor product: convolution of drop tables, truncated at ``depth``."""
    if not parts:
        raise ValueError("need at least one factor")
    c = parts[0].cartan
    for p in parts:
        if p.cartan.matrix != c.matrix:
            raise ContextMismatch("tensor factors live over different Cartan matrices")
        if p.depth < depth:
            raise InsufficientDepth(f"factor computed to depth {p.depth} < {depth}")
    acc: Dict[Root, int] = {(0,) * c.rank: 1}
    for p in parts:
        nxt: Dict[Root, int] = {}
        for b1, m1 in acc.items():
            h1 = sum(b1)
            for b2, m2 in p.entries.items():
                if h1 + sum(b2) > depth:
                    continue
                b = tuple(x + y for x, y in zip(b1, b2))
                nxt[b] = nxt.get(b, 0) + m1 * m2
        acc = nxt
    label = tuple(sum(vals, Fraction(0)) for vals in zip(*(p.highest for p in parts)))
    return CharacterTable(c, label, depth, acc)


def full_character(c: CartanData, weight: Sequence) -> CharacterTable:
    """Complete character of a finite-dimensional module (finite type only)."""
    if c.kind != "finite":
        raise NotFiniteType("only finite-type modules have a complete finite character")
    depth = 4
    while True:
        table = freudenthal_character(c, weight, depth)
        if table.is_stable():
            return table
        depth *= 2
