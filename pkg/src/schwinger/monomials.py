"""Carrier space built on monomials in antisymmetric Gaussian variables.

The variables x_jk (j < k) satisfy x_jk = -x_kj, and the inner product of
two monomials is the product of one-variable Gaussian moments with weight
exp(-x^2)/sqrt(pi): exponent 0 gives 1, exponent 1 gives 0, exponent 2
gives 1/2.  Multilinear monomials over disjoint index pairs therefore have
squared norm 2^(-r) and distinct monomials are orthogonal, so scaling by
2^(r/2) yields an orthonormal basis indexed by the involutions.

No integral is ever evaluated numerically: the moment table above is the
definition, and irrational scale factors are carried as squared scales so
every Gram entry stays an exact rational.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .exact import exact_sqrt
from .involutions import Involution, Permutation, enumerate_all_involutions

#: One-variable moments of exp(-x^2)/sqrt(pi), by exponent.
MOMENTS = {0: Fraction(1), 1: Fraction(0), 2: Fraction(1, 2)}


@dataclass(frozen=True)
class Monomial:
    """Product x_{j1 k1} * ... * x_{jr kr} over disjoint increasing pairs.

    Factors obey the same standard-form constraints as involution pairs;
    the empty product is the constant 1.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        flat = [entry for factor in self.factors for entry in factor]
        if len(set(flat)) != len(flat):
            raise ValueError(f"factor indices must be distinct: {self.factors}")
        if any(entry < 1 or entry > self.n for entry in flat):
            raise ValueError(f"factor indices must lie in 1..{self.n}: {self.factors}")
        if any(j >= k for j, k in self.factors):
            raise ValueError(f"each factor must have j < k: {self.factors}")
        firsts = [j for j, _ in self.factors]
        if firsts != sorted(firsts):
            raise ValueError(f"factors must be sorted by first index: {self.factors}")
        if len(self.factors) > self.n // 2:
            raise ValueError(f"too many factors for degree {self.n}")

    @property
    def r(self) -> int:
        return len(self.factors)

    @classmethod
    def from_involution(cls, x: Involution) -> "Monomial":
        return cls(x.n, x.pairs)

    def to_involution(self) -> Involution:
        return Involution(self.n, self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"x{j}{k}" for j, k in self.factors)


def monomial_inner_product(a: Monomial, b: Monomial) -> Fraction:
    """Gaussian-moment pairing of two monomials, evaluated combinatorially."""
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} != {b.n}")
    exponents = Counter(a.factors)
    exponents.update(b.factors)
    value = Fraction(1)
    for exponent in exponents.values():
        value *= MOMENTS[exponent]
        if not value:
            break
    return value


@dataclass(frozen=True)
class MonomialCombination:
    """Finite rational linear combination of monomials of one degree n."""

    n: int
    terms: Mapping[Monomial, Fraction]

    @classmethod
    def of(cls, n: int, terms: Mapping[Monomial, Fraction]) -> "MonomialCombination":
        cleaned = {mon: Fraction(c) for mon, c in terms.items() if c}
        return cls(n, cleaned)

    @classmethod
    def single(cls, mon: Monomial, coeff=1) -> "MonomialCombination":
        return cls.of(mon.n, {mon: Fraction(coeff)})

    def __add__(self, other: "MonomialCombination") -> "MonomialCombination":
        merged = dict(self.terms)
        for mon, c in other.terms.items():
            merged[mon] = merged.get(mon, Fraction(0)) + c
        return MonomialCombination.of(self.n, merged)

    def __sub__(self, other: "MonomialCombination") -> "MonomialCombination":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "MonomialCombination":
        return MonomialCombination.of(
            self.n, {mon: Fraction(scalar) * c for mon, c in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        return self.n == other.n and dict(self.terms) == dict(other.terms)


def inner_product(f1: MonomialCombination, f2: MonomialCombination) -> Fraction:
    """Bilinear extension of the monomial pairing."""
    if f1.n != f2.n:
        raise ValueError(f"degree mismatch: {f1.n} != {f2.n}")
    total = Fraction(0)
    for m1, c1 in f1.terms.items():
        for m2, c2 in f2.terms.items():
            total += c1 * c2 * monomial_inner_product(m1, m2)
    return total


def act_on_monomial(pi: Permutation, mon: Monomial) -> tuple[Monomial, int]:
    """Relabel indices by ``pi`` and restore standard form via antisymmetry.

    Every factor that comes out with j > k is flipped using x_kj = -x_jk,
    costing one sign each; commuting factors past each other is free.
    """
    if pi.n != mon.n:
        raise ValueError(f"degree mismatch: {pi.n} != {mon.n}")
    mapped = [(pi(j), pi(k)) for j, k in mon.factors]
    flips = sum(1 for j, k in mapped if j > k)
    factors = tuple(sorted((j, k) if j < k else (k, j) for j, k in mapped))
    return Monomial(mon.n, factors), -1 if flips % 2 else 1


def act_on_combination(pi: Permutation, f: MonomialCombination) -> MonomialCombination:
    acted: dict[Monomial, Fraction] = {}
    for mon, coeff in f.terms.items():
        image, sign = act_on_monomial(pi, mon)
        acted[image] = acted.get(image, Fraction(0)) + sign * coeff
    return MonomialCombination.of(f.n, acted)


@dataclass(frozen=True)
class ScaledMonomial:
    """A monomial implicitly multiplied by sqrt(scale_sq).

    Carrying the squared scale keeps the orthonormal basis 2^(r/2) * M
    inside exact rational arithmetic.
    """

    monomial: Monomial
    scale_sq: int


def normalized_basis(n: int) -> list[ScaledMonomial]:
    """Orthonormal monomial basis indexed by the involutions of S_n."""
    return [
        ScaledMonomial(Monomial.from_involution(x), 2**x.m)
        for x in enumerate_all_involutions(n)
    ]


def gram_entry(a: ScaledMonomial, b: ScaledMonomial) -> Fraction:
    ip = monomial_inner_product(a.monomial, b.monomial)
    if not ip:
        return Fraction(0)
    return exact_sqrt(Fraction(a.scale_sq * b.scale_sq)) * ip


def gram_matrix(basis: list[ScaledMonomial]) -> list[list[Fraction]]:
    """Full Gram matrix of a scaled-monomial basis.

    Exploits that nonzero pairings need a shared monomial, so entries are
    found through an index over monomials rather than all pairs.
    """
    size = len(basis)
    gram = [[Fraction(0)] * size for _ in range(size)]
    by_monomial: dict[Monomial, list[int]] = {}
    for i, elem in enumerate(basis):
        by_monomial.setdefault(elem.monomial, []).append(i)
    for indices in by_monomial.values():
        for i in indices:
            for j in indices:
                gram[i][j] = gram_entry(basis[i], basis[j])
    return gram
