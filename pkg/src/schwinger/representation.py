"""The signed permutation representation on each level of involutions.

Characters are computed from signed fixed points (never by materializing
matrices), multiplicities by the exact character inner product, and the
model property -- every irreducible of S_n exactly once across levels -- is
verified rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .involutions import Permutation, act, enumerate_involutions
from .partitions import (
    CharacterVector,
    Partition,
    character_table,
    check_partition,
    class_size,
    dimension,
    enumerate_partitions,
)


class NonIntegralMultiplicityError(Exception):
    """The character inner product failed to be an integer.

    This never happens for genuine characters; raising instead of rounding
    turns an implementation bug into a loud failure.
    """


@dataclass(frozen=True)
class SignedPermutationMatrix:
    """Column-sparse matrix with exactly one entry of +-1 per column.

    mapping[j] = (i, s) encodes "basis vector j maps to s times basis
    vector i".
    """

    mapping: tuple[tuple[int, int], ...]

    def __post_init__(self):
        images = [i for i, _ in self.mapping]
        if sorted(images) != list(range(len(self.mapping))):
            raise ValueError("image indices must form a permutation")
        if any(s not in (1, -1) for _, s in self.mapping):
            raise ValueError("signs must be +-1")

    @property
    def dim(self) -> int:
        return len(self.mapping)

    @classmethod
    def identity(cls, dim: int) -> "SignedPermutationMatrix":
        return cls(tuple((j, 1) for j in range(dim)))

    def __matmul__(self, other: "SignedPermutationMatrix") -> "SignedPermutationMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        combined = []
        for j in range(other.dim):
            k, s = other.mapping[j]
            i, t = self.mapping[k]
            combined.append((i, s * t))
        return SignedPermutationMatrix(tuple(combined))

    def transpose(self) -> "SignedPermutationMatrix":
        flipped = [(0, 0)] * self.dim
        for j, (i, s) in enumerate(self.mapping):
            flipped[i] = (j, s)
        return SignedPermutationMatrix(tuple(flipped))

    def to_dense(self) -> list[list[int]]:
        rows = [[0] * self.dim for _ in range(self.dim)]
        for j, (i, s) in enumerate(self.mapping):
            rows[i][j] = s
        return rows


def rep_matrix(pi: Permutation, n: int, m: int) -> SignedPermutationMatrix:
    """Matrix of ``pi`` on the level-m involution basis."""
    if pi.n != n:
        raise ValueError(f"permutation degree {pi.n} != {n}")
    basis = enumerate_involutions(n, m)
    index = {x: i for i, x in enumerate(basis)}
    mapping = []
    for x in basis:
        image, sign = act(pi, x)
        mapping.append((index[image], sign))
    return SignedPermutationMatrix(tuple(mapping))


def class_representative(mu) -> Permutation:
    """Canonical permutation of cycle type ``mu``: consecutive cycles (1..mu_1)(mu_1+1..)..."""
    mu = check_partition(mu)
    n = sum(mu)
    cycles = []
    start = 1
    for part in mu:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return Permutation.from_cycles(n, cycles)


def character_of(pi: Permutation, n: int, m: int) -> int:
    """Trace of ``pi`` on level m: the signed count of fixed involutions."""
    total = 0
    for x in enumerate_involutions(n, m):
        image, sign = act(pi, x)
        if image == x:
            total += sign
    return total


def rep_character(n: int, m: int) -> CharacterVector:
    """Character of the level-m representation, one value per class."""
    values = {}
    for mu in enumerate_partitions(n):
        values[mu] = character_of(class_representative(mu), n, m)
    return CharacterVector(n, values)


def multiplicities_of(chi: CharacterVector, cache_dir=None) -> dict[Partition, int]:
    """Decompose a character into irreducible multiplicities, exactly.

    Each multiplicity is (1/n!) * sum over classes of |class| * chi_irr *
    chi; the division must come out exact or the input was not a character.
    """
    n = chi.n
    table = character_table(n, cache_dir)
    order = math.factorial(n)
    sizes = {mu: class_size(mu) for mu in table.classes}
    result: dict[Partition, int] = {}
    for lam in table.irreps:
        total = sum(
            sizes[mu] * table.value(lam, mu) * chi[mu] for mu in table.classes
        )
        mult, rem = divmod(total, order)
        if rem != 0:
            raise NonIntegralMultiplicityError(
                f"multiplicity of {lam} is {total}/{order}, not an integer"
            )
        if mult < 0:
            raise NonIntegralMultiplicityError(
                f"multiplicity of {lam} is negative: {mult}"
            )
        if mult:
            result[lam] = mult
    return result


@dataclass(frozen=True)
class DecompositionReport:
    """Irreducible content of one level, with the model-property flags."""

    n: int
    m: int
    multiplicities: Mapping[Partition, int]
    multiplicity_free: bool
    disjoint_from_lower_levels: bool

    @property
    def support(self) -> frozenset[Partition]:
        return frozenset(self.multiplicities)

    def to_json_dict(self) -> dict:
        ordered = [
            {"partition": list(lam), "mult": self.multiplicities[lam]}
            for lam in enumerate_partitions(self.n)
            if lam in self.multiplicities
        ]
        return {
            "n": self.n,
            "m": self.m,
            "multiplicities": ordered,
            "multiplicity_free": self.multiplicity_free,
            "disjoint": self.disjoint_from_lower_levels,
        }


def decompose(n: int, m: int, cache_dir=None) -> DecompositionReport:
    """Decomposition of the level-m representation into irreducibles."""
    mults = multiplicities_of(rep_character(n, m), cache_dir)
    lower: set[Partition] = set()
    for lower_m in range(m):
        lower.update(multiplicities_of(rep_character(n, lower_m), cache_dir))
    report = DecompositionReport(
        n=n,
        m=m,
        multiplicities=mults,
        multiplicity_free=all(v == 1 for v in mults.values()),
        disjoint_from_lower_levels=not (set(mults) & lower),
    )
    total = sum(
        mult * dimension(lam) for lam, mult in report.multiplicities.items()
    )
    assert total == len(enumerate_involutions(n, m))
    return report


@dataclass(frozen=True)
class ModelReport:
    """Result of checking that the involution module is a Gelfand model."""

    n: int
    levels: tuple[DecompositionReport, ...]
    repeated_multiplicities: tuple[tuple[int, Partition, int], ...]
    overlaps: tuple[tuple[int, int, Partition], ...]
    missing: tuple[Partition, ...]
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "levels": [report.to_json_dict() for report in self.levels],
            "repeated_multiplicities": [
                {"m": m, "partition": list(lam), "mult": mult}
                for m, lam, mult in self.repeated_multiplicities
            ],
            "overlaps": [
                {"m1": m1, "m2": m2, "partition": list(lam)}
                for m1, m2, lam in self.overlaps
            ],
            "missing": [list(lam) for lam in self.missing],
        }


def verify_model(n: int, cache_dir=None) -> ModelReport:
    """Check completeness and multiplicity-freeness across all levels.

    Failures are reported as data (counterexamples), never raised.
    """
    levels = tuple(decompose(n, m, cache_dir) for m in range(n // 2 + 1))
    repeated = tuple(
        (report.m, lam, mult)
        for report in levels
        for lam, mult in report.multiplicities.items()
        if mult > 1
    )
    overlaps = []
    for i, first in enumerate(levels):
        for second in levels[i + 1 :]:
            for lam in sorted(first.support & second.support, reverse=True):
                overlaps.append((first.m, second.m, lam))
    covered = set()
    for report in levels:
        covered.update(report.support)
    missing = tuple(
        lam for lam in enumerate_partitions(n) if lam not in covered
    )
    passed = not repeated and not overlaps and not missing
    return ModelReport(
        n=n,
        levels=levels,
        repeated_multiplicities=repeated,
        overlaps=tuple(overlaps),
        missing=missing,
        passed=passed,
    )
