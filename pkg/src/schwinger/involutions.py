"""Standard-form involutions of S_n and the signed action of S_n on them.

An involution with m disjoint transpositions is stored as the ordered pair
sequence ((a_1,b_1),...,(a_m,b_m)) with a_k < b_k, a_1 < a_2 < ... < a_m and
all 2m entries distinct.  Permuting the entries and restoring this standard
form costs a sign of (-1) per within-pair descent; reordering whole pairs is
free.  That sign rule is what turns the basis {involutions with m pairs}
into a signed permutation representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n} in one-line notation: images[i-1] = pi(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # Composition convention: (self * other)(i) = self(other(i)).
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for i, image in enumerate(self.images, start=1):
            images[image - 1] = i
        return Permutation(tuple(images))

    def cycle_type(self) -> tuple[int, ...]:
        seen = set()
        lengths = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            length = 0
            i = start
            while i not in seen:
                seen.add(i)
                i = self(i)
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        images = list(range(1, n + 1))
        for cycle in cycles:
            for i, entry in enumerate(cycle):
                images[entry - 1] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    def __str__(self) -> str:
        return "[" + " ".join(str(i) for i in self.images) + "]"


def adjacent_transpositions(n: int) -> list[Permutation]:
    """The generators (i i+1) of S_n, for i = 1..n-1."""
    return [Permutation.transposition(n, i, i + 1) for i in range(1, n)]


@dataclass(frozen=True)
class Involution:
    """An involution of S_n as a standard-form list of disjoint pairs."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        flat = [entry for pair in self.pairs for entry in pair]
        if len(set(flat)) != len(flat):
            raise ValueError(f"pair entries must be distinct: {self.pairs}")
        if any(entry < 1 or entry > self.n for entry in flat):
            raise ValueError(f"pair entries must lie in 1..{self.n}: {self.pairs}")
        if any(a >= b for a, b in self.pairs):
            raise ValueError(f"each pair must be increasing: {self.pairs}")
        firsts = [a for a, _ in self.pairs]
        if firsts != sorted(firsts):
            raise ValueError(f"pairs must be sorted by first entry: {self.pairs}")
        if len(self.pairs) > self.n // 2:
            raise ValueError(f"too many pairs for degree {self.n}")

    @property
    def m(self) -> int:
        """Number of transpositions (the level of this basis element)."""
        return len(self.pairs)

    def as_permutation(self) -> Permutation:
        images = list(range(1, self.n + 1))
        for a, b in self.pairs:
            images[a - 1], images[b - 1] = b, a
        return Permutation(tuple(images))

    def __str__(self) -> str:
        if not self.pairs:
            return "e"
        return "".join(f"({a} {b})" for a, b in self.pairs)


class SignedInvolution(NamedTuple):
    element: Involution
    sign: int


def _pair_sequences(letters: tuple[int, ...], m: int) -> Iterator[tuple[tuple[int, int], ...]]:
    # In standard form the first entry of the leading pair is the minimum of
    # the support, so everything to its left becomes a fixed point and can be
    # dropped.  Looping a then b in ascending order yields the sequences in
    # lexicographic order of their flattened form.
    if m == 0:
        yield ()
        return
    for i in range(len(letters) - 2 * m + 1):
        a = letters[i]
        rest = letters[i + 1 :]
        for j, b in enumerate(rest):
            remaining = rest[:j] + rest[j + 1 :]
            for tail in _pair_sequences(remaining, m - 1):
                yield ((a, b),) + tail


@lru_cache(maxsize=None)
def enumerate_involutions(n: int, m: int) -> tuple[Involution, ...]:
    """All standard-form involutions of S_n with exactly m pairs.

    Ordered lexicographically by flattened pair sequence; the count is
    n! / (2^m m! (n-2m)!).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if m < 0 or m > n // 2:
        raise ValueError(f"m must lie in 0..{n // 2}, got {m}")
    letters = tuple(range(1, n + 1))
    result = tuple(Involution(n, pairs) for pairs in _pair_sequences(letters, m))
    assert len(result) == factorial(n) // (2**m * factorial(m) * factorial(n - 2 * m))
    return result


def enumerate_all_involutions(n: int) -> tuple[Involution, ...]:
    """Every involution of S_n, grouped by level m = 0..floor(n/2)."""
    return tuple(
        x for m in range(n // 2 + 1) for x in enumerate_involutions(n, m)
    )


@lru_cache(maxsize=None)
def _index_map(n: int, m: int) -> dict[Involution, int]:
    return {x: i for i, x in enumerate(enumerate_involutions(n, m))}


def involution_index(x: Involution) -> int:
    """Position of ``x`` within enumerate_involutions(x.n, x.m)."""
    return _index_map(x.n, x.m)[x]


def act(pi: Permutation, x: Involution) -> SignedInvolution:
    """Signed action: apply ``pi`` entrywise and restore standard form.

    The sign is (-1)^(number of pairs whose entries come out decreasing);
    swapping those entries back and re-sorting pairs by first entry restores
    standard form at no further cost.
    """
    if pi.n != x.n:
        raise ValueError(f"degree mismatch: {pi.n} != {x.n}")
    mapped = [(pi(a), pi(b)) for a, b in x.pairs]
    descents = sum(1 for a, b in mapped if a > b)
    pairs = tuple(sorted((a, b) if a < b else (b, a) for a, b in mapped))
    return SignedInvolution(Involution(x.n, pairs), -1 if descents % 2 else 1)
