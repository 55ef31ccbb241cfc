"""Carrier space inside the Fock space of the Greenberg algebra.

Creation/annihilation operators obey a(i) a+(j) = delta_ij and nothing
else, so differently ordered creation words give orthogonal states.  A word
is stored as the tuple of creation indices applied right-to-left to the
vacuum; the empty word is the vacuum itself.

The basis state attached to an involution with pairs (a_1,b_1)..(a_m,b_m)
is the sum over all m! orderings of the product of commutators
[a+(a_k), a+(b_k)] applied to the vacuum, normalized by 1/sqrt(m! 2^m).
The printed normalization elsewhere sometimes reads 1/sqrt(2^m), but only
1/sqrt(m! 2^m) gives unit norm (and matches the explicit S_4 states, e.g.
the 1/sqrt(8) prefactor at m = 2); squared norms are carried symbolically
so every Gram entry is an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import factorial
from typing import Mapping, Sequence

from .exact import exact_sqrt
from .involutions import Involution, Permutation

FockWord = tuple[int, ...]


def word_inner_product(w1: FockWord, w2: FockWord) -> int:
    """Pairing of two creation words, reduced via a(i) a+(j) = delta_ij.

    In <0| a(u_p)..a(u_1) a+(v_1)..a+(v_q) |0> the innermost pair
    a(u_1) a+(v_1) contracts to a delta with no reordering terms, so the
    words are peeled from the front; any leftover operator kills the
    vacuum.  The net effect is 1 exactly when the sequences are identical.
    """
    i = 0
    while i < len(w1) and i < len(w2):
        if w1[i] != w2[i]:
            return 0
        i += 1
    return 1 if len(w1) == len(w2) else 0


@dataclass(frozen=True)
class FockState:
    """Finite rational linear combination of creation words."""

    n: int
    terms: Mapping[FockWord, Fraction]

    @classmethod
    def of(cls, n: int, terms: Mapping[FockWord, Fraction]) -> "FockState":
        cleaned = {word: Fraction(c) for word, c in terms.items() if c}
        return cls(n, cleaned)

    @classmethod
    def vacuum(cls, n: int) -> "FockState":
        return cls.of(n, {(): Fraction(1)})

    def __add__(self, other: "FockState") -> "FockState":
        merged = dict(self.terms)
        for word, c in other.terms.items():
            merged[word] = merged.get(word, Fraction(0)) + c
        return FockState.of(self.n, merged)

    def __sub__(self, other: "FockState") -> "FockState":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "FockState":
        return FockState.of(
            self.n, {word: Fraction(scalar) * c for word, c in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        return self.n == other.n and dict(self.terms) == dict(other.terms)


def state_inner_product(s1: FockState, s2: FockState) -> Fraction:
    """Bilinear extension of the word pairing.

    Uses the fact that distinct words are orthonormal, so only shared words
    contribute; this shortcut is property-tested against word_inner_product.
    """
    if s1.n != s2.n:
        raise ValueError(f"degree mismatch: {s1.n} != {s2.n}")
    small, large = sorted((s1.terms, s2.terms), key=len)
    return sum(
        (c * large[word] for word, c in small.items() if word in large),
        Fraction(0),
    )


def commutator_product_state(
    n: int, pairs: Sequence[tuple[int, int]], ordering: Sequence[int] | None = None
) -> FockState:
    """Expand [a+(a_1),a+(b_1)] ... [a+(a_m),a+(b_m)] |0> for one factor order.

    ``ordering`` lists factor positions (0-based); identity order when
    omitted.  The expansion has 2^m words with coefficients +-1: each
    commutator contributes its pair either in order (+) or flipped (-).
    """
    flat = [entry for pair in pairs for entry in pair]
    if len(set(flat)) != len(flat):
        raise ValueError(f"pairs must be disjoint: {pairs}")
    if any(a >= b for a, b in pairs):
        raise ValueError(f"each pair must be increasing: {pairs}")
    ordered = list(pairs) if ordering is None else [pairs[i] for i in ordering]
    terms: dict[FockWord, Fraction] = {}
    for flips in product((False, True), repeat=len(ordered)):
        word: list[int] = []
        sign = 1
        for (a, b), flipped in zip(ordered, flips):
            word.extend((b, a) if flipped else (a, b))
            if flipped:
                sign = -sign
        terms[tuple(word)] = Fraction(sign)
    return FockState.of(n, terms)


@dataclass(frozen=True)
class ScaledState:
    """A Fock state implicitly divided by sqrt(norm_sq).

    Keeping the squared normalization symbolic avoids irrational
    coefficients while preserving exact inner products.
    """

    state: FockState
    norm_sq: int


def basis_state(x: Involution) -> ScaledState:
    """Orthonormal Fock-space vector attached to an involution.

    The raw state sums the commutator product over all m! factor orderings
    (coefficients +-1 on m! 2^m distinct words); the implicit prefactor
    1/sqrt(m! 2^m) making it unit norm is carried as norm_sq.
    """
    m = x.m
    total = FockState.of(x.n, {})
    for ordering in permutations(range(m)):
        total = total + commutator_product_state(x.n, x.pairs, ordering)
    return ScaledState(total, factorial(m) * 2**m)


def act_on_state(pi: Permutation, s: FockState) -> FockState:
    """Relabel every creation index by ``pi``; linear in the state."""
    if pi.n != s.n:
        raise ValueError(f"degree mismatch: {pi.n} != {s.n}")
    relabeled: dict[FockWord, Fraction] = {}
    for word, coeff in s.terms.items():
        image = tuple(pi(i) for i in word)
        relabeled[image] = relabeled.get(image, Fraction(0)) + coeff
    return FockState.of(s.n, relabeled)


def act_on_scaled(pi: Permutation, s: ScaledState) -> ScaledState:
    return ScaledState(act_on_state(pi, s.state), s.norm_sq)


def scaled_inner_product(s1: ScaledState, s2: ScaledState) -> Fraction:
    ip = state_inner_product(s1.state, s2.state)
    if not ip:
        return Fraction(0)
    return ip / exact_sqrt(Fraction(s1.norm_sq * s2.norm_sq))


def gram_matrix(basis: list[ScaledState]) -> list[list[Fraction]]:
    """Gram matrix of scaled states via an index over shared words.

    Nonzero entries need at least one common word, so accumulating
    word-by-word touches exactly the contributing pairs; validated against
    the pairwise route in the tests.
    """
    size = len(basis)
    raw = [[Fraction(0)] * size for _ in range(size)]
    by_word: dict[FockWord, list[tuple[int, Fraction]]] = {}
    for i, elem in enumerate(basis):
        for word, coeff in elem.state.terms.items():
            by_word.setdefault(word, []).append((i, coeff))
    for entries in by_word.values():
        for i, ci in entries:
            for j, cj in entries:
                raw[i][j] += ci * cj
    gram = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if raw[i][j]:
                scale = exact_sqrt(Fraction(basis[i].norm_sq * basis[j].norm_sq))
                gram[i][j] = raw[i][j] / scale
    return gram


def format_word(word: FockWord) -> str:
    """Render a creation word as ``a+(1) a+(2) |0>``."""
    if not word:
        return "|0>"
    return " ".join(f"a+({i})" for i in word) + " |0>"


def format_scaled_state(s: ScaledState) -> str:
    """Signed sum of words with the squared normalization spelled out."""
    if not s.state.terms:
        return "0"
    pieces = []
    for word in sorted(s.state.terms):
        coeff = s.state.terms[word]
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(coeff)
        body = format_word(word)
        if magnitude != 1:
            body = f"{magnitude} {body}"
        pieces.append(f"{sign} {body}")
    joined = " ".join(pieces)
    if s.norm_sq == 1:
        return joined
    return f"(1/sqrt({s.norm_sq})) * [ {joined} ]"
