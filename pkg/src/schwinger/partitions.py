"""Integer partitions, irreducible dimensions, and symmetric-group characters.

Everything in this module is exact integer arithmetic: character values come
from the Murnaghan-Nakayama border-strip recursion, dimensions from the hook
length formula, and the two are cross-checkable through the standard
orthogonality relations.  Partitions are plain tuples of weakly decreasing
positive integers with no trailing zeros.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Mapping

Partition = tuple[int, ...]

#: Hard cap on the group degree; factorial growth makes anything beyond this
#: a mistake rather than a computation.
DEFAULT_LIMIT = 30

CACHE_ENV_VAR = "SCHWINGER_CACHE_DIR"


def check_partition(parts, n: int | None = None) -> Partition:
    """Validate a partition and return it as a canonical tuple.

    Parts must be weakly decreasing positive integers; when ``n`` is given
    they must also sum to ``n``.  Raises ValueError otherwise.
    """
    p = tuple(int(x) for x in parts)
    if any(x < 1 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    if n is not None and sum(p) != n:
        raise ValueError(f"partition {p} does not sum to {n}")
    return p


def _descending(remaining: int, cap: int) -> Iterator[Partition]:
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, cap), 0, -1):
        for rest in _descending(remaining - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int, limit: int = DEFAULT_LIMIT) -> tuple[Partition, ...]:
    """All partitions of ``n`` in descending lexicographic order.

    This order is the canonical indexing used by every table and report in
    the package.  Rejects n < 1 and n > limit (default 30).
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n > limit:
        raise ValueError(f"n = {n} exceeds the configured limit {limit}")
    return tuple(_descending(n, n))


def conjugate(lam) -> Partition:
    """Transpose of the Young diagram of ``lam``."""
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def dimension(lam) -> int:
    """Dimension of the irreducible labeled ``lam``, by the hook length formula."""
    lam = check_partition(lam)
    n = sum(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    dim, rem = divmod(math.factorial(n), hooks)
    assert rem == 0, f"hook product does not divide {n}! for {lam}"
    return dim


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    k = len(beta)
    parts = tuple(beta[i] - (k - 1 - i) for i in range(k))
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    # Border-strip recursion on first-column hook lengths (beta numbers):
    # removing a strip of length t moves one bead from b to b - t, with sign
    # (-1)^(number of occupied positions passed over).
    if not mu:
        return 1
    t, rest = mu[0], mu[1:]
    k = len(lam)
    beta = [lam[i] + k - 1 - i for i in range(k)]
    occupied = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        target = b - t
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        smaller = beta[:idx] + [target] + beta[idx + 1 :]
        term = _mn(_from_beta(smaller), rest)
        total += -term if height % 2 else term
    return total


def irreducible_character(lam, mu) -> int:
    """Character of the irreducible ``lam`` on the conjugacy class of cycle type ``mu``.

    Computed by the Murnaghan-Nakayama border-strip recursion; always an
    exact integer.  ``lam`` and ``mu`` must partition the same n.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"{lam} and {mu} partition different integers")
    return _mn(lam, mu)


def class_size(mu) -> int:
    """Number of permutations with cycle type ``mu``: n!/prod(k^m_k m_k!)."""
    mu = check_partition(mu)
    n = sum(mu)
    centralizer = 1
    for part in set(mu):
        mult = mu.count(part)
        centralizer *= part**mult * math.factorial(mult)
    size, rem = divmod(math.factorial(n), centralizer)
    assert rem == 0
    return size


def odd_part_count(lam) -> int:
    """Number of odd parts of ``lam``."""
    return sum(1 for part in check_partition(lam) if part % 2)


@dataclass(frozen=True, eq=True)
class CharacterVector:
    """Exact-integer class function: one value per conjugacy class of S_n."""

    n: int
    values: Mapping[Partition, int]

    def __post_init__(self):
        expected = set(enumerate_partitions(self.n))
        if set(self.values) != expected:
            raise ValueError(f"character vector keys must be all partitions of {self.n}")
        if self.values[(1,) * self.n] <= 0:
            raise ValueError("value on the identity class must be a positive integer")

    def __getitem__(self, mu) -> int:
        return self.values[check_partition(mu, self.n)]

    @property
    def degree(self) -> int:
        """Value on the identity class (the dimension of the representation)."""
        return self.values[(1,) * self.n]


@dataclass(frozen=True)
class CharacterTable:
    """Full character table of S_n: rows are irreps, columns are classes.

    Both axes use the canonical descending-lexicographic partition order.
    """

    n: int
    classes: tuple[Partition, ...]
    irreps: tuple[Partition, ...]
    table: tuple[tuple[int, ...], ...]

    def value(self, lam, mu) -> int:
        lam = check_partition(lam, self.n)
        mu = check_partition(mu, self.n)
        return self.table[self.irreps.index(lam)][self.classes.index(mu)]

    def row(self, lam) -> CharacterVector:
        lam = check_partition(lam, self.n)
        values = dict(zip(self.classes, self.table[self.irreps.index(lam)]))
        return CharacterVector(self.n, values)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "classes": [list(mu) for mu in self.classes],
            "irreps": [list(lam) for lam in self.irreps],
            "table": [list(row) for row in self.table],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CharacterTable":
        return cls(
            n=int(data["n"]),
            classes=tuple(check_partition(mu) for mu in data["classes"]),
            irreps=tuple(check_partition(lam) for lam in data["irreps"]),
            table=tuple(tuple(int(v) for v in row) for row in data["table"]),
        )


@lru_cache(maxsize=None)
def _compute_character_table(n: int) -> CharacterTable:
    parts = enumerate_partitions(n)
    table = tuple(
        tuple(irreducible_character(lam, mu) for mu in parts) for lam in parts
    )
    return CharacterTable(n=n, classes=parts, irreps=parts, table=table)


def cache_path(cache_dir, n: int) -> Path:
    return Path(cache_dir) / f"chartab_{n}.json"


def _load_cached_table(path: Path, n: int) -> CharacterTable | None:
    try:
        with open(path, encoding="utf-8") as fh:
            tab = CharacterTable.from_json_dict(json.load(fh))
    except (OSError, ValueError, KeyError, json.JSONDecodeError):
        return None
    if tab.n != n or tab.classes != enumerate_partitions(n):
        return None
    return tab


def _atomic_write(path: Path, text: str) -> None:
    # Concurrent writers all produce identical content, so last-write-wins
    # via os.replace keeps the file consistent at all times.
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def character_table(n: int, cache_dir=None) -> CharacterTable:
    """Character table of S_n, memoized in memory and optionally on disk.

    With ``cache_dir`` set, the table is read from chartab_<n>.json when
    present (falling back to recomputation on any corruption) and written
    there after computation.
    """
    if cache_dir is not None:
        path = cache_path(cache_dir, n)
        cached = _load_cached_table(path, n)
        if cached is not None:
            return cached
    tab = _compute_character_table(n)
    if cache_dir is not None:
        _atomic_write(path, json.dumps(tab.to_json_dict()))
    return tab


def resolve_cache_dir(explicit=None) -> Path:
    """Cache directory precedence: explicit argument, then $SCHWINGER_CACHE_DIR, then ~/.cache/schwinger."""
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "schwinger"


def format_partition(lam, exponents: bool = False) -> str:
    """Render ``(3, 1, 1)`` as ``(3,1,1)`` or, with exponents, ``(3,1^2)``."""
    lam = check_partition(lam)
    if not exponents:
        return "(" + ",".join(str(p) for p in lam) + ")"
    pieces = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        run = j - i
        pieces.append(str(lam[i]) if run == 1 else f"{lam[i]}^{run}")
        i = j
    return "(" + ",".join(pieces) + ")"
