"""Irreducible content of each involution level, two independent ways.

The closed form is the normative one: level m consists of the partitions
of n whose conjugate has exactly n - 2m odd parts.  The column recipe
rebuilds the same rows constructively (first column (n-m, m); last column
(n-2m) joined with an even-multiplicity partition of 2m; middle columns by
moving one unit off the first part of the previous level's column), keeping
only entries that have not already appeared at an earlier level.  The two
routes plus the character-theoretic decomposition cross-validate each
other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import (
    Partition,
    check_partition,
    conjugate,
    enumerate_partitions,
    odd_part_count,
)
from .representation import decompose


def level_content_closed_form(n: int, m: int) -> frozenset[Partition]:
    """Partitions of n whose conjugate has exactly n - 2m odd parts."""
    if m < 0 or m > n // 2:
        raise ValueError(f"m must lie in 0..{n // 2}, got {m}")
    return frozenset(
        lam
        for lam in enumerate_partitions(n)
        if odd_part_count(conjugate(lam)) == n - 2 * m
    )


@dataclass(frozen=True)
class LevelTable:
    """Assignment of irreducible labels (partitions of n) to levels."""

    n: int
    rows: dict[int, frozenset[Partition]]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "levels": [
                {
                    "m": m,
                    "partitions": [
                        list(lam) for lam in sorted(self.rows[m], reverse=True)
                    ],
                }
                for m in sorted(self.rows)
            ],
        }


def closed_form_table(n: int, max_m: int | None = None) -> LevelTable:
    top = n // 2 if max_m is None else max_m
    return LevelTable(
        n, {m: level_content_closed_form(n, m) for m in range(top + 1)}
    )


def _as_partition(parts) -> Partition:
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def _even_multiplicity_partitions(total: int) -> list[Partition]:
    if total == 0:
        return [()]
    return [
        rho
        for rho in enumerate_partitions(total)
        if all(rho.count(part) % 2 == 0 for part in set(rho))
    ]


def _bumped(entry: Partition) -> set[Partition]:
    # Move one unit from the first part onto the remainder: either raise an
    # existing later part by one or append a new part 1.
    first = entry[0] - 1
    rest = list(entry[1:])
    candidates = set()
    for j in range(len(rest)):
        raised = rest.copy()
        raised[j] += 1
        candidates.add(_as_partition([first] + raised))
    candidates.add(_as_partition([first] + rest + [1]))
    return candidates


def level_table_recipe(n: int, max_m: int) -> LevelTable:
    """Build levels 0..max_m by the column recipe.

    Candidate entries already placed at an earlier level (or earlier in the
    same level) are dropped; cross_validate reports any disagreement with
    the closed form instead of hiding it.
    """
    if max_m < 0 or max_m > n // 2:
        raise ValueError(f"max_m must lie in 0..{n // 2}, got {max_m}")
    seen: set[Partition] = set()
    rows: dict[int, frozenset[Partition]] = {}
    previous_columns: list[set[Partition]] = []
    for m in range(max_m + 1):
        columns: list[set[Partition]] = []
        for c in range(m + 1):
            if c == 0:
                candidates = {_as_partition([n - m, m])}
            elif c == m:
                candidates = {
                    _as_partition([n - 2 * m, *rho])
                    for rho in _even_multiplicity_partitions(2 * m)
                }
            else:
                candidates = set()
                for entry in previous_columns[c]:
                    candidates |= _bumped(entry)
            fresh = {p for p in candidates if p and p not in seen}
            seen |= fresh
            columns.append(fresh)
        rows[m] = frozenset().union(*columns)
        previous_columns = columns
    return LevelTable(n, rows)


@dataclass(frozen=True)
class CrossValidationReport:
    """Set differences between the three routes to each level's content."""

    n: int
    mismatches: tuple[dict, ...]
    passed: bool

    def to_json_dict(self) -> dict:
        return {"n": self.n, "passed": self.passed, "mismatches": list(self.mismatches)}


def _diff_records(m: int, other_name: str, reference, other) -> list[dict]:
    if reference == other:
        return []
    return [
        {
            "m": m,
            "compared": other_name,
            "missing": [list(p) for p in sorted(reference - other, reverse=True)],
            "extra": [list(p) for p in sorted(other - reference, reverse=True)],
        }
    ]


def cross_validate(n: int, cache_dir=None) -> CrossValidationReport:
    """Check closed form == character decomposition == recipe for every level."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    recipe = level_table_recipe(n, n // 2)
    mismatches: list[dict] = []
    for m in range(n // 2 + 1):
        reference = level_content_closed_form(n, m)
        support = frozenset(decompose(n, m, cache_dir).support)
        mismatches += _diff_records(m, "decompose", reference, support)
        mismatches += _diff_records(m, "recipe", reference, recipe.rows[m])
    return CrossValidationReport(n, tuple(mismatches), not mismatches)
