"""Command-line interface: enumeration, decomposition, tables, verification.

All subcommands are deterministic for a fixed seed and emit either plain
text or JSON.  Exit codes: 0 success, 1 verification failure, 2 usage
error, 3 internal invariant breach (a non-integer multiplicity).
Permutations compose as (pi * sigma)(i) = pi(sigma(i)).
"""

from __future__ import annotations

import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

import click

from . import fock, monomials
from .involutions import (
    Permutation,
    act,
    adjacent_transpositions,
    enumerate_all_involutions,
    enumerate_involutions,
)
from .levels import closed_form_table, cross_validate, level_table_recipe
from .partitions import (
    DEFAULT_LIMIT,
    character_table,
    dimension,
    enumerate_partitions,
    format_partition,
    resolve_cache_dir,
)
from .representation import NonIntegralMultiplicityError, decompose, verify_model


@dataclass(frozen=True)
class RunConfig:
    """Resolved options shared by the subcommands."""

    n: int
    m: int | None = None
    max_m: int | None = None
    fmt: str = "text"
    cache_dir: str | None = None
    seed: int = 0
    limit: int = DEFAULT_LIMIT


def _validate_n(cfg: RunConfig) -> None:
    if cfg.n < 1 or cfg.n > cfg.limit:
        raise click.UsageError(f"--n must lie in 1..{cfg.limit}, got {cfg.n}")


def _validate_m(cfg: RunConfig) -> None:
    if cfg.m is not None and not 0 <= cfg.m <= cfg.n // 2:
        raise click.UsageError(f"--m must lie in 0..{cfg.n // 2}, got {cfg.m}")


def render_involutions(cfg: RunConfig) -> str:
    _validate_n(cfg)
    _validate_m(cfg)
    levels = [cfg.m] if cfg.m is not None else list(range(cfg.n // 2 + 1))
    rows = [(m, enumerate_involutions(cfg.n, m)) for m in levels]
    total = sum(len(elems) for _, elems in rows)
    if cfg.fmt == "json":
        payload = {
            "n": cfg.n,
            "total": total,
            "levels": [
                {"m": m, "count": len(elems), "elements": [str(x) for x in elems]}
                for m, elems in rows
            ],
        }
        if cfg.m is None:
            payload["dimension_sum"] = sum(
                dimension(lam) for lam in enumerate_partitions(cfg.n)
            )
        return json.dumps(payload, indent=2)
    lines = []
    for m, elems in rows:
        lines.append(f"level {m} ({len(elems)}): " + " ".join(str(x) for x in elems))
    lines.append(f"total: {total}")
    if cfg.m is None:
        dim_sum = sum(dimension(lam) for lam in enumerate_partitions(cfg.n))
        verdict = "matches" if dim_sum == total else "MISMATCH"
        lines.append(f"sum of irreducible dimensions: {dim_sum} ({verdict})")
    return "\n".join(lines)


def render_decompose(cfg: RunConfig) -> str:
    _validate_n(cfg)
    _validate_m(cfg)
    levels = [cfg.m] if cfg.m is not None else list(range(cfg.n // 2 + 1))
    reports = [decompose(cfg.n, m, cfg.cache_dir) for m in levels]
    if cfg.fmt == "json":
        if cfg.m is not None:
            return json.dumps(reports[0].to_json_dict(), indent=2)
        return json.dumps(
            {"n": cfg.n, "reports": [r.to_json_dict() for r in reports]}, indent=2
        )
    lines = []
    for report in reports:
        parts = " + ".join(
            format_partition(lam)
            if mult == 1
            else f"{mult}*{format_partition(lam)}"
            for lam, mult in sorted(report.multiplicities.items(), reverse=True)
        )
        flags = (
            f"multiplicity-free: {'yes' if report.multiplicity_free else 'NO'}, "
            f"disjoint from lower levels: "
            f"{'yes' if report.disjoint_from_lower_levels else 'NO'}"
        )
        lines.append(f"level {report.m}: {parts}  [{flags}]")
    return "\n".join(lines)


def render_character(cfg: RunConfig) -> str:
    _validate_n(cfg)
    table = character_table(cfg.n, cfg.cache_dir)
    if cfg.fmt == "json":
        return json.dumps(table.to_json_dict(), indent=2)
    headers = [format_partition(mu, exponents=True) for mu in table.classes]
    labels = [format_partition(lam, exponents=True) for lam in table.irreps]
    label_width = max(len(s) for s in labels)
    widths = [
        max(len(headers[j]), max(len(str(row[j])) for row in table.table))
        for j in range(len(headers))
    ]
    lines = [
        " " * label_width
        + "  "
        + "  ".join(h.rjust(w) for h, w in zip(headers, widths))
    ]
    for label, row in zip(labels, table.table):
        lines.append(
            label.rjust(label_width)
            + "  "
            + "  ".join(str(v).rjust(w) for v, w in zip(row, widths))
        )
    return "\n".join(lines)


def _check_model(cfg: RunConfig) -> tuple[bool, dict]:
    report = verify_model(cfg.n, cfg.cache_dir)
    return report.passed, report.to_json_dict()


def _check_monomial_gram(cfg: RunConfig) -> tuple[bool, dict]:
    basis = monomials.normalized_basis(cfg.n)
    gram = monomials.gram_matrix(basis)
    for i, row in enumerate(gram):
        for j, value in enumerate(row):
            if value != (1 if i == j else 0):
                return False, {
                    "entry": [i, j],
                    "value": str(value),
                    "monomials": [str(basis[i].monomial), str(basis[j].monomial)],
                }
    return True, {"size": len(basis)}


def _check_fock_gram(cfg: RunConfig) -> tuple[bool, dict]:
    basis = [fock.basis_state(x) for x in enumerate_all_involutions(cfg.n)]
    gram = fock.gram_matrix(basis)
    for i, row in enumerate(gram):
        for j, value in enumerate(row):
            if value != (1 if i == j else 0):
                return False, {"entry": [i, j], "value": str(value)}
    return True, {"size": len(basis)}


def _check_equivariance(cfg: RunConfig) -> tuple[bool, dict]:
    # The three signed actions must agree element-by-element and
    # sign-by-sign on every basis vector, for every adjacent transposition.
    checked = 0
    for x in enumerate_all_involutions(cfg.n):
        mon = monomials.Monomial.from_involution(x)
        state = fock.basis_state(x)
        for pi in adjacent_transpositions(cfg.n):
            target, sign = act(pi, x)
            mon_image, mon_sign = monomials.act_on_monomial(pi, mon)
            if mon_image.to_involution() != target or mon_sign != sign:
                return False, {
                    "kind": "monomial",
                    "x": str(x),
                    "pi": str(pi),
                    "expected": [str(target), sign],
                    "got": [str(mon_image.to_involution()), mon_sign],
                }
            acted = fock.act_on_scaled(pi, state)
            expected = fock.basis_state(target)
            if acted.state != sign * expected.state or acted.norm_sq != expected.norm_sq:
                return False, {"kind": "fock", "x": str(x), "pi": str(pi), "sign": sign}
            checked += 1
    return True, {"pairs_checked": checked}


def _check_cross_validation(cfg: RunConfig) -> tuple[bool, dict]:
    if cfg.n < 2:
        return True, {"note": "skipped for n < 2"}
    report = cross_validate(cfg.n, cfg.cache_dir)
    return report.passed, report.to_json_dict()


def render_verify(cfg: RunConfig) -> tuple[str, bool]:
    _validate_n(cfg)
    checks = [
        ("model", _check_model),
        ("monomial-gram", _check_monomial_gram),
        ("fock-gram", _check_fock_gram),
        ("equivariance", _check_equivariance),
        ("level-cross-check", _check_cross_validation),
    ]
    results = []
    for name, runner in checks:
        passed, details = runner(cfg)
        results.append({"name": name, "passed": passed, "details": details})
    all_passed = all(r["passed"] for r in results)
    if cfg.fmt == "json":
        payload = {"n": cfg.n, "passed": all_passed, "checks": results}
        return json.dumps(payload, indent=2), all_passed
    width = max(len(r["name"]) for r in results)
    lines = [f"verification for n = {cfg.n}"]
    for r in results:
        lines.append(f"  {r['name'].ljust(width)}  {'pass' if r['passed'] else 'FAIL'}")
        if not r["passed"]:
            lines.append(f"    counterexample: {json.dumps(r['details'])}")
    lines.append(f"overall: {'PASS' if all_passed else 'FAIL'}")
    return "\n".join(lines), all_passed


def render_table(cfg: RunConfig) -> str:
    _validate_n(cfg)
    max_m = cfg.max_m if cfg.max_m is not None else cfg.n // 2
    if not 0 <= max_m <= cfg.n // 2:
        raise click.UsageError(f"--max-m must lie in 0..{cfg.n // 2}, got {max_m}")
    recipe = level_table_recipe(cfg.n, max_m)
    closed = closed_form_table(cfg.n, max_m)
    diffs = []
    for m in range(max_m + 1):
        missing = sorted(closed.rows[m] - recipe.rows[m], reverse=True)
        extra = sorted(recipe.rows[m] - closed.rows[m], reverse=True)
        if missing or extra:
            diffs.append(
                {
                    "m": m,
                    "missing": [list(p) for p in missing],
                    "extra": [list(p) for p in extra],
                }
            )
    if cfg.fmt == "json":
        payload = {
            "recipe": recipe.to_json_dict(),
            "closed_form": closed.to_json_dict(),
            "diffs": diffs,
        }
        return json.dumps(payload, indent=2)

    def row(table, m):
        # Group a level by first-part deficit, mirroring the column layout.
        entries = sorted(table.rows[m], reverse=True)
        by_deficit: dict[int, list] = {}
        for lam in entries:
            by_deficit.setdefault(cfg.n - lam[0], []).append(lam)
        return " | ".join(
            " ".join(format_partition(lam, exponents=True) for lam in by_deficit[d])
            for d in sorted(by_deficit)
        )

    lines = []
    for m in range(max_m + 1):
        lines.append(f"Level {m}")
        lines.append(f"  recipe:      {row(recipe, m)}")
        lines.append(f"  closed form: {row(closed, m)}")
    if diffs:
        lines.append("diffs:")
        for record in diffs:
            lines.append(f"  {json.dumps(record)}")
    else:
        lines.append("diffs: none")
    return "\n".join(lines)


def _random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def render_monomial_check(cfg: RunConfig) -> tuple[str, bool]:
    _validate_n(cfg)
    gram_ok, gram_details = _check_monomial_gram(cfg)
    rng = random.Random(cfg.seed)
    basis = monomials.normalized_basis(cfg.n)
    unitary_ok = True
    for _ in range(20):
        pi = _random_permutation(rng, cfg.n)
        f1 = monomials.MonomialCombination.of(
            cfg.n,
            {e.monomial: Fraction(rng.randint(-3, 3)) for e in rng.sample(basis, min(4, len(basis)))},
        )
        f2 = monomials.MonomialCombination.of(
            cfg.n,
            {e.monomial: Fraction(rng.randint(-3, 3)) for e in rng.sample(basis, min(4, len(basis)))},
        )
        before = monomials.inner_product(f1, f2)
        after = monomials.inner_product(
            monomials.act_on_combination(pi, f1), monomials.act_on_combination(pi, f2)
        )
        if before != after:
            unitary_ok = False
            break
    passed = gram_ok and unitary_ok
    results = {
        "n": cfg.n,
        "gram_identity": gram_ok,
        "action_unitary": unitary_ok,
        "passed": passed,
    }
    if not gram_ok:
        results["gram_counterexample"] = gram_details
    if cfg.fmt == "json":
        return json.dumps(results, indent=2), passed
    lines = [
        f"monomial space for n = {cfg.n}",
        f"  gram identity ({gram_details.get('size', '?')}x{gram_details.get('size', '?')}): "
        f"{'pass' if gram_ok else 'FAIL ' + json.dumps(gram_details)}",
        f"  unitarity of the action (seed {cfg.seed}): {'pass' if unitary_ok else 'FAIL'}",
        f"overall: {'PASS' if passed else 'FAIL'}",
    ]
    return "\n".join(lines), passed


def render_fock_check(cfg: RunConfig) -> tuple[str, bool]:
    _validate_n(cfg)
    gram_ok, gram_details = _check_fock_gram(cfg)
    equiv_ok, equiv_details = _check_equivariance(cfg)
    rng = random.Random(cfg.seed)
    reduction_ok = True
    for _ in range(1000):
        length1 = rng.randint(0, 5)
        length2 = rng.randint(0, 5)
        w1 = tuple(rng.randint(1, cfg.n) for _ in range(length1))
        w2 = tuple(rng.randint(1, cfg.n) for _ in range(length2))
        if fock.word_inner_product(w1, w2) != (1 if w1 == w2 else 0):
            reduction_ok = False
            break
    passed = gram_ok and equiv_ok and reduction_ok
    results = {
        "n": cfg.n,
        "gram_identity": gram_ok,
        "equivariance": equiv_ok,
        "word_reduction_matches_equality": reduction_ok,
        "passed": passed,
    }
    if not gram_ok:
        results["gram_counterexample"] = gram_details
    if not equiv_ok:
        results["equivariance_counterexample"] = equiv_details
    if cfg.fmt == "json":
        return json.dumps(results, indent=2), passed
    lines = [
        f"greenberg fock space for n = {cfg.n}",
        f"  gram identity ({gram_details.get('size', '?')}x{gram_details.get('size', '?')}): "
        f"{'pass' if gram_ok else 'FAIL ' + json.dumps(gram_details)}",
        f"  equivariance with the involution action: {'pass' if equiv_ok else 'FAIL ' + json.dumps(equiv_details)}",
        f"  word pairing reduction vs sequence equality (seed {cfg.seed}): "
        f"{'pass' if reduction_ok else 'FAIL'}",
        f"overall: {'PASS' if passed else 'FAIL'}",
    ]
    return "\n".join(lines), passed


_n_option = click.option("--n", "n", type=int, required=True, help="Group degree.")
_m_option = click.option("--m", "m", type=int, default=None, help="Level (number of pairs).")
_format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text"
)
_cache_option = click.option(
    "--cache-dir",
    type=click.Path(file_okay=False),
    default=None,
    help="Character-table cache directory (default: $SCHWINGER_CACHE_DIR or ~/.cache/schwinger).",
)
_seed_option = click.option("--seed", type=int, default=0, show_default=True)
_limit_option = click.option(
    "--limit", type=int, default=DEFAULT_LIMIT, show_default=True, help="Hard cap on n."
)


def _config(n, m=None, max_m=None, fmt="text", cache_dir=None, seed=0, limit=DEFAULT_LIMIT):
    return RunConfig(
        n=n,
        m=m,
        max_m=max_m,
        fmt=fmt,
        cache_dir=str(resolve_cache_dir(cache_dir)),
        seed=seed,
        limit=limit,
    )


@click.group()
def cli():
    """Gelfand model of S_n three ways, verified with exact arithmetic.

    Permutations compose as (pi * sigma)(i) = pi(sigma(i)).  Exit codes:
    0 success, 1 verification failure, 2 usage error, 3 internal invariant
    breach.
    """


@cli.command("involutions")
@_n_option
@_m_option
@_format_option
@_limit_option
def cmd_involutions(n, m, fmt, limit):
    """List standard-form involutions by level."""
    click.echo(render_involutions(RunConfig(n=n, m=m, fmt=fmt, limit=limit)))


@cli.command("decompose")
@_n_option
@_m_option
@_format_option
@_cache_option
@_limit_option
def cmd_decompose(n, m, fmt, cache_dir, limit):
    """Irreducible decomposition of one level (or all levels)."""
    cfg = _config(n, m=m, fmt=fmt, cache_dir=cache_dir, limit=limit)
    try:
        click.echo(render_decompose(cfg))
    except NonIntegralMultiplicityError as exc:
        click.echo(f"internal invariant breach: {exc}", err=True)
        sys.exit(3)


@cli.command("character")
@_n_option
@_format_option
@_cache_option
@_limit_option
def cmd_character(n, fmt, cache_dir, limit):
    """Character table of S_n (rows: irreps, columns: classes)."""
    cfg = _config(n, fmt=fmt, cache_dir=cache_dir, limit=limit)
    click.echo(render_character(cfg))


@cli.command("verify")
@_n_option
@_format_option
@_cache_option
@_seed_option
@_limit_option
def cmd_verify(n, fmt, cache_dir, seed, limit):
    """Run the full verification suite; exit 1 on any failure."""
    cfg = _config(n, fmt=fmt, cache_dir=cache_dir, seed=seed, limit=limit)
    try:
        text, passed = render_verify(cfg)
    except NonIntegralMultiplicityError as exc:
        click.echo(f"internal invariant breach: {exc}", err=True)
        sys.exit(3)
    click.echo(text)
    if not passed:
        sys.exit(1)


@cli.command("table")
@_n_option
@click.option("--max-m", "max_m", type=int, default=None, help="Highest level to build.")
@_format_option
@_limit_option
def cmd_table(n, max_m, fmt, limit):
    """Level table: recipe vs closed form, with a diff section."""
    click.echo(render_table(RunConfig(n=n, max_m=max_m, fmt=fmt, limit=limit)))


@cli.command("monomial-check")
@_n_option
@_format_option
@_seed_option
@_limit_option
def cmd_monomial_check(n, fmt, seed, limit):
    """Verify the antisymmetric-monomial construction."""
    text, passed = render_monomial_check(RunConfig(n=n, fmt=fmt, seed=seed, limit=limit))
    click.echo(text)
    if not passed:
        sys.exit(1)


@cli.command("fock-check")
@_n_option
@_format_option
@_seed_option
@_limit_option
def cmd_fock_check(n, fmt, seed, limit):
    """Verify the Greenberg Fock-space construction."""
    text, passed = render_fock_check(RunConfig(n=n, fmt=fmt, seed=seed, limit=limit))
    click.echo(text)
    if not passed:
        sys.exit(1)


def main():
    cli(prog_name="schwinger")


if __name__ == "__main__":
    main()
