"""Command-line surface: bounds, divisibility moduli, the summary table,
Chern evaluation of profile files, witnesses, and cross-verification.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
All output is deterministic; no environment variables are consulted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import click

from .bounds import (
    c1_zero_refinement_applies,
    closed_form_bound,
    divisibility_modulus,
    divisibility_refined,
    min_fixed_points,
)
from .chern import (
    ProfileError,
    chern_c1cn1,
    dim6_hamiltonian_classifier,
    expand,
    parse_profile,
)
from .minimizer import enumerate_feasible, minimize_even, minimize_odd

__all__ = ["main", "cli", "TableRow", "summary_rows"]


@dataclass(frozen=True)
class TableRow:
    """One row of the summary table: first three possible fixed-point
    counts for the dimension, the two comparison bounds, and (when the
    c1 = 0 refinement bites) the alternate possible counts."""

    dim: int
    possible_values: tuple[int, int, int]
    kosniowski: int
    hamiltonian: int
    c1_zero_variant: tuple[int, int, int] | None


def summary_rows(dims: list[int]) -> list[TableRow]:
    rows = []
    for dim in dims:
        n = dim // 2
        low = min_fixed_points(n)
        mod = divisibility_modulus(n)
        variant = None
        if c1_zero_refinement_applies(n):
            vlow = min_fixed_points(n, c1_zero=True)
            vmod = divisibility_refined(n, c1_zero=True).modulus_refined
            variant = (vlow, vlow + vmod, vlow + 2 * vmod)
        rows.append(
            TableRow(
                dim=dim,
                possible_values=(low, low + mod, low + 2 * mod),
                kosniowski=n // 2 + 1,
                hamiltonian=n + 1,
                c1_zero_variant=variant,
            )
        )
    return rows


def render_table_csv(rows: list[TableRow]) -> str:
    lines = ["dim,value1,value2,value3,kosniowski,hamiltonian,c1_zero_value1,c1_zero_value2,c1_zero_value3"]
    for row in rows:
        cells = [row.dim, *row.possible_values, row.kosniowski, row.hamiltonian]
        cells += list(row.c1_zero_variant) if row.c1_zero_variant else ["", "", ""]
        lines.append(",".join(str(c) for c in cells))
    return "\n".join(lines) + "\n"


def render_table_json(rows: list[TableRow]) -> str:
    payload = [
        {
            "dim": row.dim,
            "possible_values": list(row.possible_values),
            "kosniowski": row.kosniowski,
            "hamiltonian": row.hamiltonian,
            "c1_zero_variant": list(row.c1_zero_variant) if row.c1_zero_variant else None,
        }
        for row in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def render_table_md(rows: list[TableRow]) -> str:
    lines = [
        "| dim M = 2n | fixed points when c1*c(n-1) = 0 | Kosniowski bound | Hamiltonian bound |",
        "| --- | --- | --- | --- |",
    ]
    starred = False
    for row in rows:
        star = "*" if row.c1_zero_variant else ""
        starred = starred or bool(star)
        v1, v2, v3 = row.possible_values
        lines.append(
            f"| {row.dim}{star} | **{v1}**, {v2}, {v3}, ... "
            f"| {row.kosniowski} | {row.hamiltonian} |"
        )
    text = "\n".join(lines) + "\n"
    if starred:
        text += "\n* with c1 = 0 the possible values are 24, 48, 72, ...\n"
    return text


# Published case examples used by `verify` as golden data: n -> (m, r, value, branch).
_EVEN_GOLDEN = {
    26: (13, 1, 12, "even/r=1"),
    20: (10, 2, 6, "even/r=2/not-28-mod-32"),
    28: (14, 2, 12, "even/r=2/28-mod-32"),
    54: (27, 3, 4, "even/r=3/Euler"),
    18: (9, 3, 8, "even/r=3/non-Euler"),
    32: (16, 4, 3, "even/r=4/n-2-square"),
    40: (20, 4, 6, "even/r=4/legendre-ok"),
    112: (56, 4, 9, "even/r=4/legendre-fails"),
    108: (54, 6, 2, "even/r=6/n-12-square"),
    60: (30, 6, 4, "even/r=6/Euler"),
    180: (90, 6, 6, "even/r=6/not-28-mod-32"),
    252: (126, 6, 8, "even/r=6/28-mod-32"),
    48: (24, 12, 2, "even/r=12/n-12-square"),
    72: (36, 12, 3, "even/r=12/n-2-square"),
    24: (12, 12, 4, "even/r=12/Euler"),
    144: (72, 12, 6, "even/r=12/legendre-ok"),
    1008: (504, 12, 7, "even/r=12/legendre-fails"),
}

_ODD_GOLDEN = {
    39: (19, 6, 4, "odd/r=6/Euler"),
    63: (31, 6, 8, "odd/r=6/non-Euler"),
    75: (37, 12, 2, "odd/r=12/triangular"),
    51: (25, 12, 4, "odd/r=12/Euler"),
    99: (49, 12, 6, "odd/r=12/non-Euler"),
}

# Summary-table goldens for dims 4..30: dim -> (min, modulus, kosniowski, hamiltonian).
_SUMMARY_GOLDEN = {
    4: (12, 12, 2, 3),
    6: (2, 2, 2, 4),
    8: (6, 6, 3, 5),
    10: (24, 24, 3, 6),
    12: (4, 4, 4, 7),
    14: (12, 12, 4, 8),
    16: (3, 3, 5, 9),
    18: (8, 8, 5, 10),
    20: (12, 12, 6, 11),
    22: (6, 6, 6, 12),
    24: (2, 2, 7, 13),
    26: (24, 24, 7, 14),
    28: (12, 12, 8, 15),
    30: (4, 4, 8, 16),
}

_ALL_BRANCHES = sorted(
    {b for _, _, _, b in _EVEN_GOLDEN.values()}
    | {b for _, _, _, b in _ODD_GOLDEN.values()}
    | {"odd/m=1", "odd/r=1", "odd/r=2", "odd/r=3", "odd/r=4"}
)


@click.group()
def cli() -> None:
    """Minimal fixed-point counts of circle actions with c1*c(n-1)[M] = 0."""


def _require_half_dimension(n: int) -> None:
    if n < 2:
        raise click.UsageError(f"n must be >= 2 (dimension >= 4), got {n}")


def _bound_payload(n: int, c1_zero: bool, with_witness: bool) -> dict:
    base = closed_form_bound(n)
    value = min_fixed_points(n, c1_zero=c1_zero)
    if value != base.value:
        branch = "c1-zero/24"
        l = value * base.r // 12
    else:
        branch = base.branch
        l = base.l
    payload = {
        "n": n,
        "dim": 2 * n,
        "value": value,
        "branch": branch,
        "m": base.m,
        "r": base.r,
        "l": l,
    }
    if with_witness:
        profile = (
            expand(minimize_even(n // 2).witness)
            if n % 2 == 0
            else expand(minimize_odd(n // 2).witness)
        )
        scale = value // base.value
        counts = tuple(scale * c for c in profile.counts)
        payload["witness"] = list(counts)
        payload["witness_total"] = sum(counts)
    return payload


@cli.command()
@click.argument("n", type=int)
@click.option("--c1-zero", is_flag=True, help="Assume c1 = 0 in integer cohomology.")
@click.option("--witness", "with_witness", is_flag=True, help="Print a profile attaining the bound.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def bound(n: int, c1_zero: bool, with_witness: bool, fmt: str) -> None:
    """Lower bound for the number of fixed points in half-dimension N."""
    _require_half_dimension(n)
    payload = _bound_payload(n, c1_zero, with_witness)
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
        return
    click.echo(f"n = {payload['n']} (dim {payload['dim']})")
    click.echo(f"bound = {payload['value']}")
    click.echo(f"branch = {payload['branch']}")
    click.echo(f"m = {payload['m']}")
    click.echo(f"r = {payload['r']}")
    click.echo(f"l = {payload['l']}")
    if with_witness:
        click.echo(f"witness = {payload['witness']}")
        click.echo(f"witness total = {payload['witness_total']}")


@cli.command()
@click.argument("n", type=int)
@click.option("--c1-zero", is_flag=True, help="Assume c1 = 0 in integer cohomology.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def divisibility(n: int, c1_zero: bool, fmt: str) -> None:
    """Moduli dividing the fixed-point count in half-dimension N."""
    _require_half_dimension(n)
    res = divisibility_refined(n, c1_zero=c1_zero)
    if fmt == "json":
        click.echo(
            json.dumps(
                {
                    "n": n,
                    "dim": 2 * n,
                    "modulus_gcd": res.modulus_gcd,
                    "modulus_hirzebruch": res.modulus_hirzebruch,
                    "modulus_refined": res.modulus_refined,
                    "c1_zero": res.c1_zero,
                },
                indent=2,
            )
        )
        return
    click.echo(f"n = {n} (dim {2 * n})")
    click.echo(f"gcd modulus = {res.modulus_gcd}")
    click.echo(f"hirzebruch modulus = {res.modulus_hirzebruch}")
    click.echo(f"refined modulus = {res.modulus_refined}")


def _parse_dims(spec: str) -> list[int]:
    try:
        lo_text, hi_text = spec.split("..")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise click.UsageError(f"--dims must look like A..B, got {spec!r}")
    if lo % 2 or hi % 2:
        raise click.UsageError(f"dimensions must be even, got {spec!r}")
    if lo < 4 or lo > hi:
        raise click.UsageError(f"need 4 <= A <= B, got {spec!r}")
    return list(range(lo, hi + 1, 2))


@cli.command()
@click.option("--dims", default="4..30", show_default=True, help="Range of even dimensions A..B.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "md"]), default="md")
def table(dims: str, fmt: str) -> None:
    """Summary table of possible fixed-point counts per dimension."""
    rows = summary_rows(_parse_dims(dims))
    render = {"csv": render_table_csv, "json": render_table_json, "md": render_table_md}[fmt]
    click.echo(render(rows), nl=False)


@cli.command()
@click.option("--profile", "profile_path", required=True, type=click.Path(exists=True, dir_okay=False))
def chern(profile_path: str) -> None:
    """Evaluate c1*c(n-1) for a profile file {"n": int, "counts": [...]}."""
    try:
        with open(profile_path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"profile is not valid JSON: {exc}")
    try:
        profile = parse_profile(data)
        profile.require_symmetric()
        value = chern_c1cn1(profile)
    except ProfileError as exc:
        raise click.UsageError(str(exc))
    click.echo(f"c1*c(n-1)[M] = {value}")
    click.echo(f"fixed points = {profile.total()}")
    click.echo("symmetric = yes")
    if profile.n == 3:
        click.echo(f"dim-6 classification = {dim6_hamiltonian_classifier(value).value}")


@cli.command()
@click.argument("n", type=int)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def witness(n: int, fmt: str) -> None:
    """A profile attaining the minimal fixed-point count for half-dimension N."""
    _require_half_dimension(n)
    profile = (
        expand(minimize_even(n // 2).witness)
        if n % 2 == 0
        else expand(minimize_odd(n // 2).witness)
    )
    value = chern_c1cn1(profile)
    if fmt == "json":
        click.echo(
            json.dumps(
                {
                    "n": n,
                    "dim": 2 * n,
                    "counts": list(profile.counts),
                    "total": profile.total(),
                    "c1cn1": value,
                },
                indent=2,
            )
        )
        return
    click.echo(f"n = {n} (dim {2 * n})")
    click.echo(f"profile = {list(profile.counts)}")
    click.echo(f"total = {profile.total()}")
    click.echo(f"c1*c(n-1)[M] = {value}")


def _verify_checks(max_m: int, lattice_max_n: int) -> tuple[list[str], list[str], set[str]]:
    """Run all cross-checks; returns (passed, failures, branches seen)."""
    passed: list[str] = []
    failures: list[str] = []
    seen: set[str] = set()

    mismatch_even = []
    mismatch_odd = []
    for m in range(1, max_m + 1):
        even_result = closed_form_bound(2 * m)
        seen.add(even_result.branch)
        solved = minimize_even(m)
        if solved.minimum != even_result.value or solved.l > 7:
            mismatch_even.append(
                f"n={2 * m}: closed-form={even_result.value}, l-search={solved.minimum} (l={solved.l})"
            )
        odd_result = closed_form_bound(2 * m + 1)
        seen.add(odd_result.branch)
        solved = minimize_odd(m)
        if solved.minimum != odd_result.value or solved.l > 3:
            mismatch_odd.append(
                f"n={2 * m + 1}: closed-form={odd_result.value}, l-search={solved.minimum} (l={solved.l})"
            )
    if mismatch_even:
        failures.append(f"closed form vs l-search (even): {'; '.join(mismatch_even[:5])}")
    else:
        passed.append(f"closed form vs l-search agrees for even n = 2..{2 * max_m}")
    if mismatch_odd:
        failures.append(f"closed form vs l-search (odd): {'; '.join(mismatch_odd[:5])}")
    else:
        passed.append(f"closed form vs l-search agrees for odd n = 3..{2 * max_m + 1}")

    lattice_bad = []
    for n in range(2, lattice_max_n + 1):
        expected = closed_form_bound(n).value
        feasible = enumerate_feasible(n, value_cap=48)
        if not feasible or feasible[0].minimum != expected:
            got = feasible[0].minimum if feasible else None
            lattice_bad.append(f"n={n}: closed-form={expected}, lattice={got}")
            continue
        modulus = divisibility_modulus(n)
        bad = [o.minimum for o in feasible if o.minimum % modulus]
        if bad:
            lattice_bad.append(f"n={n}: objectives {bad[:3]} not divisible by {modulus}")
    if lattice_bad:
        failures.append(f"lattice enumeration: {'; '.join(lattice_bad[:5])}")
    else:
        passed.append(
            f"lattice enumeration (cap 48) matches closed form and the "
            f"divisibility rule for n = 2..{lattice_max_n}"
        )

    for label, golden in (("even", _EVEN_GOLDEN), ("odd", _ODD_GOLDEN)):
        bad = []
        for n, (m, r, value, branch) in golden.items():
            res = closed_form_bound(n)
            if (res.m, res.r, res.value, res.branch) != (m, r, value, branch):
                bad.append(
                    f"n={n}: expected ({m},{r},{value},{branch}), "
                    f"got ({res.m},{res.r},{res.value},{res.branch})"
                )
        if bad:
            failures.append(f"{label} case table: {'; '.join(bad[:5])}")
        else:
            passed.append(f"{label} case table reproduced ({len(golden)} rows)")

    bad = []
    for dim, (low, mod, kos, ham) in _SUMMARY_GOLDEN.items():
        n = dim // 2
        got = (min_fixed_points(n), divisibility_modulus(n), n // 2 + 1, n + 1)
        if got != (low, mod, kos, ham):
            bad.append(f"dim={dim}: expected {(low, mod, kos, ham)}, got {got}")
    if bad:
        failures.append(f"summary table dims 4..30: {'; '.join(bad[:5])}")
    else:
        passed.append("summary table reproduced for dims 4..30")

    return passed, failures, seen


@cli.command()
@click.option("--max-m", type=int, default=200, show_default=True)
@click.option("--lattice-max-n", type=int, default=30, show_default=True)
@click.pass_context
def verify(ctx: click.Context, max_m: int, lattice_max_n: int) -> None:
    """Cross-check the closed form against both independent solvers."""
    if max_m < 1:
        raise click.UsageError(f"--max-m must be >= 1, got {max_m}")
    if lattice_max_n < 2:
        raise click.UsageError(f"--lattice-max-n must be >= 2, got {lattice_max_n}")
    passed, failures, seen = _verify_checks(max_m, lattice_max_n)
    for line in passed:
        click.echo(f"ok: {line}")
    for line in failures:
        click.echo(f"FAIL: {line}")
    hit = [b for b in _ALL_BRANCHES if b in seen]
    click.echo(f"branch coverage: {len(hit)}/{len(_ALL_BRANCHES)} cases exercised")
    missing = [b for b in _ALL_BRANCHES if b not in seen]
    if missing:
        click.echo(f"missing branches: {', '.join(missing)}")
    if max_m < 504:
        click.echo("warning: full even-case coverage needs --max-m >= 504")
    click.echo("RESULT " + ("FAIL" if failures else "PASS"))
    if failures:
        ctx.exit(1)


def main() -> None:
    cli()
