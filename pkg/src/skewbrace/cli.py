"""Command-line driver.

Exit codes: 0 success, 1 mismatch or verification failure, 2 usage error,
3 budget or catalog limits.
"""

from __future__ import annotations

import functools
import sys

import click

from .conjectures import SCANS
from .counts import compute_report
from .db import build_records, read_db, record_by_index, verify_records, write_db
from .errors import (
    CorruptDatabase,
    HolomorphTooLarge,
    OrderOutOfCatalog,
    OutOfBudget,
    SkewbraceError,
    StretchRequired,
    UnknownRecord,
)
from .ybe import format_solution_text, from_brace

_BUDGET_ERRORS = (StretchRequired, OutOfBudget, OrderOutOfCatalog, HolomorphTooLarge)


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except _BUDGET_ERRORS as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except (CorruptDatabase, UnknownRecord) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)
        except SkewbraceError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    return wrapper


@click.group()
def main():
    """Enumerate skew braces of small order and their Yang-Baxter solutions."""


@main.command("enumerate")
@click.option("--order", type=int, required=True, help="Order of the braces.")
@click.option(
    "--mode",
    type=click.Choice(["skew", "classical"]),
    default="skew",
    show_default=True,
)
@click.option(
    "--stretch",
    is_flag=True,
    help="Allow the long-running orders (16 and 24 skew, 16 classical).",
)
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
@_handle_errors
def enumerate_cmd(order: int, mode: str, stretch: bool, output: str):
    """Enumerate all brace classes of one order into a database file."""
    records = build_records(order, classical=(mode == "classical"), stretch=stretch)
    write_db(records, output)
    click.echo(f"wrote {len(records)} records of order {order} ({mode}) to {output}")


@main.command("verify")
@click.argument("database", type=click.Path(exists=True, dir_okay=False))
@_handle_errors
def verify_cmd(database: str):
    """Re-run every structural invariant on a stored database."""
    records = read_db(database)
    if not records:
        click.echo("warning: database is empty; nothing to verify")
        return
    failures = verify_records(records)
    for index, problem in failures:
        click.echo(f"record {index}: {problem}")
    if failures:
        click.echo(f"FAIL: {len(failures)} problems in {len(records)} records")
        sys.exit(1)
    click.echo(f"PASS: all {len(records)} records verified")


@main.command("tables")
@click.option(
    "--which",
    type=click.Choice(["c", "b", "t"]),
    required=True,
    help="c: skew braces, b: classical braces, t: two-sided braces.",
)
@click.option("--max", "max_order", type=int, required=True)
@click.option("--stretch", is_flag=True)
@_handle_errors
def tables_cmd(which: str, max_order: int, stretch: bool):
    """Recompute a count table and compare with the published values."""
    report = compute_report(which, max_order, stretch=stretch)
    for row in report.rows:
        expected = "?" if row.expected is None else str(row.expected)
        verdict = "PASS" if row.ok else "FAIL"
        click.echo(
            f"{which}({row.order}) = {row.computed} expected {expected} "
            f"{verdict} ({row.seconds:.2f}s)"
        )
    if not report.ok:
        sys.exit(1)


@main.command("conjecture")
@click.option("--kind", type=click.Choice(sorted(SCANS)), required=True)
@click.option(
    "--range",
    "span",
    required=True,
    help="Scan range A..B over the kind's parameter.",
)
@click.option("--stretch", is_flag=True)
@_handle_errors
def conjecture_cmd(kind: str, span: str, stretch: bool):
    """Test a conjectured count formula over a parameter range."""
    try:
        lo_text, hi_text = span.split("..")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise click.UsageError(f"range must look like A..B, got {span!r}")
    report = SCANS[kind](lo, hi, stretch=stretch)
    if not report.rows:
        click.echo("no parameters in range match this scan")
        return
    for row in report.rows:
        verdict = "PASS" if row.ok else "FAIL"
        click.echo(
            f"{kind} parameter {row.parameter} (order {row.order}): "
            f"computed {row.computed} predicted {row.predicted} {verdict}"
        )
    if not report.ok:
        sys.exit(1)


@main.command("export-solution")
@click.argument("database", type=click.Path(exists=True, dir_okay=False))
@click.option("--id", "record_id", type=int, required=True)
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
@_handle_errors
def export_solution_cmd(database: str, record_id: int, output: str):
    """Write one record's Yang-Baxter solution in the text format."""
    records = read_db(database)
    record = record_by_index(records, record_id)
    solution = from_brace(record.brace())
    with open(output, "w") as fh:
        fh.write(format_solution_text(solution))
    click.echo(f"wrote solution of record {record_id} (order {record.order}) to {output}")


if __name__ == "__main__":
    main()
