import sys
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from importlib.metadata import version

import click
from pydantic import BaseModel

from .channel import correctability_experiment
from .codes import distance_table, generator_weight_witnesses
from .config import PairdistSettings, load_pairdist_settings
from .constants import (
    DEFAULT_TRIALS,
    EXIT_INCOMPLETE,
    EXIT_MISMATCH,
    EXIT_USAGE,
    SERVICE_NAME,
)
from .errors import BudgetExhaustedError, FormulaBranchError, InvalidParametersError
from .gf import build_field, field_from_modulus
from .logger import (
    log_debug,
    log_error,
    log_experiment_summary,
    log_verification_summary,
)
from .models import (
    CodeSpec,
    FieldSpec,
    OutputFormat,
    Prop22Mode,
    RingElement,
    VerificationStatus,
)
from .oracle import verified_table, verify_family, verify_prop22_exhaustive
from .pairmetrics import hamming_weight, pair_distance, pair_read, pair_weight, run_count
from .render import Record, render


class _CliState(BaseModel):
    settings: PairdistSettings
    format: OutputFormat | None = None
    jobs: int | None = None


class VectorLiteral(click.ParamType):
    """Comma-separated field-element encodings, constant coordinate first."""

    name = "vector"

    def convert(self, value, param, ctx) -> tuple[int, ...]:
        if isinstance(value, tuple):
            return value
        try:
            entries = tuple(int(part) for part in str(value).split(","))
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of integers", param, ctx)
        if any(entry < 0 for entry in entries):
            self.fail(f"{value!r} contains a negative entry", param, ctx)
        return entries


VECTOR = VectorLiteral()


def _welcome() -> None:
    try:
        project_version = version(distribution_name=SERVICE_NAME)
    except Exception:
        project_version = "unknown"
    log_debug(f"Version: {project_version}.")


@contextmanager
def _usage_errors() -> Iterator[None]:
    try:
        yield
    except FormulaBranchError as exc:
        log_error(str(exc))
        sys.exit(EXIT_MISMATCH)
    except BudgetExhaustedError as exc:
        log_error(str(exc))
        sys.exit(EXIT_INCOMPLETE)
    except ValueError as exc:
        log_error(str(exc))
        sys.exit(EXIT_USAGE)


def _output_options(command: Callable) -> Callable:
    command = click.option(
        "--jobs",
        type=click.IntRange(min=1),
        default=None,
        help="Worker processes for enumeration. Does not change the output.",
    )(command)
    return click.option(
        "--format",
        "output_format",
        type=click.Choice([f.value for f in OutputFormat], case_sensitive=False),
        default=None,
        help="tsv, json or pretty.",
    )(command)


def _field_options(command: Callable) -> Callable:
    command = click.option(
        "--modulus",
        type=VECTOR,
        default=None,
        help="Explicit monic modulus c_0,...,c_m (default: first irreducible).",
    )(command)
    command = click.option(
        "--m", "m", type=click.IntRange(min=1), default=1, show_default=True
    )(command)
    return click.option("--p", "p", type=int, required=True)(command)


def _state() -> _CliState:
    return click.get_current_context().find_object(_CliState) or _CliState(
        settings=load_pairdist_settings()
    )


def _format(local: str | None) -> OutputFormat:
    state = _state()
    if local is not None:
        return OutputFormat(local.lower())
    return state.format or state.settings.format


def _jobs(local: int | None) -> int:
    state = _state()
    return local or state.jobs or state.settings.jobs


def _field(p: int, m: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if modulus is None:
        return build_field(p, m)
    if len(modulus) - 1 != m:
        raise InvalidParametersError(
            f"--modulus has degree {len(modulus) - 1} but --m is {m}"
        )
    return field_from_modulus(p, modulus)


def _element(fs: FieldSpec, coeffs: tuple[int, ...]) -> RingElement:
    if any(c >= fs.q for c in coeffs):
        raise InvalidParametersError(f"Vector entries must lie in [0, {fs.q})")
    return RingElement(n=len(coeffs), coeffs=coeffs)


def _emit(records: list[Record], columns: list[str], output_format: str | None) -> None:
    click.echo(render(records, columns, _format(output_format)), nl=False)


def _exit_on_verdict(verdict: VerificationStatus) -> None:
    match verdict:
        case VerificationStatus.MISMATCH:
            sys.exit(EXIT_MISMATCH)
        case VerificationStatus.SKIPPED:
            sys.exit(EXIT_INCOMPLETE)


@click.group()
@click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat], case_sensitive=False),
    default=None,
    help="Default output format for every command.",
)
@click.option("--jobs", type=click.IntRange(min=1), default=None)
@click.version_option(package_name=SERVICE_NAME)
@click.pass_context
def main(ctx: click.Context, output_format: str | None, jobs: int | None) -> None:
    """Distances of the repeated-root cyclic codes <(x-1)^i> under symbol-pair reads."""
    try:
        settings = load_pairdist_settings()
    except ValueError as exc:
        log_error(str(exc))
        sys.exit(EXIT_USAGE)
    ctx.obj = _CliState(
        settings=settings,
        format=OutputFormat(output_format.lower()) if output_format else None,
        jobs=jobs,
    )
    _welcome()


@main.command()
@_field_options
@click.option("--e", "e", type=click.IntRange(min=1), required=True)
@click.option(
    "--verify",
    "with_oracle",
    is_flag=True,
    help="Add a column with the brute-force verdict for each row.",
)
@click.option("--max-enum", type=click.IntRange(min=1), default=None)
@_output_options
def table(
    p: int,
    m: int,
    modulus: tuple[int, ...] | None,
    e: int,
    with_oracle: bool,
    max_enum: int | None,
    output_format: str | None,
    jobs: int | None,
) -> None:
    """Closed-form Hamming and pair distances for every i in [0, p^e]."""
    columns = ["i", "dim", "d_h", "d_p", "branch", "mds_pair"]
    report = None
    with _usage_errors():
        _field(p, m, modulus)
        if with_oracle:
            budget = _state().settings.budget(max_enum)
            rows, report = verified_table(
                p, e, m, budget=budget, jobs=_jobs(jobs), modulus=modulus
            )
            columns.append("verified")
        else:
            rows = distance_table(p, e, m, modulus)
    records: list[Record] = [
        {
            "i": row.i,
            "dim": row.dimension,
            "d_h": row.d_h,
            "d_p": row.d_p,
            "branch": row.branch,
            "mds_pair": row.mds_pair,
            "verified": row.verified.value if row.verified else None,
        }
        for row in rows
    ]
    _emit(records, columns, output_format)
    if report is not None:
        log_verification_summary(report)
        _exit_on_verdict(report.verdict)


@main.command()
@_field_options
@click.option("--e", "e", type=click.IntRange(min=1), required=True)
@click.option(
    "--max-enum",
    type=click.IntRange(min=1),
    default=None,
    help="Codewords to enumerate per i before skipping it.",
)
@_output_options
def verify(
    p: int,
    m: int,
    modulus: tuple[int, ...] | None,
    e: int,
    max_enum: int | None,
    output_format: str | None,
    jobs: int | None,
) -> None:
    """Check the closed forms against a brute-force minimum-weight search."""
    with _usage_errors():
        _field(p, m, modulus)
        budget = _state().settings.budget(max_enum)
        report = verify_family(p, e, m, budget=budget, jobs=_jobs(jobs), modulus=modulus)
    records: list[Record] = [
        {
            "i": entry.i,
            "formula_dh": entry.formula_dh,
            "oracle_dh": entry.oracle_dh,
            "formula_dp": entry.formula_dp,
            "oracle_dp": entry.oracle_dp,
            "witness": entry.witness.coeffs if entry.witness else None,
            "status": entry.status.value,
        }
        for entry in report.entries
    ]
    _emit(
        records,
        ["i", "formula_dh", "oracle_dh", "formula_dp", "oracle_dp", "witness", "status"],
        output_format,
    )
    log_verification_summary(report)
    _exit_on_verdict(report.verdict)


@main.command()
@_field_options
@click.option("--vector", type=VECTOR, required=True)
@_output_options
def weight(
    p: int,
    m: int,
    modulus: tuple[int, ...] | None,
    vector: tuple[int, ...],
    output_format: str | None,
    jobs: int | None,
) -> None:
    """Hamming weight, pair weight and pair read of one vector."""
    with _usage_errors():
        x = _element(_field(p, m, modulus), vector)
        record: Record = {
            "n": x.n,
            "omega_h": hamming_weight(x),
            "omega_p": pair_weight(x),
            "pairs": " ".join(f"({a},{b})" for a, b in pair_read(x).pairs),
        }
    _emit([record], ["n", "omega_h", "omega_p", "pairs"], output_format)


@main.command()
@_field_options
@click.option("--x", "x_literal", type=VECTOR, required=True)
@click.option("--y", "y_literal", type=VECTOR, required=True)
@_output_options
def pairdist(
    p: int,
    m: int,
    modulus: tuple[int, ...] | None,
    x_literal: tuple[int, ...],
    y_literal: tuple[int, ...],
    output_format: str | None,
    jobs: int | None,
) -> None:
    """Hamming distance, run count and pair distance of two vectors."""
    with _usage_errors():
        fs = _field(p, m, modulus)
        x, y = _element(fs, x_literal), _element(fs, y_literal)
        d_p = pair_distance(x, y)
        runs = run_count(x, y)
    d_h = len(runs.support)
    expected = None if d_h == 0 else (x.n if d_h == x.n else d_h + runs.block_count)
    identity = None if expected is None else ("holds" if d_p == expected else "violated")
    record: Record = {"d_h": d_h, "l": runs.block_count, "d_p": d_p, "identity": identity}
    _emit([record], ["d_h", "l", "d_p", "identity"], output_format)
    if identity == "violated":
        log_error(f"d_p={d_p} but the run decomposition predicts {expected}")
        sys.exit(EXIT_MISMATCH)


@main.command()
@_field_options
@click.option("--e", "e", type=click.IntRange(min=1), required=True)
@_output_options
def mds(
    p: int,
    m: int,
    modulus: tuple[int, ...] | None,
    e: int,
    output_format: str | None,
    jobs: int | None,
) -> None:
    """Exponents i whose code meets the pair Singleton bound."""
    with _usage_errors():
        _field(p, m, modulus)
        records: list[Record] = [
            {"i": row.i, "dimension": row.dimension, "d_p": row.d_p}
            for row in distance_table(p, e, m, modulus)
            if row.mds_pair
        ]
    _emit(records, ["i", "dimension", "d_p"], output_format)


@main.command()
@_field_options
@click.option("--e", "e", type=click.IntRange(min=1), required=True)
@click.option("--i", "i", type=int, required=True)
@click.option("--t", "t", type=click.IntRange(min=0), required=True)
@click.option("--trials", type=click.IntRange(min=1), default=DEFAULT_TRIALS, show_default=True)
@click.option("--seed", type=int, required=True)
@click.option("--max-enum", type=click.IntRange(min=1), default=None)
@_output_options
def simulate(
    p: int,
    m: int,
    modulus: tuple[int, ...] | None,
    e: int,
    i: int,
    t: int,
    trials: int,
    seed: int,
    max_enum: int | None,
    output_format: str | None,
    jobs: int | None,
) -> None:
    """Decode random codewords after t pair errors and report the success rate."""
    with _usage_errors():
        _field(p, m, modulus)
        spec = CodeSpec(p=p, m=m, e=e, i=i, modulus=modulus)
        result = correctability_experiment(
            spec,
            t,
            trials,
            seed,
            budget=_state().settings.budget(max_enum),
            jobs=_jobs(jobs),
        )
    record: Record = {
        "p": p,
        "e": e,
        "m": m,
        "i": i,
        "t": t,
        "trials": trials,
        "seed": seed,
        "d_p": result.d_p,
        "guarantee_radius": result.guarantee_radius,
        "successes": result.successes,
        "success_rate": result.success_rate,
    }
    _emit([record], list(record), output_format)
    log_experiment_summary(result)
    if result.guaranteed and result.successes < result.trials:
        sys.exit(EXIT_MISMATCH)


@main.command()
@_field_options
@click.option("--e", "e", type=click.IntRange(min=1), required=True)
@_output_options
def witnesses(
    p: int,
    m: int,
    modulus: tuple[int, ...] | None,
    e: int,
    output_format: str | None,
    jobs: int | None,
) -> None:
    """Measure the pair weights of the generators that attain the minimum."""
    with _usage_errors():
        _field(p, m, modulus)
        checks = generator_weight_witnesses(p, e, m, modulus)
    records: list[Record] = [
        {
            "identity": check.identity,
            "i": check.i,
            "claimed": check.claimed,
            "measured": check.measured,
            "holds": check.holds,
        }
        for check in checks
    ]
    _emit(records, ["identity", "i", "claimed", "measured", "holds"], output_format)
    failed = [check for check in checks if not check.holds]
    for check in failed:
        log_error(f"{check.identity}: measured {check.measured}")
    if failed:
        sys.exit(EXIT_MISMATCH)


@main.command()
@_field_options
@click.option("--n", "n", type=int, required=True)
@click.option(
    "--sample",
    type=click.IntRange(min=1),
    default=None,
    help="Check COUNT random pairs instead of all of them.",
)
@click.option("--seed", type=int, default=None)
@_output_options
def prop22(
    p: int,
    m: int,
    modulus: tuple[int, ...] | None,
    n: int,
    sample: int | None,
    seed: int | None,
    output_format: str | None,
    jobs: int | None,
) -> None:
    """Check d_p = d_H + L over pairs of vectors of length n."""
    with _usage_errors():
        fs = _field(p, m, modulus)
        if sample is not None and seed is None:
            raise InvalidParametersError("--sample needs --seed")
        report = verify_prop22_exhaustive(
            fs,
            n,
            mode=Prop22Mode.EXHAUSTIVE if sample is None else Prop22Mode.SAMPLE,
            count=sample,
            seed=seed,
        )
    record: Record = {
        "q": report.q,
        "n": report.n,
        "mode": report.mode.value,
        "pairs_checked": report.pairs_checked,
        "violations": len(report.violations),
    }
    _emit([record], list(record), output_format)
    for violation in report.violations[:10]:
        log_error(
            f"x={list(violation.x)} y={list(violation.y)}: d_H={violation.d_h}, "
            f"L={violation.block_count}, d_p={violation.d_p}"
        )
    if not report.ok:
        sys.exit(EXIT_MISMATCH)
