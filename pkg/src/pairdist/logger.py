from datetime import UTC, datetime

import click

from .config import load_pairdist_settings
from .constants import SERVICE_NAME
from .models import ExperimentResult, VerificationReport, VerificationStatus


def _log(msg: str, fg: str | None, error: bool = False) -> None:
    text = str(datetime.now(UTC).strftime("%H:%M:%S")) + " "
    if error:
        text += " [ERROR]"
    text += f" [{SERVICE_NAME}] {msg}"
    # stdout is reserved for rendered results.
    click.echo(message=click.style(text=text, fg=fg), err=True, color=True)


def log_debug(msg) -> None:
    if load_pairdist_settings().debug:
        _log(msg, None)


def log_info(msg) -> None:
    _log(msg, None)


def log_warn(msg) -> None:
    _log(msg, "yellow")


def log_error(msg) -> None:
    _log(msg, "red", error=True)


def log_verification_summary(report: VerificationReport) -> None:
    counts = {status: 0 for status in VerificationStatus}
    for entry in report.entries:
        counts[entry.status] += 1
    summary = (
        f"p={report.p}, e={report.e}, m={report.m}: "
        f"{counts[VerificationStatus.MATCH]} match, "
        f"{counts[VerificationStatus.MISMATCH]} mismatch, "
        f"{counts[VerificationStatus.SKIPPED]} skipped"
    )
    match report.verdict:
        case VerificationStatus.MATCH:
            log_info(summary)
        case VerificationStatus.SKIPPED:
            log_warn(summary + " (raise --max-enum to certify the rest)")
        case VerificationStatus.MISMATCH:
            log_error(summary)
            for entry in report.entries:
                if entry.status == VerificationStatus.MISMATCH:
                    log_error(
                        f"i={entry.i}: formula d_H={entry.formula_dh} d_p={entry.formula_dp}, "
                        f"oracle d_H={entry.oracle_dh} d_p={entry.oracle_dp}"
                    )


def log_experiment_summary(result: ExperimentResult) -> None:
    spec = result.spec
    log_info(
        f"p={spec.p}, e={spec.e}, m={spec.m}, i={spec.i}, t={result.t}: "
        f"{result.successes} of {result.trials} trial(s) decoded "
        f"(d_p={result.d_p}, guaranteed up to t={result.guarantee_radius})"
    )
    if result.guaranteed and result.successes < result.trials:
        log_error(
            f"{result.trials - result.successes} failure(s) inside the guaranteed radius"
        )
