"""
Symbol-pair read channel: inject pair errors into a read vector and decode by
exhaustive search for the codeword whose pair read is closest.
"""

from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

import numpy as np

from .codes import closed_form_pair_distance, code_field, encode
from .errors import BudgetExhaustedError, InvalidParametersError
from .gf import field_tables
from .logger import log_debug
from .models import (
    CodeSpec,
    EnumBudget,
    ExperimentResult,
    FieldElement,
    FieldSpec,
    PairErrorPattern,
    PairVector,
    RingElement,
    TrialOutcome,
)
from .oracle import iter_codewords
from .pairmetrics import pair_read, pair_read_of, pair_seq_distance_of
from .polyring import make_poly

Seed = int | Sequence[int] | np.random.Generator
Coeffs = tuple[FieldElement, ...]


def inject_pair_errors(
    fs: FieldSpec, u: PairVector, t: int, seed: Seed
) -> tuple[PairVector, PairErrorPattern]:
    """
    Replace t distinct pair reads, each by a uniformly chosen different pair.

    The corrupted reads need not agree on the symbols they share.
    """
    if not 0 <= t <= u.n:
        raise InvalidParametersError(f"Error count must lie in [0, {u.n}], got {t}")
    rng = np.random.default_rng(seed)
    q = fs.q
    positions = sorted(int(j) for j in rng.choice(u.n, size=t, replace=False))
    pairs = list(u.pairs)
    replacements = []
    for position in positions:
        a, b = pairs[position]
        original = a * q + b
        drawn = int(rng.integers(0, q * q - 1))
        if drawn >= original:
            drawn += 1
        replacement = divmod(drawn, q)
        pairs[position] = replacement
        replacements.append(replacement)
    return (
        PairVector(n=u.n, pairs=tuple(pairs)),
        PairErrorPattern(positions=tuple(positions), replacements=tuple(replacements)),
    )


@lru_cache(maxsize=8)
def _codebook(spec: CodeSpec, max_codewords: int) -> tuple[tuple[Coeffs, tuple], ...]:
    total = spec.q**spec.dimension
    if total > max_codewords:
        raise BudgetExhaustedError(enumerated=0)
    words: list[Coeffs] = [(0,) * spec.n]
    if spec.dimension:
        words.extend(iter_codewords(spec, [range(1, total)]))
    return tuple((word, pair_read_of(word)) for word in words)


def _is_scalar_multiple(fs: FieldSpec, a: Coeffs, b: Coeffs) -> bool:
    tables = field_tables(fs)
    lead = next((j for j, c in enumerate(a) if c), None)
    if lead is None or not b[lead]:
        return False
    factor = tables.mul[b[lead]][tables.inv[a[lead]]]
    return all(tables.mul[factor][x] == y for x, y in zip(a, b))


def decode_min_pair_distance(
    spec: CodeSpec, received: PairVector, budget: EnumBudget | None = None
) -> RingElement | None:
    """
    Nearest codeword in pair-read space, or None when the nearest is ambiguous.

    Ties inside one scalar class resolve to the first codeword in enumeration
    order; ties across classes are reported as a failure.
    """
    budget = budget or EnumBudget()
    if received.n != spec.n:
        raise InvalidParametersError(
            f"Received length {received.n} != code length {spec.n}"
        )
    fs = code_field(spec)
    best: Coeffs | None = None
    best_distance = received.n + 1
    ambiguous = False
    for word, reads in _codebook(spec, budget.max_codewords):
        distance = pair_seq_distance_of(reads, received.pairs)
        if distance < best_distance:
            best, best_distance, ambiguous = word, distance, False
        elif distance == best_distance and best is not None:
            if not _is_scalar_multiple(fs, best, word):
                ambiguous = True
    if best is None or ambiguous:
        return None
    return RingElement(n=spec.n, coeffs=best)


def _run_trial(args: tuple[CodeSpec, int, int, int, EnumBudget]) -> TrialOutcome:
    spec, t, seed, trial, budget = args
    rng = np.random.default_rng([seed, trial])
    fs = code_field(spec)
    message = [int(c) for c in rng.integers(0, spec.q, size=spec.dimension)]
    transmitted = encode(spec, make_poly(message))
    received, pattern = inject_pair_errors(fs, pair_read(transmitted), t, rng)
    decoded = decode_min_pair_distance(spec, received, budget)
    success = decoded == transmitted
    if not success:
        log_debug(
            f"Trial {trial} failed: errors at {list(pattern.positions)}, "
            f"decoded {'ambiguous' if decoded is None else list(decoded.coeffs)}"
        )
    return TrialOutcome(
        transmitted=transmitted,
        received=received,
        pattern=pattern,
        decoded=decoded,
        success=success,
    )


def correctability_experiment(
    spec: CodeSpec,
    t: int,
    trials: int,
    seed: int,
    budget: EnumBudget | None = None,
    jobs: int = 1,
) -> ExperimentResult:
    """Encode random codewords, corrupt t pair reads each, and count exact decodes."""
    budget = budget or EnumBudget()
    if trials < 1:
        raise InvalidParametersError(f"trials must be at least 1, got {trials}")
    if not 0 <= t <= spec.n:
        raise InvalidParametersError(f"t must lie in [0, {spec.n}], got {t}")
    if spec.dimension < 1:
        raise InvalidParametersError("The zero code carries no information")
    d_p = closed_form_pair_distance(spec)
    # Surface budget problems before any trial runs.
    _codebook(spec, budget.max_codewords)
    work = [(spec, t, seed, trial, budget) for trial in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            outcomes = list(executor.map(_run_trial, work, chunksize=16))
    else:
        outcomes = [_run_trial(item) for item in work]
    return ExperimentResult(
        spec=spec,
        t=t,
        trials=trials,
        seed=seed,
        d_p=d_p,
        guarantee_radius=(d_p - 1) // 2,
        outcomes=outcomes,
    )
