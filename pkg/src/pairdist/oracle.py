"""
Brute-force ground truth for the closed forms.

Codewords are enumerated as message polynomials f in ascending order of their
base-q digit encoding (f_0 least significant) and encoded as f(x) * (x-1)^i.
The oracle deliberately uses nothing beyond scalar-class reduction.
"""

from collections.abc import Iterator
from concurrent.futures import Executor, ProcessPoolExecutor
from contextlib import nullcontext
from itertools import product

import numpy as np

from .codes import (
    check_family,
    closed_form_hamming_distance,
    closed_form_pair_distance,
    code_field,
    distance_table,
    generator,
)
from .constants import MAX_PROP22_PAIRS
from .errors import BudgetExhaustedError, InvalidParametersError
from .gf import field_tables, to_digits
from .logger import log_debug
from .models import (
    CodeSpec,
    DistanceRecord,
    EnumBudget,
    FieldElement,
    FieldSpec,
    MinimumWeights,
    Prop22Mode,
    Prop22Report,
    Prop22Violation,
    RingElement,
    VerificationEntry,
    VerificationReport,
    VerificationStatus,
)
from .pairmetrics import (
    hamming_weight_of,
    pair_read_of,
    pair_seq_distance_of,
    pair_weight_of,
    run_count_of,
)
from .polyring import cyclic_shift_coeffs, ring_zero

Coeffs = tuple[FieldElement, ...]
Best = tuple[int, Coeffs]


def message_ranges(q: int, dimension: int, reduce_by_scalars: bool) -> list[range]:
    """Integer encodings of the nonzero messages to enumerate, in order."""
    if not reduce_by_scalars:
        return [range(1, q**dimension)]
    # Leading coefficient 1 at degree d means the encoding lies in [q^d, 2q^d).
    return [range(q**d, 2 * q**d) for d in range(dimension)]


def _take(ranges: list[range], limit: int) -> list[range]:
    taken: list[range] = []
    for r in ranges:
        if limit <= 0:
            break
        part = r[:limit]
        taken.append(part)
        limit -= len(part)
    return taken


def _split(ranges: list[range], jobs: int) -> list[list[range]]:
    total = sum(len(r) for r in ranges)
    size = -(-total // jobs) if total else 0
    chunks: list[list[range]] = []
    current: list[range] = []
    room = size
    for r in ranges:
        while len(r):
            part = r[:room]
            current.append(part)
            room -= len(part)
            r = r[len(part) :]
            if room == 0:
                chunks.append(current)
                current, room = [], size
    if current:
        chunks.append(current)
    return chunks


class _ScaledRows:
    """Lazily computed a * x^j * (x-1)^i as coefficient tuples."""

    def __init__(self, spec: CodeSpec) -> None:
        tables = field_tables(code_field(spec))
        self._mul = tables.mul
        self.add = tables.add
        self._generator = generator(spec).coeffs
        self._cache: dict[tuple[int, int], Coeffs] = {}

    def __call__(self, j: int, a: FieldElement) -> Coeffs:
        key = (j, a)
        if key not in self._cache:
            row = self._mul[a]
            self._cache[key] = tuple(
                row[c] for c in cyclic_shift_coeffs(self._generator, j)
            )
        return self._cache[key]


def _iter_range(spec: CodeSpec, scaled: _ScaledRows, span: range) -> Iterator[Coeffs]:
    add = scaled.add
    q, k = spec.q, spec.dimension
    if not len(span):
        return

    def level_sum(level: int) -> Coeffs:
        upper = partial[level + 1]
        if digits[level] == 0:
            return upper
        return tuple(add[a][b] for a, b in zip(upper, scaled(level, digits[level])))

    digits = to_digits(span.start, q, k)
    partial: list[Coeffs] = [(0,) * spec.n] * (k + 1)
    for level in range(k - 1, -1, -1):
        partial[level] = level_sum(level)
    for _ in span:
        yield partial[0]
        j = 0
        while j < k and digits[j] == q - 1:
            digits[j] = 0
            j += 1
        if j == k:
            return
        digits[j] += 1
        for level in range(j, -1, -1):
            partial[level] = level_sum(level)


def iter_codewords(spec: CodeSpec, ranges: list[range]) -> Iterator[Coeffs]:
    scaled = _ScaledRows(spec)
    for span in ranges:
        yield from _iter_range(spec, scaled, span)


def codeword_count(spec: CodeSpec, reduce_by_scalars: bool) -> int:
    """Number of messages the oracle would enumerate for `spec`."""
    return sum(len(r) for r in message_ranges(spec.q, spec.dimension, reduce_by_scalars))


def enumerate_codewords(
    spec: CodeSpec, budget: EnumBudget | None = None
) -> Iterator[RingElement]:
    """Yield nonzero codewords; raise BudgetExhaustedError if the budget runs out first."""
    budget = budget or EnumBudget()
    if spec.dimension < 1:
        raise InvalidParametersError("The zero code has no nonzero codewords")
    ranges = message_ranges(spec.q, spec.dimension, budget.reduce_by_scalars)
    total = sum(len(r) for r in ranges)
    limit = min(total, budget.max_codewords)
    for coeffs in iter_codewords(spec, _take(ranges, limit)):
        yield RingElement(n=spec.n, coeffs=coeffs)
    if limit < total:
        raise BudgetExhaustedError(enumerated=limit)


def _scan_chunk(args: tuple[CodeSpec, list[range]]) -> tuple[Best | None, Best | None, int]:
    spec, ranges = args
    best_pair: Best | None = None
    best_hamming: Best | None = None
    count = 0
    for coeffs in iter_codewords(spec, ranges):
        count += 1
        pair_key = (pair_weight_of(coeffs), coeffs)
        if best_pair is None or pair_key < best_pair:
            best_pair = pair_key
        hamming_key = (hamming_weight_of(coeffs), coeffs)
        if best_hamming is None or hamming_key < best_hamming:
            best_hamming = hamming_key
    return best_pair, best_hamming, count


def _smaller(a: Best | None, b: Best | None) -> Best | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _as_weighted(spec: CodeSpec, best: Best | None) -> tuple[int, RingElement] | None:
    if best is None:
        return None
    return best[0], RingElement(n=spec.n, coeffs=best[1])


def minimum_weights(
    spec: CodeSpec,
    budget: EnumBudget | None = None,
    jobs: int = 1,
    executor: Executor | None = None,
) -> MinimumWeights:
    """
    Exact minimum Hamming and pair weights over the nonzero codewords.

    Ties are broken by the lexicographically smaller witness so the result
    does not depend on how the search is split across workers. A caller
    scanning many codes can pass its own executor to reuse one pool.
    """
    budget = budget or EnumBudget()
    if spec.dimension == 0:
        zero = ring_zero(spec.n)
        return MinimumWeights(
            d_h=0, hamming_witness=zero, d_p=0, pair_witness=zero, enumerated=0
        )
    ranges = message_ranges(spec.q, spec.dimension, budget.reduce_by_scalars)
    total = sum(len(r) for r in ranges)
    limit = min(total, budget.max_codewords)
    chunks = _split(_take(ranges, limit), max(1, jobs))
    work = [(spec, chunk) for chunk in chunks]
    if executor is not None and len(work) > 1:
        results = list(executor.map(_scan_chunk, work))
    elif jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_chunk, work))
    else:
        results = [_scan_chunk(item) for item in work]

    best_pair: Best | None = None
    best_hamming: Best | None = None
    for chunk_pair, chunk_hamming, _ in results:
        best_pair = _smaller(best_pair, chunk_pair)
        best_hamming = _smaller(best_hamming, chunk_hamming)

    if limit < total or best_pair is None or best_hamming is None:
        raise BudgetExhaustedError(
            enumerated=limit,
            best_pair=_as_weighted(spec, best_pair),
            best_hamming=_as_weighted(spec, best_hamming),
        )
    return MinimumWeights(
        d_h=best_hamming[0],
        hamming_witness=RingElement(n=spec.n, coeffs=best_hamming[1]),
        d_p=best_pair[0],
        pair_witness=RingElement(n=spec.n, coeffs=best_pair[1]),
        enumerated=limit,
    )


def min_pair_weight_bruteforce(
    spec: CodeSpec, budget: EnumBudget | None = None, jobs: int = 1
) -> tuple[int, RingElement]:
    result = minimum_weights(spec, budget, jobs)
    return result.d_p, result.pair_witness


def min_hamming_weight_bruteforce(
    spec: CodeSpec, budget: EnumBudget | None = None, jobs: int = 1
) -> tuple[int, RingElement]:
    result = minimum_weights(spec, budget, jobs)
    return result.d_h, result.hamming_witness


def scalar_reduction_agrees(spec: CodeSpec, budget: EnumBudget | None = None) -> bool:
    budget = budget or EnumBudget()
    reduced = minimum_weights(spec, budget.model_copy(update={"reduce_by_scalars": True}))
    full = minimum_weights(spec, budget.model_copy(update={"reduce_by_scalars": False}))
    return (reduced.d_h, reduced.d_p) == (full.d_h, full.d_p)


def _verify_one(
    spec: CodeSpec, budget: EnumBudget, jobs: int, executor: Executor | None
) -> VerificationEntry:
    formula_dh = closed_form_hamming_distance(spec)
    formula_dp = closed_form_pair_distance(spec)
    needed = codeword_count(spec, budget.reduce_by_scalars)
    if needed > budget.max_codewords:
        # A partial scan could never certify the entry, so skip without scanning.
        log_debug(f"i={spec.i}: skipped, {needed} codeword(s) over budget")
        return VerificationEntry(
            i=spec.i,
            formula_dh=formula_dh,
            formula_dp=formula_dp,
            status=VerificationStatus.SKIPPED,
        )
    found = minimum_weights(spec, budget, jobs, executor)
    status = (
        VerificationStatus.MATCH
        if (found.d_h, found.d_p) == (formula_dh, formula_dp)
        else VerificationStatus.MISMATCH
    )
    log_debug(
        f"i={spec.i}: d_H {found.d_h}/{formula_dh}, d_p {found.d_p}/{formula_dp} "
        f"over {found.enumerated} codeword(s) -> {status.value}"
    )
    return VerificationEntry(
        i=spec.i,
        formula_dh=formula_dh,
        oracle_dh=found.d_h,
        formula_dp=formula_dp,
        oracle_dp=found.d_p,
        witness=found.pair_witness,
        status=status,
    )


def verify_family(
    p: int,
    e: int,
    m: int = 1,
    budget: EnumBudget | None = None,
    jobs: int = 1,
    modulus: tuple[int, ...] | None = None,
) -> VerificationReport:
    check_family(p, e, m)
    budget = budget or EnumBudget()
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else nullcontext()
    with pool as executor:
        entries = [
            _verify_one(
                CodeSpec(p=p, m=m, e=e, i=i, modulus=modulus), budget, jobs, executor
            )
            for i in range(p**e + 1)
        ]
    return VerificationReport(p=p, e=e, m=m, entries=entries)


def verified_table(
    p: int,
    e: int,
    m: int = 1,
    budget: EnumBudget | None = None,
    jobs: int = 1,
    modulus: tuple[int, ...] | None = None,
) -> tuple[list[DistanceRecord], VerificationReport]:
    """The closed-form table with each row marked by its oracle verdict."""
    report = verify_family(p, e, m, budget, jobs, modulus)
    statuses = {entry.i: entry.status for entry in report.entries}
    rows = [
        row.model_copy(update={"verified": statuses[row.i]})
        for row in distance_table(p, e, m, modulus)
    ]
    return rows, report


def _prop22_check(x: Coeffs, y: Coeffs) -> Prop22Violation | None:
    support, block_count = run_count_of(x, y)
    d_h = len(support)
    if d_h == 0:
        return None
    d_p = pair_seq_distance_of(pair_read_of(x), pair_read_of(y))
    expected = len(x) if d_h == len(x) else d_h + block_count
    if d_p == expected:
        return None
    return Prop22Violation(x=x, y=y, d_h=d_h, block_count=block_count, d_p=d_p)


def verify_prop22_exhaustive(
    q_spec: FieldSpec,
    n: int,
    mode: Prop22Mode = Prop22Mode.EXHAUSTIVE,
    count: int | None = None,
    seed: int | None = None,
) -> Prop22Report:
    """Check d_p = d_H + L for 0 < d_H < n, and d_p = n when d_H = n."""
    if n < 2:
        raise InvalidParametersError(f"Pair reads need n >= 2, got {n}")
    q = q_spec.q
    violations: list[Prop22Violation] = []
    checked = 0
    match mode:
        case Prop22Mode.EXHAUSTIVE:
            if q ** (2 * n) > MAX_PROP22_PAIRS:
                raise InvalidParametersError(
                    f"{q}^{2 * n} ordered pairs exceed the exhaustive limit of "
                    f"{MAX_PROP22_PAIRS}; use sampling"
                )
            vectors = list(product(range(q), repeat=n))
            pairs = ((x, y) for x in vectors for y in vectors)
        case Prop22Mode.SAMPLE:
            if count is None or count < 1 or seed is None:
                raise InvalidParametersError("Sampling needs a positive count and a seed")
            draws = np.random.default_rng(seed).integers(0, q, size=(count, 2, n))
            pairs = (
                (tuple(int(c) for c in draw[0]), tuple(int(c) for c in draw[1]))
                for draw in draws
            )
    for x, y in pairs:
        if x == y:
            continue
        checked += 1
        violation = _prop22_check(x, y)
        if violation is not None:
            violations.append(violation)
    return Prop22Report(
        q=q, n=n, mode=mode, pairs_checked=checked, violations=violations
    )
