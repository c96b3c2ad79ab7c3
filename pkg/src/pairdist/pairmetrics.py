from collections.abc import Sequence

from .errors import InvalidParametersError
from .models import FieldElement, Pair, PairVector, RingElement, RunProfile


def _check_pairable(n: int) -> None:
    if n < 2:
        raise InvalidParametersError(
            f"A cyclic pair read needs at least two positions, got n={n}"
        )


def _check_same_length(x: RingElement, y: RingElement) -> None:
    if x.n != y.n:
        raise InvalidParametersError(f"Vector lengths differ: {x.n} != {y.n}")


def pair_read_of(coeffs: Sequence[FieldElement]) -> tuple[Pair, ...]:
    n = len(coeffs)
    return tuple((coeffs[i], coeffs[(i + 1) % n]) for i in range(n))


def hamming_weight_of(coeffs: Sequence[FieldElement]) -> int:
    return sum(1 for c in coeffs if c)


def pair_weight_of(coeffs: Sequence[FieldElement]) -> int:
    n = len(coeffs)
    return sum(1 for i in range(n) if coeffs[i] or coeffs[(i + 1) % n])


def pair_seq_distance_of(u: Sequence[Pair], v: Sequence[Pair]) -> int:
    return sum(1 for a, b in zip(u, v) if a != b)


def run_count_of(
    x: Sequence[FieldElement], y: Sequence[FieldElement]
) -> tuple[frozenset[int], int]:
    n = len(x)
    support = frozenset(j for j in range(n) if x[j] != y[j])
    if not support:
        return support, 0
    if len(support) == n:
        return support, 1
    return support, sum(1 for j in support if (j - 1) % n not in support)


def pair_read(x: RingElement) -> PairVector:
    _check_pairable(x.n)
    return PairVector(n=x.n, pairs=pair_read_of(x.coeffs))


def hamming_weight(x: RingElement) -> int:
    return hamming_weight_of(x.coeffs)


def pair_weight(x: RingElement) -> int:
    _check_pairable(x.n)
    return pair_weight_of(x.coeffs)


def hamming_distance(x: RingElement, y: RingElement) -> int:
    _check_same_length(x, y)
    return sum(1 for a, b in zip(x.coeffs, y.coeffs) if a != b)


def pair_distance(x: RingElement, y: RingElement) -> int:
    _check_same_length(x, y)
    _check_pairable(x.n)
    return pair_seq_distance_of(pair_read_of(x.coeffs), pair_read_of(y.coeffs))


def pair_seq_distance(u: PairVector, v: PairVector) -> int:
    if u.n != v.n:
        raise InvalidParametersError(f"Pair vector lengths differ: {u.n} != {v.n}")
    return pair_seq_distance_of(u.pairs, v.pairs)


def run_count(x: RingElement, y: RingElement) -> RunProfile:
    """
    Count the maximal runs of cyclically consecutive positions where x and y differ.

    Positions n-1 and 0 are adjacent. Full support counts as a single run.
    """
    _check_same_length(x, y)
    support, block_count = run_count_of(x.coeffs, y.coeffs)
    return RunProfile(support=support, block_count=block_count)
