from concurrent.futures import ThreadPoolExecutor
from unittest.mock import patch

import pytest

from src.pairdist.codes import contains, generator
from src.pairdist.errors import BudgetExhaustedError, InvalidParametersError
from src.pairdist.gf import build_field
from src.pairdist.models import (
    CodeSpec,
    EnumBudget,
    Prop22Mode,
    VerificationStatus,
)
from src.pairdist.oracle import (
    codeword_count,
    enumerate_codewords,
    message_ranges,
    min_hamming_weight_bruteforce,
    min_pair_weight_bruteforce,
    minimum_weights,
    scalar_reduction_agrees,
    verified_table,
    verify_family,
    verify_prop22_exhaustive,
)
from src.pairdist.pairmetrics import hamming_weight, pair_weight

FULL = EnumBudget(reduce_by_scalars=False)


def _spec(p: int, e: int, i: int, m: int = 1) -> CodeSpec:
    return CodeSpec(p=p, m=m, e=e, i=i)


class TestEnumeration:
    def test_message_ranges(self):
        assert message_ranges(3, 2, reduce_by_scalars=False) == [range(1, 9)]
        assert message_ranges(3, 2, reduce_by_scalars=True) == [range(1, 2), range(3, 6)]

    @pytest.mark.parametrize(
        "spec, budget, expected",
        [
            (_spec(3, 2, 8), EnumBudget(), 1),
            (_spec(2, 2, 2), FULL, 3),
            (_spec(3, 2, 7), EnumBudget(), 4),
            (_spec(3, 2, 7), FULL, 8),
            (_spec(2, 2, 2, m=2), EnumBudget(), 5),
        ],
    )
    def test_counts(self, spec, budget, expected):
        codewords = list(enumerate_codewords(spec, budget))
        assert len(codewords) == expected
        assert codeword_count(spec, budget.reduce_by_scalars) == expected

    def test_order_follows_message_encoding(self):
        spec = _spec(2, 2, 2)
        g = generator(spec).coeffs
        codewords = [c.coeffs for c in enumerate_codewords(spec, FULL)]
        # messages 1, x, 1 + x
        assert codewords == [g, (g[3], g[0], g[1], g[2]), (1, 1, 1, 1)]

    def test_every_codeword_is_in_the_code(self):
        spec = _spec(3, 2, 5)
        for codeword in enumerate_codewords(spec, FULL):
            assert not codeword.is_zero
            assert contains(spec, codeword)

    def test_is_deterministic(self):
        spec = _spec(2, 3, 3)
        assert list(enumerate_codewords(spec)) == list(enumerate_codewords(spec))

    def test_zero_code_has_nothing_to_enumerate(self):
        with pytest.raises(InvalidParametersError):
            list(enumerate_codewords(_spec(2, 2, 4)))

    def test_budget_exhaustion_is_signalled(self):
        stream = enumerate_codewords(_spec(3, 2, 4), EnumBudget(max_codewords=5))
        seen = []
        with pytest.raises(BudgetExhaustedError) as exc_info:
            for codeword in stream:
                seen.append(codeword)
        assert len(seen) == 5
        assert exc_info.value.enumerated == 5


class TestMinimumWeights:
    @pytest.mark.parametrize(
        "spec, d_p",
        [(_spec(3, 2, 8), 9), (_spec(3, 2, 4), 6), (_spec(2, 2, 0), 2)],
    )
    def test_pair_examples(self, spec, d_p):
        found, witness = min_pair_weight_bruteforce(spec)
        assert found == d_p
        assert pair_weight(witness) == d_p
        assert contains(spec, witness)

    def test_all_ones_witness(self):
        _, witness = min_pair_weight_bruteforce(_spec(3, 2, 8))
        assert witness.coeffs == (1,) * 9

    @pytest.mark.parametrize(
        "spec, d_h",
        [(_spec(3, 2, 4), 3), (_spec(3, 2, 0), 1), (_spec(2, 3, 7), 8)],
    )
    def test_hamming_examples(self, spec, d_h):
        found, witness = min_hamming_weight_bruteforce(spec)
        assert found == d_h
        assert hamming_weight(witness) == d_h

    def test_zero_code(self):
        result = minimum_weights(_spec(3, 2, 9))
        assert (result.d_h, result.d_p, result.enumerated) == (0, 0, 0)
        assert result.pair_witness.is_zero

    def test_budget_exhaustion_carries_best_so_far(self):
        with pytest.raises(BudgetExhaustedError) as exc_info:
            minimum_weights(_spec(3, 2, 1), EnumBudget(max_codewords=10))
        error = exc_info.value
        assert error.enumerated == 10
        assert error.best_so_far is not None
        weight, witness = error.best_so_far
        assert weight == pair_weight(witness)
        assert weight >= 3

    def test_jobs_do_not_change_result(self):
        spec = _spec(3, 2, 2)
        assert minimum_weights(spec, jobs=1) == minimum_weights(spec, jobs=3)

    @pytest.mark.parametrize(
        "spec",
        [_spec(3, 2, 3), _spec(2, 3, 2), _spec(5, 1, 2), _spec(2, 2, 1, m=2)],
    )
    def test_scalar_reduction_is_sound(self, spec):
        assert scalar_reduction_agrees(spec)


class TestVerifyFamily:
    def test_small_family_matches(self):
        report = verify_family(3, 2, 1)
        assert report.verdict == VerificationStatus.MATCH
        assert [entry.i for entry in report.entries] == list(range(10))
        for entry in report.entries:
            assert entry.oracle_dp == entry.formula_dp
            assert entry.witness is not None
            assert pair_weight(entry.witness) == entry.oracle_dp

    def test_extension_field_family(self):
        assert verify_family(2, 2, 2).verdict == VerificationStatus.MATCH

    def test_budget_skips_are_reported(self):
        report = verify_family(3, 2, 1, budget=EnumBudget(max_codewords=100))
        skipped = [e.i for e in report.entries if e.status == VerificationStatus.SKIPPED]
        assert skipped == [0, 1, 2, 3, 4]
        assert report.verdict == VerificationStatus.SKIPPED
        for entry in report.entries:
            if entry.status == VerificationStatus.SKIPPED:
                assert entry.oracle_dp is None and entry.witness is None

    def test_mismatch_is_reported(self):
        with patch("src.pairdist.oracle.closed_form_pair_distance", return_value=1):
            report = verify_family(2, 1, 1)
        assert report.verdict == VerificationStatus.MISMATCH
        statuses = [entry.status for entry in report.entries]
        assert statuses == [VerificationStatus.MISMATCH] * 3


    def test_one_pool_serves_the_whole_family(self):
        with patch(
            "src.pairdist.oracle.ProcessPoolExecutor", wraps=ThreadPoolExecutor
        ) as pool:
            report = verify_family(2, 3, 1, jobs=3)
        assert pool.call_count == 1
        assert report.verdict == VerificationStatus.MATCH

    @pytest.mark.parametrize("e, m", [(0, 1), (-2, 1), (1, 0)])
    def test_rejects_family_exponents(self, e, m):
        with pytest.raises(InvalidParametersError):
            verify_family(3, e, m)


class TestVerifiedTable:
    def test_rows_carry_oracle_verdicts(self):
        rows, report = verified_table(3, 2, 1)
        assert report.verdict == VerificationStatus.MATCH
        assert [row.i for row in rows] == list(range(10))
        assert {row.verified for row in rows} == {VerificationStatus.MATCH}

    def test_skipped_rows_are_marked(self):
        rows, _ = verified_table(3, 2, 1, budget=EnumBudget(max_codewords=100))
        assert [row.verified for row in rows[:5]] == [VerificationStatus.SKIPPED] * 5
        assert rows[9].verified == VerificationStatus.MATCH


class TestProp22:
    @pytest.mark.parametrize("p, n, checked", [(2, 5, 32 * 31), (3, 4, 81 * 80)])
    def test_exhaustive(self, p, n, checked):
        report = verify_prop22_exhaustive(build_field(p, 1), n)
        assert report.ok
        assert report.pairs_checked == checked

    def test_sampled(self, f4):
        report = verify_prop22_exhaustive(f4, 12, mode=Prop22Mode.SAMPLE, count=2000, seed=5)
        assert report.ok
        assert 0 < report.pairs_checked <= 2000

    def test_sampled_is_reproducible(self, f3):
        first = verify_prop22_exhaustive(f3, 9, mode=Prop22Mode.SAMPLE, count=100, seed=1)
        second = verify_prop22_exhaustive(f3, 9, mode=Prop22Mode.SAMPLE, count=100, seed=1)
        assert first == second

    def test_exhaustive_limit(self, f3):
        with pytest.raises(InvalidParametersError, match="exhaustive limit"):
            verify_prop22_exhaustive(f3, 7)

    def test_sample_needs_seed(self, f2):
        with pytest.raises(InvalidParametersError):
            verify_prop22_exhaustive(f2, 5, mode=Prop22Mode.SAMPLE, count=10)

    def test_rejects_short_vectors(self, f2):
        with pytest.raises(InvalidParametersError):
            verify_prop22_exhaustive(f2, 1)

    def test_identity_uses_shared_run_count(self):
        # A run count that always reports one run must break the identity.
        with patch("src.pairdist.oracle.run_count_of", side_effect=lambda x, y: (
            frozenset(j for j in range(len(x)) if x[j] != y[j]),
            1,
        )):
            report = verify_prop22_exhaustive(build_field(2, 1), 5)
        assert not report.ok
        assert all(v.block_count == 1 for v in report.violations)
