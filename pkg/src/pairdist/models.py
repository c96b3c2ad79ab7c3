from enum import Enum
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import InvalidParametersError

FieldElement = int
Pair = tuple[int, int]


class OutputFormat(str, Enum):
    TSV = "tsv"
    JSON = "json"
    PRETTY = "pretty"


class VerificationStatus(str, Enum):
    MATCH = "match"
    MISMATCH = "mismatch"
    SKIPPED = "skipped"


class Prop22Mode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLE = "sample"


class FieldSpec(BaseModel):
    """F_{p^m} as F_p[x] modulo a monic irreducible polynomial of degree m."""

    model_config = ConfigDict(frozen=True)

    p: int
    m: int
    modulus: tuple[int, ...]
    q: int

    @model_validator(mode="after")
    def _check_field(self) -> Self:
        from .gf import is_irreducible, is_prime

        if not is_prime(self.p):
            raise InvalidParametersError(f"p must be prime, got {self.p}")
        if self.m < 1:
            raise InvalidParametersError(f"m must be at least 1, got {self.m}")
        if len(self.modulus) != self.m + 1 or self.modulus[-1] != 1:
            raise InvalidParametersError(
                f"Modulus must be monic of degree {self.m}: {self.modulus}"
            )
        if any(not 0 <= c < self.p for c in self.modulus):
            raise InvalidParametersError(
                f"Modulus coefficients must lie in [0, {self.p}): {self.modulus}"
            )
        if not is_irreducible(self.p, self.modulus):
            raise InvalidParametersError(
                f"Modulus {self.modulus} is reducible over F_{self.p}"
            )
        if self.q != self.p**self.m:
            raise InvalidParametersError(f"q must equal p^m, got {self.q}")
        return self


class Poly(BaseModel):
    """Polynomial with constant term first and no trailing zeros."""

    model_config = ConfigDict(frozen=True)

    coeffs: tuple[FieldElement, ...] = ()

    @model_validator(mode="after")
    def _check_normalized(self) -> Self:
        if self.coeffs and self.coeffs[-1] == 0:
            raise InvalidParametersError(
                f"Poly coefficients must not end in zero: {self.coeffs}"
            )
        return self

    @property
    def degree(self) -> int | None:
        # None stands for the degree of the zero polynomial.
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs


class RingElement(BaseModel):
    """Element of F_q[x]/(x^n - 1) as a fixed-length coefficient vector."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    coeffs: tuple[FieldElement, ...]

    @model_validator(mode="after")
    def _check_length(self) -> Self:
        if len(self.coeffs) != self.n:
            raise InvalidParametersError(
                f"RingElement of length {self.n} given {len(self.coeffs)} coefficients"
            )
        return self

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)


class PairVector(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=2)
    pairs: tuple[Pair, ...]

    @model_validator(mode="after")
    def _check_length(self) -> Self:
        if len(self.pairs) != self.n:
            raise InvalidParametersError(
                f"PairVector of length {self.n} given {len(self.pairs)} pairs"
            )
        return self

    @property
    def consistent(self) -> bool:
        """True when adjacent reads agree on their shared symbol."""
        return all(
            self.pairs[i][1] == self.pairs[(i + 1) % self.n][0] for i in range(self.n)
        )


class RunProfile(BaseModel):
    model_config = ConfigDict(frozen=True)

    support: frozenset[int]
    block_count: int

    @model_validator(mode="after")
    def _check_blocks(self) -> Self:
        if (self.block_count == 0) != (not self.support):
            raise InvalidParametersError(
                "block_count must be zero exactly when the support is empty"
            )
        if self.block_count > len(self.support):
            raise InvalidParametersError("block_count cannot exceed the support size")
        return self


class CodeSpec(BaseModel):
    """The cyclic code generated by (x-1)^i in F_{p^m}[x]/(x^{p^e} - 1)."""

    model_config = ConfigDict(frozen=True)

    p: int
    m: int = 1
    e: int
    i: int
    modulus: tuple[int, ...] | None = None

    @model_validator(mode="after")
    def _check_code(self) -> Self:
        from .gf import is_prime

        if not is_prime(self.p):
            raise InvalidParametersError(f"p must be prime, got {self.p}")
        if self.m < 1:
            raise InvalidParametersError(f"m must be at least 1, got {self.m}")
        if self.e < 1:
            raise InvalidParametersError(f"e must be at least 1, got {self.e}")
        if not 0 <= self.i <= self.p**self.e:
            raise InvalidParametersError(
                f"i must lie in [0, {self.p**self.e}], got {self.i}"
            )
        return self

    @property
    def n(self) -> int:
        return self.p**self.e

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def dimension(self) -> int:
        return self.n - self.i

    @property
    def size(self) -> int:
        return self.q**self.dimension


class DistanceRecord(BaseModel):
    i: int
    dimension: int
    d_h: int
    d_p: int
    mds_pair: bool
    branch: str
    # Set only by oracle.verified_table; plain closed-form tables leave it unset.
    verified: VerificationStatus | None = None


class WitnessCheck(BaseModel):
    identity: str
    i: int
    claimed: int
    measured: int

    @property
    def holds(self) -> bool:
        return self.claimed == self.measured


class EnumBudget(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_codewords: int = Field(default=10_000_000, ge=1)
    reduce_by_scalars: bool = True


class MinimumWeights(BaseModel):
    d_h: int
    hamming_witness: RingElement
    d_p: int
    pair_witness: RingElement
    enumerated: int


class VerificationEntry(BaseModel):
    i: int
    formula_dh: int
    oracle_dh: int | None = None
    formula_dp: int
    oracle_dp: int | None = None
    witness: RingElement | None = None
    status: VerificationStatus


class VerificationReport(BaseModel):
    p: int
    e: int
    m: int
    entries: list[VerificationEntry]

    @property
    def verdict(self) -> VerificationStatus:
        statuses = {entry.status for entry in self.entries}
        if VerificationStatus.MISMATCH in statuses:
            return VerificationStatus.MISMATCH
        if VerificationStatus.SKIPPED in statuses:
            return VerificationStatus.SKIPPED
        return VerificationStatus.MATCH


class Prop22Violation(BaseModel):
    x: tuple[FieldElement, ...]
    y: tuple[FieldElement, ...]
    d_h: int
    block_count: int
    d_p: int


class Prop22Report(BaseModel):
    q: int
    n: int
    mode: Prop22Mode
    pairs_checked: int
    violations: list[Prop22Violation]

    @property
    def ok(self) -> bool:
        return not self.violations


class PairErrorPattern(BaseModel):
    model_config = ConfigDict(frozen=True)

    positions: tuple[int, ...]
    replacements: tuple[Pair, ...]

    @model_validator(mode="after")
    def _check_pattern(self) -> Self:
        if len(set(self.positions)) != len(self.positions):
            raise InvalidParametersError("Error positions must be distinct")
        if len(self.positions) != len(self.replacements):
            raise InvalidParametersError("One replacement pair is needed per position")
        return self

    @property
    def t(self) -> int:
        return len(self.positions)


class TrialOutcome(BaseModel):
    transmitted: RingElement
    received: PairVector
    pattern: PairErrorPattern
    decoded: RingElement | None
    success: bool

    @model_validator(mode="after")
    def _check_success(self) -> Self:
        if self.success and self.decoded != self.transmitted:
            raise InvalidParametersError("A successful trial must decode to the input")
        return self


class ExperimentResult(BaseModel):
    spec: CodeSpec
    t: int
    trials: int
    seed: int
    d_p: int
    guarantee_radius: int
    outcomes: list[TrialOutcome]

    @property
    def successes(self) -> int:
        return sum(1 for outcome in self.outcomes if outcome.success)

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials

    @property
    def guaranteed(self) -> bool:
        return self.t <= self.guarantee_radius
