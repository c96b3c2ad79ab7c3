"""
The cyclic codes C_i = <(x-1)^i> of length p^e over F_{p^m}.

Closed forms collect every branch whose range contains i and insist that all
matching branches agree. Ranges of the piecewise formulas touch at multiples
of p^(e-1), so overlaps are expected; disagreement is not.
"""

from .errors import FormulaBranchError, InvalidParametersError
from .gf import build_field, field_from_modulus
from .models import CodeSpec, DistanceRecord, FieldSpec, Poly, RingElement, WitnessCheck
from .pairmetrics import pair_weight
from .polyring import (
    lift,
    make_poly,
    poly_divrem,
    ring_mul,
    to_ring,
    x_minus_one_power,
)

Branches = list[tuple[str, int]]


def code_field(spec: CodeSpec) -> FieldSpec:
    if spec.modulus is not None:
        return field_from_modulus(spec.p, spec.modulus)
    return build_field(spec.p, spec.m)


def generator(spec: CodeSpec) -> RingElement:
    return x_minus_one_power(code_field(spec), spec.i, spec.n)


def encode(spec: CodeSpec, message: Poly) -> RingElement:
    if message.degree is not None and message.degree >= spec.dimension:
        raise InvalidParametersError(
            f"Message degree {message.degree} must be below the dimension {spec.dimension}"
        )
    fs = code_field(spec)
    return ring_mul(fs, to_ring(fs, message, spec.n), generator(spec))


def contains(spec: CodeSpec, v: RingElement) -> bool:
    """True iff (x-1)^i divides the degree < n lift of v."""
    if v.n != spec.n:
        raise InvalidParametersError(f"Vector length {v.n} != code length {spec.n}")
    fs = code_field(spec)
    x_minus_one = make_poly([fs.p - 1, 1])
    current = lift(v)
    for _ in range(spec.i):
        if current.is_zero:
            return True
        current, remainder = poly_divrem(fs, current, x_minus_one)
        if not remainder.is_zero:
            return False
    return True


def _resolve(branches: Branches, what: str, spec: CodeSpec) -> tuple[int, str]:
    if not branches:
        raise FormulaBranchError(
            f"No {what} branch covers i={spec.i} for p={spec.p}, e={spec.e}"
        )
    values = {value for _, value in branches}
    if len(values) != 1:
        raise FormulaBranchError(
            f"Overlapping {what} branches disagree at i={spec.i} "
            f"for p={spec.p}, e={spec.e}: {branches}"
        )
    return branches[0][1], ";".join(label for label, _ in branches)


def _hamming_branches(p: int, e: int, i: int) -> Branches:
    n = p**e
    branches: Branches = []
    if i == 0:
        branches.append(("i=0", 1))
    if i == n:
        branches.append(("i=p^e", 0))
    for beta in range(p - 1):
        if beta * p ** (e - 1) + 1 <= i <= (beta + 1) * p ** (e - 1):
            branches.append((f"beta={beta}", beta + 2))
    for k in range(1, e):
        base = n - p ** (e - k)
        step = p ** (e - k - 1)
        for t in range(1, p):
            if base + (t - 1) * step + 1 <= i <= base + t * step:
                branches.append((f"k={k},t={t}", (t + 1) * p**k))
    return branches


def _pair_branches(p: int, e: int, i: int) -> Branches:
    n = p**e
    branches: Branches = []
    if i == n:
        branches.append(("i=p^e", 0))
    if e == 1:
        if n == 2 and i == 1:
            branches.append(("p^e=2", 2))
        if 0 <= i <= p - 2:
            branches.append(("e=1,i<=p-2", i + 2))
        if i == p - 1:
            branches.append(("e=1,i=p-1", p))
        return branches

    top = p ** (e - 1)
    if i == 0:
        branches.append(("i=0", 2))
    if i == 1:
        branches.append(("i=1", 3))
    if 2 <= i <= top:
        branches.append(("2<=i<=p^(e-1)", 4))
    for beta in range(1, p - 1):
        if beta * top + 1 <= i <= (beta + 1) * top:
            branches.append((f"beta={beta}", 2 * (beta + 2)))
    for k in range(1, e - 1):
        base = n - p ** (e - k)
        step = p ** (e - k - 1)
        if i == base + 1:
            branches.append((f"k={k},3p^k", 3 * p**k))
        if base + 2 <= i <= base + step:
            branches.append((f"k={k},4p^k", 4 * p**k))
        for beta in range(1, p - 1):
            if base + beta * step + 1 <= i <= base + (beta + 1) * step:
                branches.append((f"k={k},beta={beta}", 2 * (beta + 2) * p**k))
    for j in range(p - 1):
        if i == n - p + j:
            branches.append((f"j={j}", (j + 2) * top))
    if i == n - 1:
        branches.append(("i=p^e-1", n))
    return branches


def _binary_pair_branches(e: int, i: int) -> Branches:
    n = 2**e
    branches: Branches = []
    if i == n:
        branches.append(("i=2^e", 0))
    if e == 1:
        if i in (0, 1):
            branches.append(("e=1,i<=1", 2))
        return branches
    if i == 0:
        branches.append(("i=0", 2))
    if i == 1:
        branches.append(("i=1", 3))
    if 2 <= i <= 2 ** (e - 1):
        branches.append(("2<=i<=2^(e-1)", 4))
    for k in range(1, e - 1):
        base = n - 2 ** (e - k)
        if i == base + 1:
            branches.append((f"k={k},3*2^k", 3 * 2**k))
        if base + 2 <= i <= base + 2 ** (e - k - 1):
            branches.append((f"k={k},2^(k+2)", 2 ** (k + 2)))
    if i == n - 1:
        branches.append(("i=2^e-1", n))
    return branches


def hamming_distance_branch(spec: CodeSpec) -> tuple[int, str]:
    return _resolve(_hamming_branches(spec.p, spec.e, spec.i), "Hamming", spec)


def pair_distance_branch(spec: CodeSpec) -> tuple[int, str]:
    return _resolve(_pair_branches(spec.p, spec.e, spec.i), "pair", spec)


def closed_form_hamming_distance(spec: CodeSpec) -> int:
    return hamming_distance_branch(spec)[0]


def closed_form_pair_distance(spec: CodeSpec) -> int:
    return pair_distance_branch(spec)[0]


def closed_form_pair_distance_binary(spec: CodeSpec) -> int:
    """Characteristic-2 specialization, kept as a separate transcription."""
    if spec.p != 2:
        raise InvalidParametersError(f"Binary form needs p=2, got p={spec.p}")
    return _resolve(_binary_pair_branches(spec.e, spec.i), "binary pair", spec)[0]


def _check_classifiable(spec: CodeSpec) -> None:
    if spec.i == spec.n:
        raise InvalidParametersError(
            "The zero code has d_p = 0 and lies outside the pair Singleton bound"
        )


def singleton_bound_exponent(spec: CodeSpec) -> int:
    """n - d_p + 2: the code size is at most q to this power."""
    _check_classifiable(spec)
    return spec.n - closed_form_pair_distance(spec) + 2


def is_mds_pair(spec: CodeSpec) -> bool:
    _check_classifiable(spec)
    # q^(n-i) == q^(n-d_p+2) reduces to an exponent comparison.
    return closed_form_pair_distance(spec) == spec.i + 2


def distance_record(spec: CodeSpec) -> DistanceRecord:
    d_h, _ = hamming_distance_branch(spec)
    d_p, branch = pair_distance_branch(spec)
    return DistanceRecord(
        i=spec.i,
        dimension=spec.dimension,
        d_h=d_h,
        d_p=d_p,
        mds_pair=spec.i < spec.n and is_mds_pair(spec),
        branch=branch,
    )


def check_family(p: int, e: int, m: int) -> None:
    """Reject exponents that would not give an integer code length."""
    if e < 1:
        raise InvalidParametersError(f"e must be at least 1, got {e}")
    if m < 1:
        raise InvalidParametersError(f"m must be at least 1, got {m}")


def distance_table(
    p: int, e: int, m: int, modulus: tuple[int, ...] | None = None
) -> list[DistanceRecord]:
    check_family(p, e, m)
    return [
        distance_record(CodeSpec(p=p, m=m, e=e, i=i, modulus=modulus))
        for i in range(p**e + 1)
    ]


def _witness(spec: CodeSpec, identity: str, claimed: int) -> WitnessCheck:
    return WitnessCheck(
        identity=identity,
        i=spec.i,
        claimed=claimed,
        measured=pair_weight(generator(spec)),
    )


def generator_weight_witnesses(
    p: int, e: int, m: int = 1, modulus: tuple[int, ...] | None = None
) -> list[WitnessCheck]:
    """Pair weights of the generators that attain the minimum pair distance."""
    check_family(p, e, m)
    n = p**e

    def spec_for(i: int) -> CodeSpec:
        return CodeSpec(p=p, m=m, e=e, i=i, modulus=modulus)

    checks = [
        _witness(spec_for(i), "w_p((x-1)^i)=i+2", i + 2) for i in range(p - 1)
    ]
    if e < 2:
        return checks
    top = p ** (e - 1)
    for beta in range(p - 1):
        checks.append(
            _witness(
                spec_for((beta + 1) * top),
                f"w_p((x-1)^((beta+1)p^(e-1)))=2(beta+2) [beta={beta}]",
                2 * (beta + 2),
            )
        )
    for k in range(1, e):
        checks.append(
            _witness(
                spec_for(n - p ** (e - k)),
                f"w_p((x-1)^(p^e-p^(e-k)))=2p^k [k={k}]",
                2 * p**k,
            )
        )
    for k in range(1, e - 1):
        checks.append(
            _witness(
                spec_for(n - p ** (e - k) + p ** (e - k - 1)),
                f"w_p((x-1)^(p^e-p^(e-k)+p^(e-k-1)))=4p^k [k={k}]",
                4 * p**k,
            )
        )
    for j in range(p - 1):
        checks.append(
            _witness(
                spec_for(n - p + j),
                f"w_p((x-1)^(p^e-p+j))=(j+2)p^(e-1) [j={j}]",
                (j + 2) * top,
            )
        )
    return checks
