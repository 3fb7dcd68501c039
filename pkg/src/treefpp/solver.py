"""Fixed-point proportion of iterated wreath products W_S and of G_Q^P.

FPP(W_S) is the largest fixed point of the characteristic polynomial f_S on
[0, 1]. It is 1 when every label fixes a point, 0 when the mean number of
fixed points is at most 1, and otherwise the unique root in (0, 1) of
``f_S(x)/x - 1``, which is strictly decreasing there. That root is bracketed
by exact dyadic bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded
from .permcore import PermSet, Permutation, cosets
from .spectrum import (
    CharPoly,
    DerangementProfile,
    characteristic_polynomial,
    derangement_profile,
    evaluate,
)
from . import validation

ZERO, ONE, ALGEBRAIC = "Zero", "One", "Algebraic"
DEFAULT_PRECISION_BITS = 64
#: Bit-length cap on sigma_n in exact iteration traces.
MAX_TRACE_BITS = 1 << 22


@dataclass(frozen=True)
class FppResult:
    """Classified fixed-point proportion.

    For a single label set, an Algebraic result carries the integer defining
    polynomial ``#S (f_S(x) - x) / x`` (ascending coefficients) and an exact
    bracket ``(lo, hi)``. Results aggregated over cosets carry ``per_coset``;
    their ``exact`` value is set whenever every coset is Zero or One.
    """

    classification: str
    decimal: str
    defining_polynomial: tuple[int, ...] | None = None
    interval: tuple[Fraction, Fraction] | None = None
    exact: Fraction | None = None
    per_coset: tuple[tuple[Permutation, FppResult], ...] | None = None

    @property
    def value(self) -> float:
        if self.exact is not None:
            return float(self.exact)
        lo, hi = self.interval
        return float((lo + hi) / 2)


def decimal_digits(precision_bits: int) -> int:
    return max(1, math.floor(precision_bits * math.log10(2)))


def truncate_decimal(x: Fraction, digits: int) -> str:
    """``x`` in [0, 1] written with ``digits`` decimals, truncated toward zero."""
    if x < 0:
        raise ValueError("negative value")
    scaled = (x.numerator * 10**digits) // x.denominator
    whole, frac = divmod(scaled, 10**digits)
    return f"{whole}.{frac:0{digits}d}"


def _exact_decimal(x: Fraction, digits: int) -> str:
    if x == 0:
        return "0"
    if x == 1:
        return "1"
    return truncate_decimal(x, digits)


def defining_polynomial(f: CharPoly) -> tuple[int, ...]:
    """Integer coefficients of ``#S (f(x) - x) / x``, lowest degree first."""
    ints = list(f.integer_coefficients())
    ints[1] -= f.source_total
    assert ints[0] == 0
    poly = ints[1:]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def _h(f: CharPoly, x: Fraction) -> Fraction:
    """``f(x)/x - 1`` for x > 0."""
    return evaluate(f, x) / x - 1


def classify_and_solve(profile: DerangementProfile, precision_bits: int = DEFAULT_PRECISION_BITS) -> FppResult:
    if precision_bits < 8:
        raise ValueError("precision_bits must be at least 8")
    digits = decimal_digits(precision_bits)
    if profile.counts[0] == 0:
        return FppResult(ONE, "1", exact=Fraction(1))
    mean = Fraction(sum(k * c for k, c in enumerate(profile.counts)), profile.total)
    if mean <= 1:
        return FppResult(ZERO, "0", exact=Fraction(0))

    f = characteristic_polynomial(profile)
    lo, hi = Fraction(1, 2**30), Fraction(1)
    while _h(f, lo) <= 0:
        lo /= 2**8
    eps = Fraction(1, 2**precision_bits)
    while hi - lo >= eps or hi == 1:
        mid = (lo + hi) / 2
        if _h(f, mid) > 0:
            lo = mid
        else:
            hi = mid
    return FppResult(
        ALGEBRAIC,
        truncate_decimal(lo, digits),
        defining_polynomial=defining_polynomial(f),
        interval=(lo, hi),
    )


def solve_set(S: PermSet, precision_bits: int = DEFAULT_PRECISION_BITS) -> FppResult:
    return classify_and_solve(derangement_profile(S), precision_bits)


@dataclass(frozen=True)
class IterationTrace:
    """Exact p_0..p_n, sigma_1..sigma_n and f_1..f_n for W_S."""

    p: tuple[Fraction, ...]
    sigma: tuple[int, ...]
    f: tuple[int, ...]


def next_level_count(profile: DerangementProfile, sigma: int, f: int) -> int:
    """``f_{n+1} = sum_k D[k] sigma^(d-k) (sigma^k - (sigma - f)^k)``."""
    d = profile.degree
    miss = sigma - f
    return sum(
        D * sigma ** (d - k) * (sigma**k - miss**k)
        for k, D in enumerate(profile.counts)
        if k >= 1 and D
    )


def fpp_iterate(profile: DerangementProfile, n: int, max_bits: int = MAX_TRACE_BITS) -> IterationTrace:
    """Iterate ``p_{k+1} = f_S(p_k)`` from ``p_0 = 1`` alongside the integer counts.

    Each step recomputes ``f_{k+1}`` with the level recursion and checks it
    against ``p_{k+1} * sigma_{k+1}``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    d, total = profile.degree, profile.total
    # sigma_n = total^((d^n - 1)/(d - 1)); check the budget before growing it
    exponent = (d**n - 1) // (d - 1) if d > 1 else n
    if exponent * max(1, total.bit_length()) > max_bits:
        raise BudgetExceeded(f"sigma_{n} would need about {exponent * total.bit_length()} bits")
    fpoly = characteristic_polynomial(profile)
    p = [Fraction(1)]
    sigma_prev, f_prev = 1, 1
    sigmas, fs = [], []
    for _ in range(n):
        sigma = sigma_prev**d * total
        f_next = next_level_count(profile, sigma_prev, f_prev)
        p_next = evaluate(fpoly, p[-1])
        if p_next * sigma != f_next:
            raise ArithmeticError("level recursion disagrees with p_{n+1} = f_S(p_n)")
        p.append(p_next)
        sigmas.append(sigma)
        fs.append(f_next)
        sigma_prev, f_prev = sigma, f_next
    return IterationTrace(tuple(p), tuple(sigmas), tuple(fs))


def iterate_p(profile: DerangementProfile, n: int) -> list[Fraction]:
    """Only the exact p_0..p_n, without the sigma/f integer bookkeeping."""
    f = characteristic_polynomial(profile)
    p = [Fraction(1)]
    for _ in range(n):
        p.append(evaluate(f, p[-1]))
    return p


def fpp_of_gqp(Q: PermSet, P: PermSet, precision_bits: int = DEFAULT_PRECISION_BITS) -> FppResult:
    """FPP(G_Q^P) as the average of FPP(W_A) over the cosets A of Q in P."""
    validation.check_gqp_pair(Q, P)
    parts = []
    for A in cosets(P, Q):
        parts.append((A.representative, classify_and_solve(derangement_profile(A), precision_bits)))
    return aggregate(parts, precision_bits)


def aggregate(parts: list[tuple[Permutation, FppResult]], precision_bits: int) -> FppResult:
    index = len(parts)
    results = [r for _, r in parts]
    classes = {r.classification for r in results}
    if classes == {ZERO}:
        cls = ZERO
    elif classes == {ONE}:
        cls = ONE
    else:
        cls = ALGEBRAIC
    digits = decimal_digits(precision_bits)
    if all(r.exact is not None for r in results):
        exact = sum((r.exact for r in results), Fraction(0)) / index
        poly = (-exact.numerator, exact.denominator) if cls == ALGEBRAIC else None
        return FppResult(cls, _exact_decimal(exact, digits), defining_polynomial=poly,
                         exact=exact, per_coset=tuple(parts))
    lo = sum((r.exact if r.exact is not None else r.interval[0] for r in results), Fraction(0)) / index
    hi = sum((r.exact if r.exact is not None else r.interval[1] for r in results), Fraction(0)) / index
    return FppResult(cls, truncate_decimal(lo, digits), interval=(lo, hi), per_coset=tuple(parts))
