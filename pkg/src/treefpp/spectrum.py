"""Derangement profiles and the characteristic polynomial of a label set.

Everything here is exact: counts are integers and polynomial coefficients are
``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from .permcore import PermSet, Permutation, fixed_point_count, is_transitive, orbits


@dataclass(frozen=True)
class DerangementProfile:
    """``counts[k]`` = number of elements of S fixing exactly ``k`` points."""

    degree: int
    counts: tuple[int, ...]
    total: int

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != self.degree + 1:
            raise ValueError(f"expected {self.degree + 1} counts, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise ValueError("counts must be nonnegative")
        if sum(counts) != self.total or self.total < 1:
            raise ValueError("counts must sum to a positive total")
        if self.degree >= 1 and counts[self.degree - 1] != 0:
            raise ValueError("no permutation fixes exactly d-1 points")

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> DerangementProfile:
        counts = tuple(counts)
        return cls(len(counts) - 1, counts, sum(counts))

    @property
    def derangements(self) -> int:
        return self.counts[0]


def derangement_profile(S: PermSet | Iterable[Permutation]) -> DerangementProfile:
    elems = list(S)
    d = elems[0].degree
    counts = [0] * (d + 1)
    for s in elems:
        counts[fixed_point_count(s)] += 1
    return DerangementProfile(d, tuple(counts), len(elems))


@dataclass(frozen=True)
class CharPoly:
    """``f(x) = sum_k D[k]/#S * (1 - (1-x)^k)`` in the monomial basis.

    ``coefficients[i]`` is the coefficient of ``x**i``.
    """

    degree_bound: int
    coefficients: tuple[Fraction, ...]
    source_total: int

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    def derivative(self) -> CharPoly:
        coeffs = tuple(i * c for i, c in enumerate(self.coefficients))[1:] + (Fraction(0),)
        return CharPoly(self.degree_bound, coeffs, self.source_total)

    def integer_coefficients(self) -> tuple[int, ...]:
        """``#S * f`` as integers."""
        out = []
        for c in self.coefficients:
            v = c * self.source_total
            assert v.denominator == 1
            out.append(int(v))
        return tuple(out)

    @property
    def degree(self) -> int:
        for i in range(len(self.coefficients) - 1, -1, -1):
            if self.coefficients[i]:
                return i
        return -1

    def is_identity(self) -> bool:
        return all(c == (1 if i == 1 else 0) for i, c in enumerate(self.coefficients))


def characteristic_polynomial(profile: DerangementProfile) -> CharPoly:
    d = profile.degree
    # integer expansion of sum_k D[k] (1 - (1-x)^k)
    num = [0] * (d + 1)
    for k in range(1, d + 1):
        D = profile.counts[k]
        if not D:
            continue
        # 1 - (1-x)^k = -sum_{i>=1} C(k,i) (-x)^i
        for i in range(1, k + 1):
            num[i] -= D * comb(k, i) * (-1) ** i
    coeffs = tuple(Fraction(c, profile.total) for c in num)
    return CharPoly(d, coeffs, profile.total)


def evaluate(f: CharPoly, x) -> Fraction:
    """Horner evaluation; exact for rational ``x``."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(f.coefficients):
        acc = acc * x + c
    return acc


def mean_fixed_points(S: PermSet | Iterable[Permutation]) -> Fraction:
    """Average number of fixed points, which equals ``f_S'(0)``."""
    elems = list(S)
    return Fraction(sum(fixed_point_count(s) for s in elems), len(elems))


@dataclass(frozen=True)
class BurnsideCheck:
    mean: Fraction
    predicted: Fraction | None
    agrees: bool | None
    rule: str


def coset_burnside_check(A: PermSet) -> BurnsideCheck:
    """Compare the mean fixed-point count of a coset ``gH`` with its predicted value.

    A transitive ``H`` predicts 1. If ``g`` normalizes ``H`` the prediction is
    the number of H-orbits inside ``Y* = {y : h y = g^-1 y for some h}``.
    Otherwise nothing is predicted.
    """
    if A.kind != "coset" or A.base is None:
        raise ValueError("coset_burnside_check needs a coset")
    H = A.base
    g = A.representative
    mean = mean_fixed_points(A)
    if is_transitive(H):
        predicted, rule = Fraction(1), "transitive"
    elif all(g * h * g.inverse() in H for h in H.elements):
        ginv = g.inverse()
        ystar = {y for y in range(1, H.degree + 1) if any(h(y) == ginv(y) for h in H.elements)}
        predicted = Fraction(sum(1 for orb in orbits(H) if set(orb) <= ystar))
        rule = "normalizing"
    else:
        return BurnsideCheck(mean, None, None, "none")
    return BurnsideCheck(mean, predicted, mean == predicted, rule)
