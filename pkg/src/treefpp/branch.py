"""Structural report for the groups G_Q^P and the good-coset search.

G_Q^P is the group of tree automorphisms whose labels all lie in one coset of
Q inside P. Its finite-type depth, tfg status, just-infinite and strongly
complete flags are classification metadata derived from Q and P; they are
not certified computationally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeError
from .permcore import (
    PermSet,
    Permutation,
    commutator_subgroup,
    cosets,
    fixed_point_count,
    generate_group,
    is_transitive,
    normalizer_in_sym,
    orbits,
    parse_permutation,
    subgroup_class_generators,
    subgroup_conjugacy_classes,
    trivial_group,
)
from .solver import DEFAULT_PRECISION_BITS, FppResult, fpp_of_gqp, solve_set
from .spectrum import mean_fixed_points
from .validation import check_gqp_pair

TFG_YES, TFG_NO, TFG_UNDETERMINED = "Yes", "No", "Undetermined"


@dataclass(frozen=True)
class HausdorffDimension:
    """``log(log_numerator) / log(log_denominator)`` kept exact, plus a 15-digit decimal."""

    log_numerator: int
    log_denominator: int
    decimal: str

    @classmethod
    def of(cls, numerator: int, denominator: int) -> HausdorffDimension:
        if numerator == denominator:
            text = f"{1:.15f}"
        else:
            text = f"{math.log(numerator) / math.log(denominator):.15f}"
        return cls(numerator, denominator, text)

    @property
    def value(self) -> float:
        return float(self.decimal)


@dataclass(frozen=True)
class GqpReport:
    degree: int
    order_q: int
    order_p: int
    index: int
    level_transitive: bool
    hausdorff: HausdorffDimension
    finite_type_depth: int
    tfg: str
    just_infinite: bool
    strongly_complete: bool
    fpp: FppResult


def as_group(source, d: int | None = None) -> PermSet:
    """Accept a group, or a list of generators given as permutations or strings."""
    if isinstance(source, PermSet):
        return source
    gens = list(source)
    if not gens:
        if d is None:
            raise ValueError("degree needed for an empty generator list")
        return trivial_group(d)
    perms = []
    for g in gens:
        if isinstance(g, Permutation):
            perms.append(g)
        else:
            if d is None:
                raise ValueError("degree needed to parse generator strings")
            perms.append(parse_permutation(g, d))
    return generate_group(perms)


def tfg_status(Q: PermSet) -> str:
    perfect = commutator_subgroup(Q).same_elements(Q)
    global_fixed = any(len(orb) == 1 for orb in orbits(Q))
    if not perfect or global_fixed:
        return TFG_NO
    if is_transitive(Q):
        return TFG_YES
    return TFG_UNDETERMINED


def analyze_gqp(Q, P, d: int | None = None, precision_bits: int = DEFAULT_PRECISION_BITS) -> GqpReport:
    """Full report on G_Q^P. ``Q`` and ``P`` are groups or generator lists."""
    Q = as_group(Q, d)
    P = as_group(P, d if d is not None else Q.degree)
    check_gqp_pair(Q, P)
    d = Q.degree
    perfect = commutator_subgroup(Q).same_elements(Q)
    return GqpReport(
        degree=d,
        order_q=len(Q),
        order_p=len(P),
        index=len(P) // len(Q),
        level_transitive=is_transitive(Q),
        hausdorff=HausdorffDimension.of(len(Q), math.factorial(d)),
        finite_type_depth=1 if len(Q) == len(P) else 2,
        tfg=tfg_status(Q),
        just_infinite=perfect,
        strongly_complete=perfect,
        fpp=fpp_of_gqp(Q, P, precision_bits),
    )


@dataclass(frozen=True)
class GoodCosetFinding:
    degree: int
    q: PermSet
    p: PermSet
    representative: Permutation
    witness: tuple[int, ...]


def search_good_cosets(d: int) -> list[GoodCosetFinding]:
    """Cosets in which every element fixes exactly one point.

    For each transitive subgroup class Q of Sym(d), P is the normalizer of Q
    in Sym(d), the largest group in which Q is normal.
    """
    if not 2 <= d <= 6:
        raise DegreeError(f"good-coset search supports 2 <= d <= 6, got {d}")
    found = []
    for Q in subgroup_conjugacy_classes(d):
        if not is_transitive(Q):
            continue
        P = normalizer_in_sym(Q)
        for A in cosets(P, Q):
            counts = tuple(fixed_point_count(a) for a in A.elements)
            if all(c == 1 for c in counts):
                found.append(GoodCosetFinding(d, Q, P, A.representative, counts))
    return found


@dataclass(frozen=True)
class SurveyRow:
    class_id: int
    generators: tuple[Permutation, ...]
    order: int
    transitive: bool
    orbit_count: int
    mean_fixed_points: Fraction
    fpp: FppResult


def survey(d: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> list[SurveyRow]:
    """FPP(W_H) for one representative H of every subgroup class of Sym(d)."""
    rows = []
    gens = subgroup_class_generators(d)
    for i, (H, g) in enumerate(zip(subgroup_conjugacy_classes(d), gens)):
        rows.append(SurveyRow(i, g, len(H), is_transitive(H), len(orbits(H)),
                              mean_fixed_points(H), solve_set(H, precision_bits)))
    return rows
