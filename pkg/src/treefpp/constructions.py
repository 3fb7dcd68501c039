"""Explicit families of G_Q^P with closed-form fixed-point proportions.

Affine family: Q is the translations of Z/dZ and P = {x -> a x + b : a in I}
for a subgroup I of the units. The coset of slope ``a`` consists of elements
with exactly one fixed point iff ``a - 1`` is a unit, which gives

    FPP = #{a in I : gcd(a - 1, d) = 1} / |I|.

Holomorph family: d = 2^n r with r odd, Q = C_2^n x C_r acting regularly on
itself, P = Q x| Aut(Q) with Aut(Q) = GL_n(F_2) x (Z/rZ)^*.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import factorint

from .branch import GqpReport, HausdorffDimension, analyze_gqp
from .errors import BudgetExceeded, PreconditionError
from .gf2 import BitMatrixF2, general_linear_group, glnf2_count
from .permcore import PermSet, Permutation, generate_group
from .solver import DEFAULT_PRECISION_BITS

#: Largest d for which the affine family is realized as permutation groups.
AFFINE_MAX_DEGREE = 32
#: Largest d for which the holomorph is realized explicitly.
HOLOMORPH_MAX_DEGREE = 12


def totient(d: int) -> int:
    if d < 1:
        raise ValueError("d must be positive")
    out = 1
    for p, e in factorint(d).items():
        out *= p ** (e - 1) * (p - 1)
    return out


def psi(d: int) -> int:
    """Number of units ``a`` mod d with ``a - 1`` also a unit."""
    if d < 1:
        raise ValueError("d must be positive")
    out = 1
    for p, e in factorint(d).items():
        out *= p ** (e - 1) * (p - 2)
    return out


def prime_product(d: int) -> Fraction:
    """``prod_{p | d} (p - 2) / (p - 1)``."""
    out = Fraction(1)
    for p in factorint(d):
        out *= Fraction(p - 2, p - 1)
    return out


def units(d: int) -> tuple[int, ...]:
    return tuple(a for a in range(d) if math.gcd(a, d) == 1) if d > 1 else (0,)


def unit_subgroup(d: int, generators: Iterable[int] | None = None) -> tuple[int, ...]:
    """The subgroup of (Z/dZ)^* generated by ``generators``; ``None`` means all units."""
    if generators is None:
        return units(d)
    gens = [g % d for g in generators]
    for g in gens:
        if math.gcd(g, d) != 1:
            raise PreconditionError(f"{g} is not a unit mod {d}")
    elems = {1 % d}
    frontier = [1 % d]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g % d
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return tuple(sorted(elems))


def unit_subgroups(d: int) -> list[tuple[int, ...]]:
    """Every subgroup of (Z/dZ)^*, ordered by size then elements."""
    found = {unit_subgroup(d, [])}
    frontier = list(found)
    while frontier:
        H = frontier.pop()
        for a in units(d):
            if a not in H:
                K = unit_subgroup(d, list(H) + [a])
                if K not in found:
                    found.add(K)
                    frontier.append(K)
    return sorted(found, key=lambda H: (len(H), H))


def affine_map(a: int, b: int, d: int) -> Permutation:
    """``x -> a x + b`` on Z/dZ, with residue r labelled as point r + 1."""
    return Permutation(tuple((a * r + b) % d + 1 for r in range(d)))


def affine_groups(d: int, I: Sequence[int]) -> tuple[PermSet, PermSet]:
    Q = generate_group([affine_map(1, 1, d)])
    P = generate_group([affine_map(1, 1, d)] + [affine_map(a, 0, d) for a in I])
    return Q, P


@dataclass(frozen=True)
class Construction1Result:
    d: int
    unit_group: tuple[int, ...]
    proper_subgroup: bool
    closed_form: Fraction
    report: GqpReport


def affine_closed_form(d: int, I: Sequence[int]) -> Fraction:
    return Fraction(sum(1 for a in I if math.gcd(a - 1, d) == 1), len(I))


def construction1(d: int, unit_generators: Iterable[int] | None = None,
                  precision_bits: int = DEFAULT_PRECISION_BITS) -> Construction1Result:
    """Affine family over Z/dZ; the coset-sum FPP is checked against the closed form."""
    if d < 2:
        raise PreconditionError("d must be at least 2")
    if d > AFFINE_MAX_DEGREE:
        raise BudgetExceeded(f"affine realization limited to d <= {AFFINE_MAX_DEGREE}")
    I = unit_subgroup(d, unit_generators)
    Q, P = affine_groups(d, I)
    report = analyze_gqp(Q, P, precision_bits=precision_bits)
    closed = affine_closed_form(d, I)
    if report.fpp.exact != closed:
        raise ArithmeticError(f"coset sum {report.fpp.exact} != closed form {closed} for d={d}, I={I}")
    return Construction1Result(d, I, len(I) != totient(d), closed, report)


@dataclass(frozen=True)
class Construction2Result:
    n: int
    r: int
    d: int
    gl_good: int
    gl_total: int
    fpp: Fraction
    report: GqpReport | None = None


def _holomorph_point(x: int, z: int, n: int) -> int:
    return x + (z << n)


def holomorph_groups(n: int, r: int) -> tuple[PermSet, PermSet]:
    """Q = C_2^n x C_r in its regular action and P = Q x| Aut(Q), on d = 2^n r points.

    The element (x, z) of Q is point ``x + 2^n z + 1`` (x read as a bit vector).
    (q, h) in P acts by ``q' -> q + h(q')``.
    """
    d = (1 << n) * r
    size = 1 << n
    points = [(x, z) for z in range(r) for x in range(size)]

    def perm(qx: int, qz: int, A: BitMatrixF2 | None, alpha: int) -> Permutation:
        images = []
        for x, z in points:
            hx = A.apply(x) if A is not None else x
            images.append(_holomorph_point(qx ^ hx, (qz + alpha * z) % r, n) + 1)
        return Permutation(tuple(images))

    q_gens = [perm(1 << j, 0, None, 1) for j in range(n)]
    if r > 1:
        q_gens.append(perm(0, 1, None, 1))
    gl = general_linear_group(n) if n else [None]
    alphas = units(r) if r > 1 else (1,)
    aut_gens = [perm(0, 0, A, alpha) for A in gl for alpha in alphas]
    Q = generate_group(q_gens)
    P = generate_group(q_gens + aut_gens)
    expected = d * len(gl) * (totient(r) if r > 1 else 1)
    if len(P) != expected:
        raise ArithmeticError(f"holomorph has order {len(P)}, expected {expected}")
    return Q, P


def construction2(n: int, r: int, explicit: bool = False,
                  precision_bits: int = DEFAULT_PRECISION_BITS) -> Construction2Result:
    """Closed-form FPP of the holomorph family; ``explicit`` also builds and checks G_Q^P."""
    if r < 1 or r % 2 == 0:
        raise PreconditionError(f"r must be odd and positive, got {r}")
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    d = (1 << n) * r
    if d < 2:
        raise PreconditionError("d = 2^n r must be at least 2")
    if n > 5:
        raise BudgetExceeded("closed form limited to n <= 5")
    if n == 0:
        good, total = 1, 1
    else:
        counted = glnf2_count(n)
        good, total = counted.good, counted.total
    fpp = Fraction(good, total) * prime_product(r)
    report = None
    if explicit:
        if d > HOLOMORPH_MAX_DEGREE:
            raise BudgetExceeded(f"explicit holomorph limited to d <= {HOLOMORPH_MAX_DEGREE}")
        Q, P = holomorph_groups(n, r)
        report = analyze_gqp(Q, P, precision_bits=precision_bits)
        if report.fpp.exact != fpp:
            raise ArithmeticError(f"coset sum {report.fpp.exact} != closed form {fpp}")
    return Construction2Result(n, r, d, good, total, fpp, report)


@dataclass(frozen=True)
class GaloisResult:
    d: int
    fpp: Fraction
    hausdorff: HausdorffDimension
    checked_against_affine: bool


def galois_unicritical(d: int, check_affine: bool = True,
                       affine_check_limit: int = 20) -> GaloisResult:
    """FPP and Hausdorff dimension of the full affine family at degree d.

    ``fpp = psi(d) / totient(d)`` and the dimension is ``log d / log d!``. For
    ``d <= affine_check_limit`` the value is also compared with the explicit
    coset sum of the affine family with every unit allowed.
    """
    if d < 2:
        raise PreconditionError("d must be at least 2")
    fpp = Fraction(psi(d), totient(d))
    checked = False
    if check_affine and d <= min(affine_check_limit, AFFINE_MAX_DEGREE):
        c1 = construction1(d)
        if c1.closed_form != fpp:
            raise ArithmeticError(f"psi/totient {fpp} != affine coset sum {c1.closed_form}")
        checked = True
    return GaloisResult(d, fpp, HausdorffDimension.of(d, math.factorial(d)), checked)
