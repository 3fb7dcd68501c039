from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treefpp.branch import analyze_gqp
from treefpp.constructions import (
    affine_closed_form,
    affine_groups,
    construction1,
    construction2,
    galois_unicritical,
    holomorph_groups,
    prime_product,
    psi,
    totient,
    unit_subgroup,
    unit_subgroups,
)
from treefpp.errors import BudgetExceeded, PreconditionError
from treefpp.permcore import generate_group, is_normal_in, parse_permutation, symmetric_group


def unit_pairs(d):
    return sum(1 for a in range(d) if math.gcd(a, d) == 1 and math.gcd(a - 1, d) == 1)


class TestArithmetic:
    def test_examples(self):
        assert psi(9) == 3
        assert psi(15) == 3 and totient(15) == 8
        assert Fraction(psi(105), totient(105)) == Fraction(5, 16)

    @given(st.integers(2, 3000))
    def test_psi_by_counting(self, d):
        assert psi(d) == unit_pairs(d)
        assert totient(d) == sum(1 for a in range(d) if math.gcd(a, d) == 1)
        if d % 2 == 0:
            assert psi(d) == 0

    @given(st.integers(2, 3000))
    def test_prime_product(self, d):
        assert prime_product(d) == Fraction(psi(d), totient(d))

    def test_unit_subgroups(self):
        assert unit_subgroups(8) == [(1,), (1, 3), (1, 5), (1, 7), (1, 3, 5, 7)]
        assert unit_subgroup(5, [4]) == (1, 4)
        with pytest.raises(PreconditionError):
            unit_subgroup(6, [2])


class TestConstruction1:
    def test_examples(self):
        assert construction1(3).closed_form == Fraction(1, 2)
        assert construction1(4).closed_form == 0
        r = construction1(5, [4])
        assert r.closed_form == Fraction(1, 2) and r.proper_subgroup and r.unit_group == (1, 4)

    def test_groups(self):
        Q, P = affine_groups(7, unit_subgroup(7, None))
        assert len(Q) == 7 and len(P) == 42 and is_normal_in(Q, P)

    @pytest.mark.parametrize("d", range(2, 13))
    def test_every_subgroup(self, d):
        for I in unit_subgroups(d):
            assert construction1(d, I).report.fpp.exact == affine_closed_form(d, I)

    def test_bounds(self):
        with pytest.raises(BudgetExceeded):
            construction1(40)
        with pytest.raises(PreconditionError):
            construction1(1)


class TestConstruction2:
    @pytest.mark.parametrize("n, r, fpp", [(2, 1, Fraction(1, 3)), (2, 3, Fraction(1, 6)), (1, 1, 0),
                                           (3, 1, Fraction(2, 7)), (0, 3, Fraction(1, 2)), (1, 3, 0)])
    def test_explicit_matches_closed_form(self, n, r, fpp):
        c = construction2(n, r, explicit=(2**n * r <= 12))
        assert c.fpp == fpp
        if c.report is not None:
            assert c.report.fpp.exact == fpp

    def test_klein_four_case_is_sym4(self):
        Q, P = holomorph_groups(2, 1)
        assert P.same_elements(symmetric_group(4))
        V4 = generate_group([parse_permutation("(1,2)(3,4)", 4), parse_permutation("(1,3)(2,4)", 4)])
        assert Q.same_elements(V4)

    def test_d12_holomorph(self):
        Q, P = holomorph_groups(2, 3)
        assert len(Q) == 12 and len(P) == 144
        assert analyze_gqp(Q, P).fpp.exact == Fraction(1, 6)

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            construction2(2, 2)
        with pytest.raises(PreconditionError):
            construction2(0, 1)
        with pytest.raises(BudgetExceeded):
            construction2(3, 3, explicit=True)


class TestGalois:
    def test_examples(self):
        g = galois_unicritical(3)
        assert g.fpp == Fraction(1, 2) and g.hausdorff.decimal.startswith("0.613147") and g.checked_against_affine
        g = galois_unicritical(2)
        assert g.fpp == 0 and g.hausdorff.decimal == "1.000000000000000"
        assert galois_unicritical(105).fpp == Fraction(5, 16)

    def test_against_counting(self):
        for d in range(2, 1001):
            assert galois_unicritical(d, check_affine=False).fpp == Fraction(unit_pairs(d), totient(d))

    @pytest.mark.parametrize("d", range(2, 21))
    def test_hausdorff(self, d):
        assert abs(galois_unicritical(d, check_affine=False).hausdorff.value - math.log(d) / math.lgamma(d + 1)) < 1e-12
