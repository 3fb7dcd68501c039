from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest

from treefpp.errors import BudgetExceeded, NotNormalError, TrivialSubgroupError
from treefpp.permcore import generate_group, parse_permutation, symmetric_group, trivial_group
from treefpp.solver import (
    ALGEBRAIC,
    ONE,
    ZERO,
    classify_and_solve,
    decimal_digits,
    fpp_iterate,
    fpp_of_gqp,
    iterate_p,
    solve_set,
    truncate_decimal,
)
from treefpp.spectrum import DerangementProfile, derangement_profile


def P(text, d):
    return parse_permutation(text, d)


def G(*gens, d):
    return generate_group([P(g, d) for g in gens])


V4 = G("(1,2)(3,4)", "(1,3)(2,4)", d=4)

def mp_root(counts):
    """Largest root in (0,1) of f(x) = x by mpmath, independent of the bisection."""
    total = sum(counts)
    mpmath.mp.dps = 40

    def h(x):
        return sum(c * (1 - (1 - x) ** k) for k, c in enumerate(counts)) / total - x

    return mpmath.findroot(h, (mpmath.mpf("0.05"), mpmath.mpf("0.999")), solver="anderson")


class TestClassify:
    def test_examples(self):
        assert solve_set(symmetric_group(2)).classification == ZERO
        assert solve_set(G("(2,3)", d=3)).classification == ONE
        r = solve_set(G("(1,2)(3,4)", d=4))
        assert r.classification == ALGEBRAIC
        assert abs(r.value - 0.4563109873079255) < 1e-12
        r = solve_set(G("(1,2)", "(3,4)", d=4))
        assert abs(r.value - 0.7044022574778126) < 1e-12

    def test_algebraic_interval_contains_reference_root(self):
        for counts in [(1, 0, 0, 0, 1), (1, 0, 2, 0, 1), (2, 3, 0, 1, 0, 0)]:
            profile = DerangementProfile.from_counts(counts)
            r = classify_and_solve(profile)
            if r.classification != ALGEBRAIC:
                continue
            root = mp_root(counts)
            lo, hi = r.interval
            assert mpmath.mpf(lo.numerator) / lo.denominator <= root <= mpmath.mpf(hi.numerator) / hi.denominator
            assert hi - lo < Fraction(1, 2**64)

    def test_decimals_are_truncated_bracket(self):
        r = solve_set(G("(1,2)(3,4)", d=4))
        assert r.decimal == "0.4563109873079236384"
        root = mp_root((1, 0, 0, 0, 1))
        assert mpmath.mpf(r.decimal) <= root < mpmath.mpf(r.decimal) + mpmath.mpf(10) ** -19
        r = solve_set(G("(1,2)", "(3,4)", d=4))
        assert r.decimal == "0.7044022574779152290"

    def test_defining_polynomial(self):
        r = solve_set(G("(1,2)(3,4)", d=4))
        # 2 (f(x) - x)/x for f = (1 - (1-x)^4)/2
        assert r.defining_polynomial == (2, -6, 4, -1)
        x = r.interval[0]
        assert abs(sum(c * x**i for i, c in enumerate(r.defining_polynomial))) < Fraction(1, 2**60)

    def test_precision(self):
        r = solve_set(G("(1,2)", "(3,4)", d=4), precision_bits=128)
        assert len(r.decimal) == 2 + decimal_digits(128)
        assert r.interval[1] - r.interval[0] < Fraction(1, 2**128)
        with pytest.raises(ValueError):
            solve_set(symmetric_group(2), precision_bits=4)

    def test_truncate_decimal(self):
        assert truncate_decimal(Fraction(2, 3), 4) == "0.6666"
        assert truncate_decimal(Fraction(1), 3) == "1.000"
        assert decimal_digits(64) == 19


class TestIterate:
    def test_sym2(self):
        t = fpp_iterate(derangement_profile(symmetric_group(2)), 3)
        assert t.p == (1, Fraction(1, 2), Fraction(3, 8), Fraction(39, 128))
        assert t.sigma == (2, 8, 128)
        assert t.f == (1, 3, 39)

    def test_c3(self):
        t = fpp_iterate(derangement_profile(G("(1,2,3)", d=3)), 2)
        assert t.p == (1, Fraction(1, 3), Fraction(19, 81))
        assert t.sigma == (3, 81) and t.f == (1, 19)

    def test_identity(self):
        assert set(fpp_iterate(derangement_profile(trivial_group(4)), 3).p) == {1}

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            fpp_iterate(derangement_profile(symmetric_group(4)), 30)

    def test_iterate_p_agrees(self):
        prof = derangement_profile(G("(1,2)(3,4)", d=4))
        assert iterate_p(prof, 4) == list(fpp_iterate(prof, 4).p)

    def test_converges_to_root(self):
        p = iterate_p(derangement_profile(G("(1,2)", "(3,4)", d=4)), 8)
        r = solve_set(G("(1,2)", "(3,4)", d=4))
        assert p[-1] >= r.interval[0]
        assert float(p[-1]) - r.value < 1e-3


class TestGqp:
    def test_klein_four(self):
        r = fpp_of_gqp(V4, symmetric_group(4))
        assert r.exact == Fraction(1, 3)
        classes = {str(rep): sub.classification for rep, sub in r.per_coset}
        assert classes == {"()": ZERO, "(3,4)": ZERO, "(2,3)": ZERO, "(2,3,4)": ONE, "(2,4,3)": ONE, "(2,4)": ZERO}

    def test_c3_in_sym3(self):
        r = fpp_of_gqp(G("(1,2,3)", d=3), symmetric_group(3))
        assert r.exact == Fraction(1, 2)
        assert r.defining_polynomial == (-1, 2)

    def test_single_coset(self):
        r = fpp_of_gqp(symmetric_group(2), symmetric_group(2))
        assert r.classification == ZERO and r.exact == 0

    def test_algebraic_parts_average_intervals(self):
        Q = G("(1,2)(3,4)", d=4)
        Pg = G("(1,2)(3,4)", "(1,2)", d=4)
        r = fpp_of_gqp(Q, Pg)
        assert r.exact is None
        subs = [sub for _, sub in r.per_coset]
        lo = sum(s.interval[0] if s.exact is None else s.exact for s in subs) / 2
        assert r.interval[0] == lo

    def test_preconditions(self):
        with pytest.raises(TrivialSubgroupError):
            fpp_of_gqp(trivial_group(3), symmetric_group(3))
        with pytest.raises(NotNormalError):
            fpp_of_gqp(G("(1,2)", d=3), symmetric_group(3))
