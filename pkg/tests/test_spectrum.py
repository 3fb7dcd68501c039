from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treefpp.permcore import (
    Permutation,
    conjugate_set,
    coset,
    cosets,
    fixed_point_count,
    generate_group,
    orbits,
    parse_permutation,
    subgroup_conjugacy_classes,
    symmetric_group,
    trivial_group,
)
from treefpp.spectrum import (
    DerangementProfile,
    characteristic_polynomial,
    coset_burnside_check,
    derangement_profile,
    evaluate,
    mean_fixed_points,
)


def P(text, d):
    return parse_permutation(text, d)


V4 = generate_group([P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4)])
C3 = generate_group([P("(1,2,3)", 3)])


def brute_f(S, x):
    """``f_S(x)`` straight from its definition, one element at a time."""
    x = Fraction(x)
    elems = list(S)
    return sum(1 - (1 - x) ** fixed_point_count(s) for s in elems) / len(elems)


class TestProfile:
    def test_examples(self):
        assert derangement_profile(symmetric_group(3)).counts == (2, 3, 0, 1)
        assert derangement_profile(trivial_group(3)).counts == (0, 0, 0, 1)
        p = derangement_profile(generate_group([P("(1,2)(3,4)", 4)]))
        assert p.counts == (1, 0, 0, 0, 1) and p.total == 2

    def test_validation(self):
        with pytest.raises(ValueError):
            DerangementProfile(3, (1, 0, 1, 0), 2)  # fixes exactly d-1 points
        with pytest.raises(ValueError):
            DerangementProfile(2, (1, 0, 1), 3)
        with pytest.raises(ValueError):
            DerangementProfile(2, (-1, 0, 2), 1)

    def test_sym4_has_nine_derangements(self):
        assert derangement_profile(symmetric_group(4)).derangements == 9


class TestCharPoly:
    def test_c3(self):
        f = characteristic_polynomial(derangement_profile(C3))
        assert f.coefficients == (0, 1, -1, Fraction(1, 3))

    def test_trivial_group(self):
        f = characteristic_polynomial(derangement_profile(trivial_group(3)))
        assert f.coefficients == (0, 3, -3, 1)

    def test_sym2(self):
        f = characteristic_polynomial(derangement_profile(symmetric_group(2)))
        assert f.coefficients == (0, 1, Fraction(-1, 2))
        assert evaluate(f, Fraction(1, 2)) == Fraction(3, 8)

    def test_values(self):
        for S in subgroup_conjugacy_classes(4):
            f = characteristic_polynomial(derangement_profile(S))
            assert evaluate(f, 0) == 0
            assert f(1) == 1 - Fraction(derangement_profile(S).derangements, len(S))
        assert characteristic_polynomial(derangement_profile(C3))(1) == Fraction(1, 3)

    @given(st.sampled_from(subgroup_conjugacy_classes(4)), st.fractions(0, 1))
    def test_matches_definition(self, S, x):
        assert evaluate(characteristic_polynomial(derangement_profile(S)), x) == brute_f(S, x)

    def test_integer_coefficients(self):
        f = characteristic_polynomial(derangement_profile(symmetric_group(3)))
        assert f.integer_coefficients() == (0, 6, -3, 1)
        assert f.derivative().coefficients[:3] == (1, -1, Fraction(1, 2))


class TestBurnside:
    def test_mean_fixed_points(self):
        assert mean_fixed_points(symmetric_group(3)) == 1
        assert mean_fixed_points(generate_group([P("(1,2)", 4), P("(3,4)", 4)])) == 2
        assert mean_fixed_points(coset(P("(1,2,3)", 4), V4)) == 1

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_classical_burnside(self, d):
        for H in subgroup_conjugacy_classes(d):
            assert mean_fixed_points(H) == len(orbits(H))

    def test_transitive_coset(self):
        A = coset(P("(1,2)", 4), V4)
        check = coset_burnside_check(A)
        assert (check.mean, check.predicted, check.agrees, check.rule) == (1, 1, True, "transitive")
        assert sorted(fixed_point_count(a) for a in A.elements) == [0, 0, 2, 2]

    def test_subgroup_as_own_coset(self):
        H = generate_group([P("(1,2)", 4)])
        check = coset_burnside_check(coset(Permutation.identity(4), H))
        assert check.predicted == 3 and check.agrees

    @pytest.mark.parametrize("d", [3, 4])
    def test_all_normalizing_cosets_agree(self, d):
        from treefpp.permcore import normalizer_in_sym

        for H in subgroup_conjugacy_classes(d)[1:]:
            for A in cosets(normalizer_in_sym(H), H):
                check = coset_burnside_check(A)
                assert check.agrees, (H, A)

    def test_rejects_non_coset(self):
        with pytest.raises(ValueError):
            coset_burnside_check(symmetric_group(3))


@given(st.sampled_from(subgroup_conjugacy_classes(5)),
       st.permutations([1, 2, 3, 4, 5]).map(lambda xs: Permutation(tuple(xs))))
def test_profile_is_conjugacy_invariant(H, g):
    assert derangement_profile(conjugate_set(H, g)) == derangement_profile(H)
