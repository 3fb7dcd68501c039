from __future__ import annotations

import math
from fractions import Fraction

import pytest

from treefpp.branch import TFG_NO, TFG_UNDETERMINED, TFG_YES, HausdorffDimension, analyze_gqp, search_good_cosets, survey, tfg_status
from treefpp.errors import DegreeError, NotNormalError
from treefpp.permcore import fixed_point_count, generate_group, parse_permutation, symmetric_group


def G(*gens, d):
    return generate_group([parse_permutation(g, d) for g in gens])


V4 = G("(1,2)(3,4)", "(1,3)(2,4)", d=4)


class TestAnalyze:
    def test_klein_four(self):
        r = analyze_gqp(["(1,2)(3,4)", "(1,3)(2,4)"], ["(1,2)", "(1,2,3,4)"], d=4)
        assert r.level_transitive and r.index == 6 and r.finite_type_depth == 2
        assert r.tfg == TFG_NO
        assert r.fpp.exact == Fraction(1, 3)
        assert abs(r.hausdorff.value - math.log(4) / math.log(24)) < 1e-15
        assert r.hausdorff.decimal == "0.436208583971063"

    def test_c3_in_sym3(self):
        r = analyze_gqp(G("(1,2,3)", d=3), symmetric_group(3))
        assert r.hausdorff.decimal.startswith("0.6131")
        assert r.fpp.exact == Fraction(1, 2) and r.tfg == TFG_NO

    def test_full_binary_tree(self):
        r = analyze_gqp(symmetric_group(2), symmetric_group(2))
        assert r.hausdorff.decimal == "1.000000000000000"
        assert r.finite_type_depth == 1 and r.fpp.exact == 0 and r.level_transitive

    def test_not_normal(self):
        with pytest.raises(NotNormalError):
            analyze_gqp(["(1,2)"], ["(1,2)", "(1,2,3)"], d=3)

    def test_hausdorff_exact_pair(self):
        h = HausdorffDimension.of(3, 6)
        assert (h.log_numerator, h.log_denominator) == (3, 6)


class TestTfg:
    def test_statuses(self):
        assert tfg_status(symmetric_group(3)) == TFG_NO  # not perfect
        assert tfg_status(G("(1,2,3,4,5)", "(1,2,3)", d=5)) == TFG_YES  # Alt(5), transitive and perfect
        alt5_on_six = G("(1,2,3,4,5)", "(1,2,3)", d=6)
        assert tfg_status(alt5_on_six) == TFG_NO  # fixes point 6

    def test_undetermined(self):
        # Alt(5) acting diagonally on two copies of {1..5}: perfect, intransitive, no fixed point
        diag = G("(1,2,3,4,5)(6,7,8,9,10)", "(1,2,3)(6,7,8)", d=10)
        assert len(diag) == 60
        assert tfg_status(diag) == TFG_UNDETERMINED


class TestSearch:
    def test_d4_finds_three_cycle_cosets(self):
        found = search_good_cosets(4)
        assert found
        for f in found:
            assert f.q.same_elements(V4) and f.p.same_elements(symmetric_group(4))
            assert len(f.representative.cycles()) == 1 and len(f.representative.cycles()[0]) == 3
            assert f.witness == (1, 1, 1, 1)

    def test_d2_and_d6_empty(self):
        assert search_good_cosets(2) == []
        assert search_good_cosets(6) == []

    def test_d3_and_d5(self):
        for d in (3, 5):
            for f in search_good_cosets(d):
                A = [f.representative * q for q in f.q.elements]
                assert all(fixed_point_count(a) == 1 for a in A)

    def test_bounds(self):
        with pytest.raises(DegreeError):
            search_good_cosets(7)


class TestSurvey:
    def test_sym3(self):
        assert [r.fpp.exact for r in survey(3)] == [1, 1, 0, 0]

    def test_sym2(self):
        assert [r.fpp.exact for r in survey(2)] == [1, 0]

    def test_sym4_classification_counts(self):
        rows = survey(4)
        classes = [r.fpp.classification for r in rows]
        assert classes.count("One") == 4 and classes.count("Zero") == 5 and classes.count("Algebraic") == 2
        # the zero rows are exactly the transitive classes
        assert [r.transitive for r in rows] == [c == "Zero" for c in classes]
