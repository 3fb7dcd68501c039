from __future__ import annotations

import itertools

import pytest
import sympy

from treefpp.errors import BudgetExceeded, DegreeError
from treefpp.gf2 import A2, A3, BitMatrixF2, block_diagonal, general_linear_group, glnf2_count, gf2_rank, witness_matrix


def det_mod2_leibniz(entries):
    n = len(entries)
    total = 0
    for perm in itertools.permutations(range(n)):
        term = 1
        for i, j in enumerate(perm):
            term &= entries[i][j]
        total ^= term
    return total


def det_mod2_sympy(entries):
    return int(sympy.Matrix(entries).det()) % 2


def all_matrices(n):
    for bits in itertools.product((0, 1), repeat=n * n):
        yield [list(bits[i * n:(i + 1) * n]) for i in range(n)]


def leibniz_counts(n):
    good = total = 0
    for m in all_matrices(n):
        if det_mod2_leibniz(m):
            total += 1
            shifted = [[m[i][j] ^ (i == j) for j in range(n)] for i in range(n)]
            good += det_mod2_leibniz(shifted)
    return good, total


class TestMatrix:
    def test_round_trip(self):
        m = [[1, 0, 1], [0, 1, 1], [1, 1, 0]]
        assert BitMatrixF2.from_lists(m).to_lists() == m

    def test_rank_against_determinant(self):
        for m in all_matrices(3):
            assert (BitMatrixF2.from_lists(m).rank() == 3) == bool(det_mod2_leibniz(m))

    def test_apply(self):
        A = BitMatrixF2.from_lists([[1, 1], [0, 1]])
        assert A.apply(0b10) == 0b11 and A.apply(0b01) == 0b01

    def test_validation(self):
        with pytest.raises(ValueError):
            BitMatrixF2(2, (1,))
        with pytest.raises(ValueError):
            BitMatrixF2(2, (4, 1))
        with pytest.raises(DegreeError):
            BitMatrixF2(0, ())
        assert gf2_rank([0b11, 0b11], 2) == 1


class TestWitness:
    def test_small_blocks(self):
        assert witness_matrix(2).to_lists() == [[1, 1], [1, 0]]
        assert witness_matrix(3).to_lists() == [[1, 1, 1], [1, 1, 0], [1, 0, 0]]
        assert witness_matrix(5) == block_diagonal([A2, A3])

    @pytest.mark.parametrize("n", range(2, 13))
    def test_independent_determinants(self, n):
        A = witness_matrix(n).to_lists()
        shifted = [[A[i][j] ^ (i == j) for j in range(n)] for i in range(n)]
        assert det_mod2_sympy(A) == 1 and det_mod2_sympy(shifted) == 1

    def test_n1_has_no_witness(self):
        with pytest.raises(ValueError):
            witness_matrix(1)


class TestCount:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_against_leibniz(self, n):
        c = glnf2_count(n)
        assert (c.good, c.total) == leibniz_counts(n)

    @pytest.mark.parametrize("n, good, total", [(1, 0, 1), (2, 2, 6), (3, 48, 168), (4, 5824, 20160)])
    def test_table(self, n, good, total):
        c = glnf2_count(n)
        assert (c.good, c.total) == (good, total)

    @pytest.mark.slow
    def test_n5(self):
        c = glnf2_count(5)
        assert (c.good, c.total) == (2887680, 9999360)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_group_order(self, n):
        expected = 1
        for i in range(n):
            expected *= 2**n - 2**i
        assert glnf2_count(n).total == expected

    def test_chunking_is_exact(self):
        assert glnf2_count(4, chunks=7) == glnf2_count(4)

    def test_python_fallback_agrees(self):
        from treefpp.gf2 import _count_range_py

        assert _count_range_py(3, 0, 1 << 9) == (48, 168)

    def test_large_needs_opt_in(self):
        with pytest.raises(BudgetExceeded):
            glnf2_count(6)
        with pytest.raises(DegreeError):
            glnf2_count(7)

    def test_listing(self):
        assert len(general_linear_group(3)) == 168
        with pytest.raises(BudgetExceeded):
            general_linear_group(5)
