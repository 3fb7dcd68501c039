"""Square matrices over GF(2) stored as row bitmasks, and GL_n(F_2) counting."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

from .errors import BudgetExceeded, DegreeError


def gf2_rank(rows, n_cols: int) -> int:
    """Rank over GF(2) of integer row bitmasks, by Gaussian elimination."""
    work = list(rows)
    rank = 0
    for col in range(n_cols):
        bit = 1 << col
        pivot = next((r for r in range(rank, len(work)) if work[r] & bit), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r] & bit:
                work[r] ^= work[rank]
        rank += 1
    return rank


@dataclass(frozen=True)
class BitMatrixF2:
    """n x n matrix over GF(2); bit j of ``rows[i]`` is entry (i, j)."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DegreeError("matrix dimension must be at least 1")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        if any(r >> self.n for r in self.rows):
            raise ValueError("row has bits beyond column n-1")

    @classmethod
    def from_lists(cls, entries) -> BitMatrixF2:
        rows = tuple(sum(int(v) << j for j, v in enumerate(row)) for row in entries)
        return cls(len(rows), rows)

    @classmethod
    def identity(cls, n: int) -> BitMatrixF2:
        return cls(n, tuple(1 << i for i in range(n)))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def __add__(self, other: BitMatrixF2) -> BitMatrixF2:
        return BitMatrixF2(self.n, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def plus_identity(self) -> BitMatrixF2:
        """``A + I``, which over GF(2) is also ``A - I``."""
        return self + BitMatrixF2.identity(self.n)

    def apply(self, x: int) -> int:
        """Matrix times the column vector whose bit j is coordinate j."""
        return sum((bin(r & x).count("1") & 1) << i for i, r in enumerate(self.rows))

    def rank(self) -> int:
        return gf2_rank(self.rows, self.n)

    def is_invertible(self) -> bool:
        return self.rank() == self.n


def block_diagonal(blocks) -> BitMatrixF2:
    rows = []
    offset = 0
    for b in blocks:
        rows.extend(r << offset for r in b.rows)
        offset += b.n
    return BitMatrixF2(offset, tuple(rows))


A2 = BitMatrixF2.from_lists([[1, 1], [1, 0]])
A3 = BitMatrixF2.from_lists([[1, 1, 1], [1, 1, 0], [1, 0, 0]])


def witness_matrix(n: int) -> BitMatrixF2:
    """An invertible A with A - I invertible: copies of A2, plus one A3 if n is odd."""
    if n == 1:
        raise ValueError("GL_1(F_2) is trivial; no matrix A has A - I invertible")
    if n < 1:
        raise ValueError("n must be at least 2")
    blocks = [A2] * (n // 2)
    if n % 2:
        blocks = [A2] * ((n - 3) // 2) + [A3]
    A = block_diagonal(blocks)
    if not (A.is_invertible() and A.plus_identity().is_invertible()):
        raise ArithmeticError(f"witness for n={n} failed its invertibility check")
    return A


def general_linear_group(n: int) -> list[BitMatrixF2]:
    """All of GL_n(F_2), in increasing order of the packed bit pattern."""
    if n > 4:
        raise BudgetExceeded("listing GL_n(F_2) is limited to n <= 4")
    mask = (1 << n) - 1
    out = []
    for code in range(1 << (n * n)):
        rows = tuple((code >> (n * i)) & mask for i in range(n))
        if gf2_rank(rows, n) == n:
            out.append(BitMatrixF2(n, rows))
    return out


def _count_range_py(n: int, start: int, stop: int) -> tuple[int, int]:
    mask = (1 << n) - 1
    ident = [1 << i for i in range(n)]
    good = total = 0
    for code in range(start, stop):
        rows = [(code >> (n * i)) & mask for i in range(n)]
        if gf2_rank(rows, n) == n:
            total += 1
            if gf2_rank([r ^ e for r, e in zip(rows, ident)], n) == n:
                good += 1
    return good, total


if numba is not None:

    @numba.njit(cache=True)
    def _full_rank(work, n):
        rank = 0
        for col in range(n):
            bit = np.int64(1) << col
            pivot = -1
            for r in range(rank, n):
                if work[r] & bit:
                    pivot = r
                    break
            if pivot < 0:
                return False
            tmp = work[rank]
            work[rank] = work[pivot]
            work[pivot] = tmp
            for r in range(n):
                if r != rank and (work[r] & bit):
                    work[r] ^= work[rank]
            rank += 1
        return True

    @numba.njit(cache=True)
    def _count_range_jit(n, start, stop):
        mask = (np.int64(1) << n) - 1
        work = np.empty(n, dtype=np.int64)
        good = 0
        total = 0
        for code in range(start, stop):
            for i in range(n):
                work[i] = (code >> (n * i)) & mask
            if _full_rank(work, n):
                total += 1
                for i in range(n):
                    work[i] = ((code >> (n * i)) & mask) ^ (np.int64(1) << i)
                if _full_rank(work, n):
                    good += 1
        return good, total


@dataclass(frozen=True)
class GLCount:
    n: int
    good: int
    total: int


def glnf2_count(n: int, allow_large: bool = False, chunks: int = 1) -> GLCount:
    """Count GL_n(F_2) and its members A with A - I invertible.

    All 2^(n^2) bit patterns are tested. The pattern space can be split into
    ``chunks`` independent ranges; the counts are summed exactly, so the
    result does not depend on the split.
    """
    if not 1 <= n <= 6:
        raise DegreeError(f"n must be in 1..5 (6 with allow_large), got {n}")
    if n == 6 and not allow_large:
        raise BudgetExceeded("n = 6 enumerates 2^36 matrices; pass allow_large=True")
    space = 1 << (n * n)
    bounds = [space * i // chunks for i in range(chunks + 1)]
    counter = _count_range_jit if numba is not None else _count_range_py
    good = total = 0
    for lo, hi in zip(bounds, bounds[1:]):
        g, t = counter(n, lo, hi)
        good += int(g)
        total += int(t)
    return GLCount(n, good, total)
