"""Independent checks of the analytic fixed-point proportions.

``brute_count`` enumerates every portrait of the truncated tree: one label
from S at each vertex of levels 0..n-1. A vertex ``x_1 ... x_n`` at level n is
fixed iff the label at each prefix fixes the next letter. Counting portraits
with some fixed level-n vertex gives f_n exactly, without using the level
recursion or f_S.

``mc_estimate`` samples the fixed-point process: starting from the root,
every fixed vertex draws a uniform label from S and its fixed children carry
on. This is a Galton-Watson process whose offspring law is
``P(k) = D[k] / #S``; the survival probability to depth n is p_n.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BudgetExceeded
from .permcore import PermSet, Permutation, cosets
from .solver import next_level_count
from .spectrum import derangement_profile
from .validation import check_gqp_pair

DEFAULT_BUDGET = int(os.environ.get("TREEFPP_BUDGET", 10**8))
#: Samples per independent random stream.
MC_BLOCK = 1 << 16
#: Frontier size (as a power of d) at which a sample is declared surviving.
MC_CAP_EXPONENT = 12
_CHUNK = 1 << 18


@dataclass(frozen=True)
class OracleReport:
    degree: int
    level: int
    sigma_n: int
    f_n_brute: int
    f_n_recursion: int
    p_n: Fraction
    agrees: bool


def internal_vertex_count(d: int, n: int) -> int:
    return (d**n - 1) // (d - 1)


def _count_fixing_portraits(labels: list[Permutation], d: int, n: int) -> int:
    m = len(labels)
    V = internal_vertex_count(d, n)
    if n == 0:
        return 1
    fix = np.array([[p(c + 1) == c + 1 for c in range(d)] for p in labels], dtype=bool)
    total = m**V
    radix = [m**v for v in range(V)]
    count = 0
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        alive: dict[int, np.ndarray] = {}
        for v in range(V - 1, -1, -1):
            lab = (idx // radix[v]) % m
            acc = np.zeros(len(idx), dtype=bool)
            for c in range(d):
                child = v * d + 1 + c
                hit = fix[lab, c]
                if child < V:
                    hit = hit & alive.pop(child)
                acc |= hit
            alive[v] = acc
        count += int(alive[0].sum())
    return count


def brute_count(S: PermSet, n: int, budget: int = DEFAULT_BUDGET) -> OracleReport:
    """Exhaustive f_n for W_S at level n, compared with the level recursion."""
    if n < 1:
        raise ValueError("level must be at least 1")
    labels = list(S.elements)
    d, m = S.degree, len(labels)
    V = internal_vertex_count(d, n)
    sigma = m**V
    if sigma > budget:
        raise BudgetExceeded(f"{sigma} portraits exceed the budget {budget}")
    f_brute = _count_fixing_portraits(labels, d, n)
    sigma_prev = m ** internal_vertex_count(d, n - 1)
    f_prev = _count_fixing_portraits(labels, d, n - 1)
    f_rec = next_level_count(derangement_profile(S), sigma_prev, f_prev)
    p = Fraction(f_brute, sigma)
    return OracleReport(d, n, sigma, f_brute, f_rec, p, f_brute == f_rec)


@dataclass(frozen=True)
class GqpOracleReport:
    level: int
    per_coset: tuple[tuple[Permutation, OracleReport], ...]
    sigma_n: int
    f_n: int
    p_n: Fraction
    agrees: bool


def gqp_brute(Q: PermSet, P: PermSet, n: int, budget: int = DEFAULT_BUDGET) -> GqpOracleReport:
    """Brute-force level-n counts of G_Q^P, one coset of labels at a time."""
    check_gqp_pair(Q, P)
    parts = tuple((A.representative, brute_count(A, n, budget)) for A in cosets(P, Q))
    sigma = sum(r.sigma_n for _, r in parts)
    f = sum(r.f_n_brute for _, r in parts)
    return GqpOracleReport(n, parts, sigma, f, Fraction(f, sigma), all(r.agrees for _, r in parts))


@dataclass(frozen=True)
class McEstimate:
    samples: int
    survivors: int
    depth: int
    seed: int

    @property
    def estimate(self) -> Fraction:
        return Fraction(self.survivors, self.samples)

    @property
    def stderr(self) -> float:
        e = self.survivors / self.samples
        return math.sqrt(e * (1 - e) / self.samples)


def _stream(seed: int, block: int) -> np.random.Generator:
    """Philox stream keyed by (seed, block); independent of scheduling."""
    key = ((seed & (2**64 - 1)) << 64) | block
    return np.random.Generator(np.random.Philox(key=key))


def _simulate_block(kinds, probs, d, depth, size, seed, block) -> int:
    rng = _stream(seed, block)
    cap = d**MC_CAP_EXPONENT
    z = np.ones(size, dtype=np.int64)
    for _ in range(depth):
        active = np.nonzero((z > 0) & (z < cap))[0]
        if len(active) == 0:
            break
        remaining = z[active]
        nxt = np.zeros(len(active), dtype=np.int64)
        left = 1.0
        for j, (k, pk) in enumerate(zip(kinds, probs)):
            if j == len(kinds) - 1:
                drawn = remaining
            else:
                drawn = rng.binomial(remaining, min(1.0, pk / left))
                remaining = remaining - drawn
                left -= pk
            nxt += k * drawn
        z[active] = nxt
    return int(np.count_nonzero(z))


def mc_estimate(S: PermSet, depth: int, samples: int, seed: int, workers: int = 1) -> McEstimate:
    """Monte Carlo survival frequency of the fixed-point process to ``depth``.

    Samples are split into fixed blocks of ``MC_BLOCK``, each driven by its
    own counter-based stream, so any ``workers`` value gives the same counts.
    A frontier reaching ``d**MC_CAP_EXPONENT`` vertices counts as surviving.
    """
    if samples < 1 or depth < 1:
        raise ValueError("samples and depth must be positive")
    prof = derangement_profile(S)
    kinds = [k for k, c in enumerate(prof.counts) if c]
    probs = [prof.counts[k] / prof.total for k in kinds]
    sizes = [min(MC_BLOCK, samples - b * MC_BLOCK) for b in range(math.ceil(samples / MC_BLOCK))]

    def run(b: int) -> int:
        return _simulate_block(kinds, probs, prof.degree, depth, sizes[b], seed, b)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            survivors = sum(pool.map(run, range(len(sizes))))
    else:
        survivors = sum(run(b) for b in range(len(sizes)))
    return McEstimate(samples, survivors, depth, seed)
