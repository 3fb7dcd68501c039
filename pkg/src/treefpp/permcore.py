"""Permutations of {1, ..., d} and small permutation-group algebra.

Groups are held as explicit, canonically sorted element lists. This is enough
for the degrees handled here (subgroup lattices up to Sym(6), normalizer
scans up to Sym(8)) and keeps every operation a plain set computation.
"""

from __future__ import annotations

import functools
import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    DegreeError,
    NotAGroupError,
    NotSubgroupError,
    PermutationParseError,
)

#: Largest degree accepted by the general group operations.
MAX_DEGREE = 32
#: Largest degree for which all subgroup conjugacy classes are enumerated.
MAX_LATTICE_DEGREE = 6
#: Largest degree for which normalizers are found by scanning all of Sym(d).
MAX_SCAN_DEGREE = 8
#: Default cap on the order of a group built by closure.
MAX_GROUP_ORDER = 500_000


@functools.total_ordering
@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., d}, stored by its 1-indexed image list.

    ``p * q`` is the composition ``p o q`` (apply ``q`` first), matching a
    left action: ``(p * q)(x) == p(q(x))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        d = len(images)
        if d < 1:
            raise DegreeError("a permutation needs degree at least 1")
        if sorted(images) != list(range(1, d + 1)):
            raise ValueError(f"{images} is not a bijection of 1..{d}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, d: int) -> Permutation:
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], d: int) -> Permutation:
        images = list(range(1, d + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise DegreeError(f"cannot compose degree {self.degree} with degree {other.degree}")
        im = self.images
        return Permutation(tuple(im[y - 1] for y in other.images))

    def __lt__(self, other: Permutation) -> bool:
        return (self.degree, self.images) < (other.degree, other.images)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def conjugate_by(self, g: Permutation) -> Permutation:
        """Return ``g * self * g^-1``."""
        return g * self * g.inverse()

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images, start=1))

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(x for x, y in enumerate(self.images, start=1) if x == y)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def __str__(self) -> str:
        return self.cycle_notation()


_TOKEN = re.compile(r"\s*(?:(\d+)|([()\[\],]))")


def parse_permutation(text: str, d: int) -> Permutation:
    """Parse cycle notation ``"(1,2)(3,4)"`` or one-line notation ``"[2,1,4,3]"``.

    Points are 1-indexed. Whitespace is ignored, commas inside a cycle are
    optional when points are space separated, and points fixed by the
    permutation need not be written. Empty text and ``"()"`` give the identity.
    """
    if d < 2:
        raise DegreeError(f"degree must be at least 2, got {d}")
    tokens: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = len(text[pos:]) - len(text[pos:].lstrip())
            raise PermutationParseError("unexpected character", text, pos + stripped)
        start = m.start(1) if m.group(1) else m.start(2)
        tokens.append((m.group(1) or m.group(2), start))
        pos = m.end()

    if tokens and tokens[0][0] == "[":
        return _parse_oneline(tokens, text, d)

    cycles: list[list[int]] = []
    seen: set[int] = set()
    i = 0
    while i < len(tokens):
        tok, at = tokens[i]
        if tok != "(":
            raise PermutationParseError("expected '('", text, at)
        i += 1
        cyc: list[int] = []
        expect_point = True
        while True:
            if i >= len(tokens):
                raise PermutationParseError("unterminated cycle", text, len(text))
            tok, at = tokens[i]
            i += 1
            if tok == ")":
                if cyc and expect_point and tokens[i - 2][0] == ",":
                    raise PermutationParseError("trailing comma in cycle", text, tokens[i - 2][1])
                break
            if tok == ",":
                if expect_point:
                    raise PermutationParseError("unexpected ','", text, at)
                expect_point = True
                continue
            if not tok.isdigit():
                raise PermutationParseError(f"unexpected {tok!r}", text, at)
            point = int(tok)
            if not 1 <= point <= d:
                raise PermutationParseError(f"point {point} outside 1..{d}", text, at)
            if point in seen:
                raise PermutationParseError(f"point {point} repeated", text, at)
            seen.add(point)
            cyc.append(point)
            expect_point = False
        if len(cyc) > 1:
            cycles.append(cyc)
    return Permutation.from_cycles(cycles, d)


def _parse_oneline(tokens, text, d):
    if tokens[-1][0] != "]":
        raise PermutationParseError("expected ']'", text, len(text))
    points = []
    for tok, at in tokens[1:-1]:
        if tok == ",":
            continue
        if not tok.isdigit():
            raise PermutationParseError(f"unexpected {tok!r}", text, at)
        point = int(tok)
        if not 1 <= point <= d:
            raise PermutationParseError(f"point {point} outside 1..{d}", text, at)
        if point in points:
            raise PermutationParseError(f"point {point} repeated", text, at)
        points.append(point)
    if len(points) != d:
        raise PermutationParseError(f"one-line notation needs {d} points, got {len(points)}", text, 0)
    return Permutation(tuple(points))


def fixed_point_count(p: Permutation) -> int:
    return sum(1 for x, y in enumerate(p.images, start=1) if x == y)


@dataclass(frozen=True)
class PermSet:
    """A duplicate-free, canonically sorted set of permutations of one degree.

    ``kind`` is ``"set"`` for an arbitrary set, ``"group"`` for a subgroup of
    Sym(d) and ``"coset"`` for a left coset ``representative * base``.
    """

    degree: int
    elements: tuple[Permutation, ...]
    kind: str = "set"
    base: PermSet | None = field(default=None, repr=False)
    representative: Permutation | None = None

    def __post_init__(self):
        if not self.elements:
            raise ValueError("a permutation set must be nonempty")
        if self.kind not in ("set", "group", "coset"):
            raise ValueError(f"unknown kind {self.kind!r}")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @functools.cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._members

    @property
    def order(self) -> int:
        return len(self.elements)

    def issubset(self, other: PermSet) -> bool:
        return self.degree == other.degree and self._members <= other._members

    def same_elements(self, other: PermSet) -> bool:
        return self.degree == other.degree and self.elements == other.elements

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.elements)) + "}"


def _check_degrees(perms: Sequence[Permutation]) -> int:
    degrees = {p.degree for p in perms}
    if len(degrees) != 1:
        raise DegreeError(f"mixed degrees {sorted(degrees)}")
    d = degrees.pop()
    if d > MAX_DEGREE:
        raise DegreeError(f"degree {d} exceeds the supported bound {MAX_DEGREE}")
    return d


def perm_set(elements: Iterable[Permutation]) -> PermSet:
    """Wrap arbitrary permutations as an unstructured set."""
    elems = sorted(set(elements))
    if not elems:
        raise ValueError("a permutation set must be nonempty")
    d = _check_degrees(elems)
    return PermSet(d, tuple(elems), "set")


def _closure(gens: Sequence[Permutation], d: int, max_order: int) -> list[Permutation]:
    identity = Permutation.identity(d)
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g * x
            if y not in seen:
                seen.add(y)
                if len(seen) > max_order:
                    raise BudgetExceeded(f"group order exceeds {max_order}")
                queue.append(y)
    return sorted(seen)


def generate_group(generators: Sequence[Permutation], max_order: int = MAX_GROUP_ORDER) -> PermSet:
    """Smallest subgroup of Sym(d) containing ``generators``."""
    gens = list(generators)
    if not gens:
        raise ValueError("at least one generator is required")
    d = _check_degrees(gens)
    gens = sorted({g for g in gens if not g.is_identity()})
    return PermSet(d, tuple(_closure(gens, d, max_order)), "group")


def group_from_elements(elements: Iterable[Permutation]) -> PermSet:
    """Declare an explicit element list to be a group, after checking closure."""
    s = perm_set(elements)
    members = s._members
    if Permutation.identity(s.degree) not in members:
        raise NotAGroupError("set does not contain the identity")
    for a in s.elements:
        for b in s.elements:
            if a * b not in members:
                raise NotAGroupError(f"{a} * {b} leaves the set")
    return PermSet(s.degree, s.elements, "group")


def trivial_group(d: int) -> PermSet:
    return PermSet(d, (Permutation.identity(d),), "group")


def symmetric_group(d: int) -> PermSet:
    if d > 9:
        raise BudgetExceeded(f"Sym({d}) is too large to list")
    elems = tuple(Permutation(tuple(x + 1 for x in p)) for p in itertools.permutations(range(d)))
    return PermSet(d, elems, "group")


def _require_group(G: PermSet, what: str = "argument") -> None:
    if G.kind != "group":
        raise NotAGroupError(f"{what} must be a group, got kind {G.kind!r}")


def generating_set(G: PermSet) -> tuple[Permutation, ...]:
    """A small generating set, chosen greedily in canonical element order."""
    _require_group(G)
    gens: list[Permutation] = []
    span = {Permutation.identity(G.degree)}
    for g in G.elements:
        if g not in span:
            gens.append(g)
            span = set(_closure(gens, G.degree, len(G) + 1))
            if len(span) == len(G):
                break
    return tuple(gens)


def orbits(G: PermSet) -> list[tuple[int, ...]]:
    """Orbits of G on {1, ..., d}, each sorted, in order of smallest point."""
    gens = generating_set(G) if G.kind == "group" else G.elements
    seen: set[int] = set()
    out = []
    for start in range(1, G.degree + 1):
        if start in seen:
            continue
        orb = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g(x)
                if y not in orb:
                    orb.add(y)
                    stack.append(y)
        seen |= orb
        out.append(tuple(sorted(orb)))
    return out


def is_transitive(G: PermSet) -> bool:
    _require_group(G)
    return len(orbits(G)[0]) == G.degree


def conjugate_set(S: PermSet, g: Permutation) -> PermSet:
    """The set ``g S g^-1``; a group stays a group."""
    ginv = g.inverse()
    elems = tuple(sorted(g * s * ginv for s in S.elements))
    kind = "group" if S.kind == "group" else "set"
    return PermSet(S.degree, elems, kind)


def _normalizes(g: Permutation, gens: Iterable[Permutation], members: frozenset) -> bool:
    ginv = g.inverse()
    return all(g * q * ginv in members for q in gens)


def is_normal_in(Q: PermSet, P: PermSet) -> bool:
    """True iff ``p Q p^-1 = Q`` for every ``p`` in ``P``."""
    _require_group(Q, "Q")
    _require_group(P, "P")
    if not Q.issubset(P):
        raise NotSubgroupError("Q is not a subset of P")
    qgens = generating_set(Q)
    return all(_normalizes(p, qgens, Q._members) for p in generating_set(P))


def coset(representative: Permutation, base: PermSet) -> PermSet:
    """The left coset ``representative * base``."""
    _require_group(base, "base")
    elems = tuple(sorted(representative * q for q in base.elements))
    return PermSet(base.degree, elems, "coset", base=base, representative=elems[0])


def cosets(P: PermSet, Q: PermSet) -> list[PermSet]:
    """Left cosets of Q in P, each represented by its least element.

    The list is ordered by representative, so ``Q`` itself comes first.
    """
    _require_group(P, "P")
    _require_group(Q, "Q")
    if not Q.issubset(P):
        raise NotSubgroupError("Q is not a subset of P")
    assigned: set[Permutation] = set()
    out = []
    for g in P.elements:
        if g in assigned:
            continue
        elems = tuple(sorted(g * q for q in Q.elements))
        assigned.update(elems)
        out.append(PermSet(P.degree, elems, "coset", base=Q, representative=g))
    return out


def commutator_subgroup(G: PermSet) -> PermSet:
    """Subgroup generated by all ``g^-1 h^-1 g h``."""
    _require_group(G)
    comms = set()
    for g in G.elements:
        ginv = g.inverse()
        for h in G.elements:
            comms.add(ginv * h.inverse() * g * h)
    return generate_group(sorted(comms))


def normalizer_in_sym(Q: PermSet) -> PermSet:
    """``N_{Sym(d)}(Q)`` by a full scan of Sym(d)."""
    _require_group(Q, "Q")
    if Q.degree > MAX_SCAN_DEGREE:
        raise BudgetExceeded(f"normalizer scan limited to degree {MAX_SCAN_DEGREE}")
    qgens = generating_set(Q)
    members = Q._members
    elems = []
    for img in itertools.permutations(range(1, Q.degree + 1)):
        g = Permutation(img)
        if _normalizes(g, qgens, members):
            elems.append(g)
    return PermSet(Q.degree, tuple(elems), "group")


# --- subgroup lattice of Sym(d), d <= 6 -------------------------------------


class _SymTable:
    """Sym(d) indexed in lexicographic image order, with a product table.

    Index order coincides with the canonical permutation order, so a sorted
    tuple of indices is the canonical form of a set.
    """

    def __init__(self, d: int):
        self.d = d
        arr = np.array(list(itertools.permutations(range(d))), dtype=np.int64)
        n = len(arr)
        weights = d ** np.arange(d - 1, -1, -1, dtype=np.int64)
        lookup = np.full(d**d, -1, dtype=np.int64)
        lookup[arr @ weights] = np.arange(n)
        comp = arr[np.arange(n)[:, None, None], arr[None, :, :]]
        self.mult = lookup[comp @ weights].tolist()
        inv = np.argsort(arr, axis=1)
        self.inv = lookup[inv @ weights].tolist()
        self.perms = [Permutation(tuple(int(v) + 1 for v in row)) for row in arr]
        self.n = n

    def closure(self, gens: Sequence[int]) -> tuple[int, ...]:
        mult = self.mult
        seen = {0}
        queue = [0]
        for x in queue:
            for g in gens:
                y = mult[g][x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return tuple(sorted(seen))

    def conj(self, x: int, g: int) -> int:
        """Index of ``x g x^-1``."""
        return self.mult[self.mult[x][g]][self.inv[x]]

    def normalizer(self, gens: Sequence[int], members: set) -> list[int]:
        return [x for x in range(self.n) if all(self.conj(x, g) in members for g in gens)]

    def greedy_gens(self, elems: Sequence[int]) -> list[int]:
        gens: list[int] = []
        span = {0}
        for x in elems:
            if x not in span:
                gens.append(x)
                span = set(self.closure(gens))
                if len(span) == len(elems):
                    break
        return gens


@functools.lru_cache(maxsize=None)
def _lattice(d: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Canonical (elements, generators) per conjugacy class of subgroups."""
    tab = _SymTable(d)
    seen: set[tuple[int, ...]] = set()
    reps: list[tuple[tuple[int, ...], list[int]]] = []

    def register(K: tuple[int, ...], gens: list[int]) -> None:
        best = None
        for x in range(tab.n):
            c = tuple(sorted(tab.conj(x, k) for k in K))
            seen.add(c)
            if best is None or c < best[0]:
                best = (c, x)
        canon, x = best
        reps.append((canon, [tab.conj(x, g) for g in gens]))

    register((0,), [])
    i = 0
    while i < len(reps):
        H, hgens = reps[i]
        i += 1
        hset = set(H)
        ngens = tab.greedy_gens(tab.normalizer(hgens, hset))
        covered = bytearray(tab.n)
        for h in H:
            covered[h] = 1
        for g in range(tab.n):
            if covered[g]:
                continue
            # <H, g> is unchanged by g -> hg, gh and conjugate under N(H) by g -> ngn^-1
            covered[g] = 1
            stack = [g]
            while stack:
                x = stack.pop()
                nbrs = [tab.mult[h][x] for h in hgens] + [tab.mult[x][h] for h in hgens]
                nbrs += [tab.conj(n, x) for n in ngens]
                for y in nbrs:
                    if not covered[y]:
                        covered[y] = 1
                        stack.append(y)
            kgens = hgens + [g]
            K = tab.closure(kgens)
            if K not in seen:
                register(K, kgens)
    reps.sort(key=lambda r: (len(r[0]), r[0]))
    return tuple((canon, tuple(gens)) for canon, gens in reps)


def subgroup_conjugacy_classes(d: int) -> list[PermSet]:
    """One canonical representative per conjugacy class of subgroups of Sym(d).

    Each representative has the least sorted element list in its class; the
    list is ordered by group order, then by that element list.
    """
    if not 2 <= d <= MAX_LATTICE_DEGREE:
        raise DegreeError(f"subgroup enumeration supports 2 <= d <= {MAX_LATTICE_DEGREE}, got {d}")
    perms = _sym_perms(d)
    out = []
    for elems, _ in _lattice(d):
        out.append(PermSet(d, tuple(perms[i] for i in elems), "group"))
    return out


def subgroup_class_generators(d: int) -> list[tuple[Permutation, ...]]:
    """Generators for the representatives of :func:`subgroup_conjugacy_classes`."""
    if not 2 <= d <= MAX_LATTICE_DEGREE:
        raise DegreeError(f"subgroup enumeration supports 2 <= d <= {MAX_LATTICE_DEGREE}, got {d}")
    perms = _sym_perms(d)
    out = []
    for elems, gens in _lattice(d):
        members = frozenset(perms[i] for i in elems)
        full = [perms[i] for i in gens]
        # drop redundant generators left over from the construction chain
        kept = list(full)
        for g in full:
            trial = [x for x in kept if x != g]
            if trial and len(_closure(trial, d, len(members) + 1)) == len(members):
                kept = trial
        out.append(tuple(sorted(kept)) if members != {Permutation.identity(d)} else ())
    return out


@functools.lru_cache(maxsize=None)
def _sym_perms(d: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(tuple(x + 1 for x in p)) for p in itertools.permutations(range(d)))
