"""
Permutations, Hessenberg functions and the statistics built on them.

Permutations act on ``[n] = {1, ..., n}`` and are stored in one-line notation
as tuples of 1-based values, so ``w(j)`` is ``w[j - 1]``.

>>> h = make_hessenberg((2, 3, 5, 6, 6, 6))
>>> sorted(h.T), h.N_h
([1, 4, 5], 7)
>>> ell_h(Permutation.parse("234156"), h)
1
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    InvalidPermutation,
    NotWeaklyIncreasing,
    ParseError,
    Reducible,
    SizeMismatch,
    ValueOutOfRange,
)

__all__ = [
    "Permutation", "HessenbergFunction", "IncomparabilityGraph",
    "make_hessenberg", "parse_hessenberg", "all_permutations",
    "ell_h", "descent_set", "poincare_coefficients", "bruhat_leq", "iota",
    "nilpotent_cell", "in_generator_set", "opposite_cell_dim",
    "iter_perms_by_ell", "swapped_positions",
]


class Permutation(tuple):
    """A permutation of [n] in one-line notation; ``w(j)`` evaluates it.

    Ordering is the lexicographic order of one-line words (inherited from
    ``tuple``), which fixes every enumeration order in the package.
    """

    __slots__ = ()

    def __new__(cls, word):
        word = tuple(int(x) for x in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidPermutation(f"{word} is not a permutation of 1..{len(word)}")
        return tuple.__new__(cls, word)

    @classmethod
    def _trusted(cls, word):
        return tuple.__new__(cls, word)

    @classmethod
    def identity(cls, n):
        return cls._trusted(range(1, n + 1))

    @classmethod
    def simple(cls, i, n):
        """The simple reflection s_i = s_{i,i+1}."""
        if not 1 <= i < n:
            raise ValueOutOfRange(f"s_{i} is not defined in S_{n}")
        word = list(range(1, n + 1))
        word[i - 1], word[i] = word[i], word[i - 1]
        return cls._trusted(word)

    @classmethod
    def transposition(cls, j, i, n):
        """The transposition s_{j,i} exchanging j and i."""
        word = list(range(1, n + 1))
        word[j - 1], word[i - 1] = word[i - 1], word[j - 1]
        return cls._trusted(word)

    @classmethod
    def parse(cls, text):
        """Parse ``"4321"`` (n <= 9) or ``"10,2,3,..."``."""
        text = text.strip()
        if "," in text:
            parts = text.split(",")
        else:
            parts = list(text)
        word = []
        for pos, part in enumerate(parts, 1):
            try:
                word.append(int(part))
            except ValueError:
                raise ParseError(
                    f"invalid permutation entry {part!r} at position {pos}") from None
        return cls(word)

    @property
    def n(self):
        return len(self)

    @property
    def word(self):
        return tuple(self)

    def __call__(self, j):
        return self[j - 1]

    def __mul__(self, other):
        # composition: (u * v)(i) = u(v(i))
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other) != len(self):
            raise SizeMismatch(f"cannot compose S_{len(self)} with S_{len(other)}")
        return Permutation._trusted(self[x - 1] for x in other)

    __rmul__ = None

    def inverse(self):
        inv = [0] * len(self)
        for pos, val in enumerate(self, 1):
            inv[val - 1] = pos
        return Permutation._trusted(inv)

    def left_simple(self, i):
        """s_i * w: exchange the values i and i+1."""
        return Permutation._trusted(
            i + 1 if x == i else i if x == i + 1 else x for x in self)

    def swap_positions(self, j, i):
        """w * s_{j,i}: exchange the entries in positions j and i."""
        word = list(self)
        word[j - 1], word[i - 1] = word[i - 1], word[j - 1]
        return Permutation._trusted(word)

    def length(self):
        return sum(1 for a, b in itertools.combinations(self, 2) if a > b)

    def __str__(self):
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __repr__(self):
        return f"Permutation({str(self)!r})"


def all_permutations(n):
    """All of S_n in lexicographic order."""
    return [Permutation._trusted(p) for p in itertools.permutations(range(1, n + 1))]


@dataclass(frozen=True)
class IncomparabilityGraph:
    n: int
    edges: tuple  # sorted pairs (j, i) with j < i <= h(j)

    def __contains__(self, pair):
        j, i = sorted(pair)
        return (j, i) in self._edge_set

    @cached_property
    def _edge_set(self):
        return frozenset(self.edges)

    def neighbors(self, v):
        return sorted({b if a == v else a for a, b in self.edges if v in (a, b)})


@dataclass(frozen=True)
class HessenbergFunction:
    """A Hessenberg function with h(i) >= i+1 for all i < n.

    ``T`` uses the convention h(0) = 2, so 1 is always a member.
    """

    values: tuple
    n: int = field(init=False)
    N_h: int = field(init=False)
    T: frozenset = field(init=False)

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n < 2:
            raise ValueOutOfRange("a Hessenberg function needs n >= 2")
        for i, v in enumerate(values, 1):
            if not i <= v <= n:
                raise ValueOutOfRange(f"h({i}) = {v} is outside [{i}, {n}]")
        for i in range(1, n):
            if values[i] < values[i - 1]:
                raise NotWeaklyIncreasing(
                    f"h({i}) = {values[i - 1]} > h({i + 1}) = {values[i]}")
        for i in range(1, n):
            if values[i - 1] == i:
                raise Reducible(i, values)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "N_h", sum(v - i for i, v in enumerate(values, 1)))
        ext = (2,) + values
        object.__setattr__(self, "T", frozenset(i for i in range(1, n) if ext[i - 1] > i))

    def __call__(self, i):
        return self.values[i - 1]

    def __str__(self):
        return ",".join(map(str, self.values))

    @cached_property
    def graph(self):
        edges = tuple((j, i) for j in range(1, self.n + 1)
                      for i in range(j + 1, self.values[j - 1] + 1))
        return IncomparabilityGraph(self.n, edges)

    @cached_property
    def _pairs0(self):
        # zero-based (j, i) index pairs of the edges, for hot loops
        return tuple((j - 1, i - 1) for j, i in self.graph.edges)

    def in_T_or_n(self, i):
        return i in self.T or i == self.n


def make_hessenberg(values):
    return HessenbergFunction(tuple(values))


def parse_hessenberg(text):
    """Parse ``"2,4,4,4"``; bad tokens are reported with their position."""
    parts = text.strip().split(",")
    values = []
    for pos, part in enumerate(parts, 1):
        try:
            values.append(int(part))
        except ValueError:
            raise ParseError(f"invalid value {part!r} at position {pos}") from None
    return make_hessenberg(values)


def _check_size(w, h):
    if len(w) != h.n:
        raise SizeMismatch(f"permutation of size {len(w)} with h of size {h.n}")


def ell_h(w, h):
    """|{(j, i) : j < i <= h(j), w(j) > w(i)}|."""
    _check_size(w, h)
    return sum(1 for a, b in h._pairs0 if w[a] > w[b])


def opposite_cell_dim(w, h):
    """|{(j, i) : j < i <= h(j), w(j) < w(i)}| = N_h - ell_h(w)."""
    _check_size(w, h)
    return sum(1 for a, b in h._pairs0 if w[a] < w[b])


def descent_set(w):
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def in_generator_set(w, h):
    """w^{-1}(w(j)+1) <= h(j) whenever w(j) < n."""
    _check_size(w, h)
    n = h.n
    inv = [0] * (n + 2)
    for pos, val in enumerate(w, 1):
        inv[val] = pos
    return all(inv[w[j - 1] + 1] <= h.values[j - 1]
               for j in range(1, n + 1) if w[j - 1] < n)


def nilpotent_cell(w, h):
    """Dimension of the nilpotent Schubert-cell intersection, or None if empty.

    Nonempty iff w^{-1}(w(j)-1) <= h(j) for all j, with w^{-1}(0) = 0.
    """
    _check_size(w, h)
    inv = [0] * (h.n + 1)
    for pos, val in enumerate(w, 1):
        inv[val] = pos
    for j in range(1, h.n + 1):
        if inv[w[j - 1] - 1] > h.values[j - 1]:
            return None
    return ell_h(w, h)


def iota(w):
    n = len(w)
    return Permutation._trusted(n - x + 1 for x in w)


def bruhat_leq(v, w):
    """v <= w in Bruhat order via sorted-prefix domination."""
    if len(v) != len(w):
        raise SizeMismatch(f"cannot compare S_{len(v)} with S_{len(w)}")
    for k in range(1, len(v)):
        if any(a > b for a, b in zip(sorted(v[:k]), sorted(w[:k]))):
            return False
    return True


def iter_perms_by_ell(h, max_k=None):
    """Yield ``(w, ell_h(w))`` for all w with ell_h(w) <= max_k, lexicographically.

    Builds one-line words left to right; a partial word whose h-inversions
    already exceed ``max_k`` is abandoned.
    """
    n = h.n
    if max_k is None:
        max_k = h.N_h
    # earliest position j whose edge set reaches position p
    lo = [0] * (n + 1)
    for p in range(1, n + 1):
        lo[p] = next(j for j in range(1, p + 1) if h.values[j - 1] >= p)
    word = [0] * n
    used = [False] * (n + 1)

    def rec(p, count):
        if p > n:
            yield Permutation._trusted(word), count
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            c = count
            for j in range(lo[p], p):
                if word[j - 1] > v:
                    c += 1
            if c > max_k:
                continue
            used[v] = True
            word[p - 1] = v
            yield from rec(p + 1, c)
            used[v] = False

    yield from rec(1, 0)


def poincare_coefficients(h):
    """Entry k counts permutations with ell_h(w) = k; entries sum to n!."""
    counts = [0] * (h.N_h + 1)
    for _, k in iter_perms_by_ell(h):
        counts[k] += 1
    return counts


def swapped_positions(v, w):
    """Return (j, i), j < i, if w = v * s_{j,i}; otherwise None."""
    if len(v) != len(w):
        raise SizeMismatch(f"cannot compare S_{len(v)} with S_{len(w)}")
    diff = [p for p in range(1, len(v) + 1) if v[p - 1] != w[p - 1]]
    if len(diff) != 2:
        return None
    j, i = diff
    if v[j - 1] == w[i - 1] and v[i - 1] == w[j - 1]:
        return j, i
    return None
