"""
Module generators of the cohomology of Hess(S, h) and the degree-one data.

Every set-valued function returns a lexicographically sorted list of
permutations.  Degree-one computations never touch all of S_n: since
h(i) >= i+1 forces ell_h(u) >= des(u), every u with ell_h(u) = 1 is a
Grassmannian permutation, and there are only 2^n - n - 1 of those.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .core import (
    Permutation, descent_set, ell_h, in_generator_set, iter_perms_by_ell,
)
from .errors import BudgetExceeded, IndexOutOfRange, NotAGenerator, UnsupportedShape
from .orientations import is_dashed_left_move, orient_from_perm, sources
from .symfun import Composition

__all__ = [
    "MAX_ENUMERATION_N", "grassmannians", "level_one", "generators_k",
    "canonical_w", "A_i", "P_i", "P_i_closed_form", "P_i_size", "d_i", "dim_H2",
    "alpha_i", "Sandwich", "stabilizer_composition", "SourceBlocks",
    "source_blocks", "J_indicator_degree1", "GeneratorReport", "build_report",
]

MAX_ENUMERATION_N = 9


def _check_index(h, i):
    if not 1 <= i <= h.n - 1:
        raise IndexOutOfRange(f"index {i} is outside [1, {h.n - 1}]")


def grassmannians(n, i):
    """Permutations whose only descent is i, lexicographically."""
    out = []
    for first in itertools.combinations(range(1, n + 1), i):
        if first == tuple(range(1, i + 1)):
            continue
        rest = sorted(set(range(1, n + 1)) - set(first))
        out.append(Permutation._trusted(first + tuple(rest)))
    return out


@lru_cache(maxsize=None)
def _level_one(h):
    found = [u for i in range(1, h.n) for u in grassmannians(h.n, i) if ell_h(u, h) == 1]
    return tuple(sorted(found))


def level_one(h):
    """{u : ell_h(u) = 1}."""
    return list(_level_one(h))


def generators_k(h, k):
    """G_h^k: permutations with ell_h = k satisfying the generator condition."""
    if k < 0 or k > h.N_h:
        return []
    if k == 0:
        return [Permutation.identity(h.n)]
    if k == 1:
        return [u for u in _level_one(h) if in_generator_set(u, h)]
    if h.n > MAX_ENUMERATION_N:
        raise BudgetExceeded(f"enumerating S_{h.n} exceeds the n <= {MAX_ENUMERATION_N} budget")
    return [w for w, ell in iter_perms_by_ell(h, k) if ell == k and in_generator_set(w, h)]


def canonical_w(h):
    """The permutations w^[1], ..., w^[n-1]."""
    n, T = h.n, h.T
    out = []
    for i in range(1, n):
        nxt = h.in_T_or_n(i + 1)
        if i in T and nxt:
            word = Permutation.simple(i, n)
        elif i in T:
            word = list(range(1, i)) + [n] + list(range(i, n))
        elif nxt:
            word = list(range(2, i + 2)) + [1] + list(range(i + 2, n + 1))
        else:
            word = list(range(n - i + 1, n + 1)) + list(range(1, n - i + 1))
        out.append(Permutation._trusted(word))
    return out


def A_i(h, i):
    """The correction set for the dot action of s_i on the class of s_i."""
    _check_index(h, i)
    out = []
    for u in _level_one(h):
        p_next, p_i = u.index(i + 1) + 1, u.index(i) + 1
        if p_next <= i < p_i and h(p_next) < p_i:
            out.append(u)
    return out


def P_i(h, i):
    """{u : ell_h(u) = 1, Des(u) = {i}}: the graph-type class of w^[i]."""
    _check_index(h, i)
    return [u for u in _level_one(h) if descent_set(u) == {i}]


def P_i_closed_form(h, i):
    """P_i built from w^[i] by the explicit products of simple reflections."""
    _check_index(h, i)
    n = h.n
    w = canonical_w(h)[i - 1]
    nxt = h.in_T_or_n(i + 1)
    if i in h.T and nxt:
        out = [w]
    elif i in h.T:
        # s_{j+1} s_{j+2} ... s_{n-1} w, i <= j < n
        out = []
        for j in range(i, n):
            u = w
            for k in range(n - 1, j, -1):
                u = u.left_simple(k)
            out.append(u)
    elif nxt:
        # s_j s_{j-1} ... s_1 w, 0 <= j < i
        out = []
        u = w
        for j in range(0, i):
            if j:
                u = u.left_simple(j)
            out.append(u)
    else:
        out = grassmannians(n, i)
    return sorted(out)


def P_i_size(h, i):
    """Closed-form cardinality of P_i."""
    _check_index(h, i)
    n = h.n
    nxt = h.in_T_or_n(i + 1)
    if i in h.T:
        return 1 if nxt else n - i
    return i if nxt else math.comb(n, i) - 1


def d_i(h, i):
    _check_index(h, i)
    if i in h.T:
        return 1
    return h.n if h.in_T_or_n(i + 1) else math.comb(h.n, i)


def dim_H2(h):
    return sum(d_i(h, i) for i in range(1, h.n))


def alpha_i(h, i):
    _check_index(h, i)
    n = h.n
    if i in h.T:
        return Composition((n,))
    if h.in_T_or_n(i + 1):
        return Composition((1, n - 1))
    return Composition((i, n - i))


@dataclass(frozen=True)
class Sandwich:
    """A stabilizer known only to satisfy S_lower <= Stab < S_n."""

    lower: Composition


def stabilizer_composition(h, i):
    """Young-subgroup type of the stabilizer of the class of w^[i]."""
    _check_index(h, i)
    n = h.n
    if i in h.T:
        if not h.in_T_or_n(i + 1):
            return Composition((n - 1, 1))
        if len(h.T) == n - 1:
            return Composition((n,))
        if 2 * i == n:
            return Sandwich(Composition((i, i)))
        return Composition((i, n - i))
    if h.in_T_or_n(i + 1):
        return Composition((1, n - 1))
    return Composition((n - i, i))


@dataclass(frozen=True)
class SourceBlocks:
    w: Permutation
    sources: tuple          # decreasing vertices s_1 > s_2 > ...
    blocks: tuple           # K_1, ..., K_{l+1} as tuples of values

    def composition(self):
        return Composition(len(b) for b in self.blocks)

    def values_increase(self):
        vals = [self.w(s) for s in self.sources]
        return all(a < b for a, b in zip(vals, vals[1:]))


def source_blocks(w, h):
    """Cut [n] into value intervals at the values of w on the sources of o_h(w)."""
    if not in_generator_set(w, h):
        raise NotAGenerator(f"{w} is not in G_h for h={h}")
    srcs = tuple(sorted(sources(orient_from_perm(w, h)), reverse=True))
    vals = [w(s) for s in srcs]
    blocks = []
    for x, start in enumerate(vals):
        stop = vals[x + 1] if x + 1 < len(vals) else h.n + 1
        blocks.append(tuple(range(start, stop)))
    return SourceBlocks(w, srcs, tuple(blocks))


def J_indicator_degree1(h, i):
    """The index set J for w = s_i, defined only when w^[i] = s_i."""
    _check_index(h, i)
    if not (i in h.T and h.in_T_or_n(i + 1)):
        raise UnsupportedShape(
            f"w^[{i}] is not s_{i} for h={h}; general J needs cell-intersection data")
    s = Permutation.simple(i, h.n)
    out = {k for k in range(1, h.n) if k != i and is_dashed_left_move(s, k, h)}
    if A_i(h, i):
        out.add(i)
    return frozenset(out)


@dataclass
class GeneratorReport:
    h: object
    G_by_k: list
    w_list: list
    A_sets: list
    P_sets: list
    d: list
    alpha: list
    stabilizers: list = field(default_factory=list)

    def to_json(self):
        def perms(ws):
            return [str(w) for w in ws]

        def stab(s):
            if isinstance(s, Sandwich):
                return {"sandwich_lower": list(s.lower)}
            return {"composition": list(s)}

        h = self.h
        return {
            "format": 1,
            "h": list(h.values),
            "T": sorted(h.T),
            "N_h": h.N_h,
            "G_by_k": [perms(g) for g in self.G_by_k],
            "w_list": perms(self.w_list),
            "A": [perms(a) for a in self.A_sets],
            "P": [perms(p) for p in self.P_sets],
            "d": list(self.d),
            "alpha": [list(a) for a in self.alpha],
            "stabilizers": [stab(s) for s in self.stabilizers],
        }


def build_report(h):
    idx = range(1, h.n)
    return GeneratorReport(
        h=h,
        G_by_k=[generators_k(h, k) for k in range(h.N_h + 1)],
        w_list=canonical_w(h),
        A_sets=[A_i(h, i) for i in idx],
        P_sets=[P_i(h, i) for i in idx],
        d=[d_i(h, i) for i in idx],
        alpha=[alpha_i(h, i) for i in idx],
        stabilizers=[stabilizer_composition(h, i) for i in idx],
    )
