"""
GKM graph of Hess(S, h), equivariant-class membership and the dot action.

Polynomials live in Z[t_1, ..., t_n] and are stored sparsely as
{exponent tuple: coefficient}.
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass, field

from .core import Permutation, all_permutations, swapped_positions
from .errors import BudgetExceeded, MissingVertex, SizeMismatch

__all__ = [
    "MultiPoly", "GkmGraph", "EquivariantClass", "EdgeRelation", "build_gkm",
    "is_equivariant_class", "dot_action", "edge_relation", "constant_class",
    "variable_class", "position_class", "random_class", "MAX_GKM_N",
]

MAX_GKM_N = 6


class MultiPoly:
    """Sparse polynomial with integer coefficients in n variables t_1..t_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise SizeMismatch(f"exponent vector {exps} has length != {n}")
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def const(cls, c, n):
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, k, n):
        """The variable t_k (1-based)."""
        exps = [0] * n
        exps[k - 1] = 1
        return cls(n, {tuple(exps): 1})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other, self.n)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other, self.n)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly(self.n, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.n, out)

    __rmul__ = __mul__

    def substitute(self, a, b):
        """Set t_a := t_b."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[b - 1] += e[a - 1]
            e[a - 1] = 0
            e = tuple(e)
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.n, out)

    def relabel(self, u):
        """p(t_{u(1)}, ..., t_{u(n)}): every t_i becomes t_{u(i)}."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.n
            for i, x in enumerate(e):
                new[u[i] - 1] += x
            out[tuple(new)] = c
        return MultiPoly(self.n, out)

    def to_json(self):
        return [{"exps": list(e), "coeff": c} for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data, n):
        return cls(n, {tuple(t["exps"]): int(t["coeff"]) for t in data})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"t{k}" if x == 1 else f"t{k}^{x}"
                            for k, x in enumerate(e, 1) if x)
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class EdgeRelation(enum.Enum):
    EDGE = "Edge"
    DASHED = "Dashed"
    NOT_TRANSPOSITION = "NotTransposition"


def edge_relation(v, w, h):
    """Edge if w = v s_{j,i} with i <= h(j); Dashed if i > h(j)."""
    if len(v) != h.n:
        raise SizeMismatch(f"permutation of size {len(v)} with h of size {h.n}")
    pos = swapped_positions(v, w)
    if pos is None:
        return EdgeRelation.NOT_TRANSPOSITION
    j, i = pos
    return EdgeRelation.EDGE if i <= h(j) else EdgeRelation.DASHED


@dataclass
class GkmGraph:
    h: object
    vertices: list
    adjacency: dict  # v -> list of (w, j, i) with w = v * s_{j,i}

    def label(self, v, w):
        """t_{v(i)} - t_{v(j)} for the edge v -> v s_{j,i}."""
        j, i = swapped_positions(v, w)
        n = self.h.n
        return MultiPoly.var(v(i), n) - MultiPoly.var(v(j), n)

    def edges(self):
        for v in self.vertices:
            for w, _, _ in self.adjacency[v]:
                yield v, w

    def degree(self, v):
        return len(self.adjacency[v])


def build_gkm(h):
    if h.n > MAX_GKM_N:
        raise BudgetExceeded(f"GKM graphs are limited to n <= {MAX_GKM_N}")
    vertices = all_permutations(h.n)
    adjacency = {v: [(v.swap_positions(j, i), j, i) for j, i in h.graph.edges]
                 for v in vertices}
    return GkmGraph(h, vertices, adjacency)


@dataclass
class EquivariantClass:
    n: int
    values: dict = field(default_factory=dict)  # Permutation -> MultiPoly

    def __getitem__(self, v):
        try:
            return self.values[v]
        except KeyError:
            raise MissingVertex(f"class has no value at {v}") from None

    def __eq__(self, other):
        return isinstance(other, EquivariantClass) and self.values == other.values

    def __add__(self, other):
        return EquivariantClass(self.n, {v: p + other[v] for v, p in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return EquivariantClass(self.n, {v: p * other for v, p in self.values.items()})
        return EquivariantClass(self.n, {v: p * other[v] for v, p in self.values.items()})

    def to_json(self):
        return {
            "format": 1,
            "n": self.n,
            "values": [{"perm": str(v), "poly": self.values[v].to_json()}
                       for v in sorted(self.values)],
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data):
        n = data["n"]
        return cls(n, {Permutation.parse(item["perm"]): MultiPoly.from_json(item["poly"], n)
                       for item in data["values"]})


def is_equivariant_class(g, c):
    """Check alpha(v -> w) | p(v) - p(w) on every edge by substituting t_a := t_b."""
    for v in g.vertices:
        pv = c[v]
        for w, j, i in g.adjacency[v]:
            diff = pv - c[w]
            if diff.is_zero():
                continue
            if not diff.substitute(v(i), v(j)).is_zero():
                return False
    return True


def dot_action(u, c):
    """(u . c)(v) = c(u^{-1} v) with t_i relabelled to t_{u(i)}."""
    if len(u) != c.n:
        raise SizeMismatch(f"cannot act by S_{len(u)} on a class for S_{c.n}")
    u_inv = u.inverse()
    return EquivariantClass(c.n, {v: c[u_inv * v].relabel(u) for v in c.values})


def constant_class(c, n):
    return EquivariantClass(n, {v: MultiPoly.const(c, n) for v in all_permutations(n)})


def variable_class(k, n):
    """The global class p(v) = t_k."""
    return EquivariantClass(n, {v: MultiPoly.var(k, n) for v in all_permutations(n)})


def position_class(k, n):
    """p(v) = t_{v(k)}; a class for every h since edges only swap positions."""
    return EquivariantClass(n, {v: MultiPoly.var(v(k), n) for v in all_permutations(n)})


def random_class(n, rng=None, terms=3, max_degree=2):
    """Random integer combination of products of constant, global and position classes."""
    rng = rng or random.Random()
    pool = [variable_class(k, n) for k in range(1, n + 1)]
    pool += [position_class(k, n) for k in range(1, n + 1)]
    out = constant_class(rng.randint(-3, 3), n)
    for _ in range(terms):
        term = constant_class(rng.choice([-2, -1, 1, 2]), n)
        for _ in range(rng.randint(1, max_degree)):
            term = term * rng.choice(pool)
        out = out + term
    return out
