"""
Acyclic orientations of incomparability graphs and graph types of permutations.

An orientation is stored as the set of *reversed* edges: the edge {j, i},
j < i, points j -> i unless it is listed as reversed (i -> j).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .core import HessenbergFunction, IncomparabilityGraph, Permutation, _check_size
from .errors import NotAcyclic, SizeMismatch

__all__ = [
    "AcyclicOrientation", "GraphType", "graph_type", "orient_from_perm",
    "enumerate_orientations", "descending_edge_count", "asc", "sinks", "sources",
    "perm_from_orientation", "same_graph_type", "graph_type_classes",
    "dashed_chain", "is_dashed_left_move",
]


def _successors(n, edges, reversed_edges):
    succ = {v: [] for v in range(1, n + 1)}
    for j, i in edges:
        if (j, i) in reversed_edges:
            succ[i].append(j)
        else:
            succ[j].append(i)
    return succ


def _has_cycle(n, succ):
    indeg = {v: 0 for v in range(1, n + 1)}
    for v in succ:
        for x in succ[v]:
            indeg[x] += 1
    queue = deque(v for v in indeg if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for x in succ[v]:
            indeg[x] -= 1
            if indeg[x] == 0:
                queue.append(x)
    return seen != n


@dataclass(frozen=True)
class AcyclicOrientation:
    base: IncomparabilityGraph
    reversed_edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        rev = frozenset(tuple(e) for e in self.reversed_edges)
        object.__setattr__(self, "reversed_edges", rev)
        if not rev <= set(self.base.edges):
            raise ValueError(f"{sorted(rev - set(self.base.edges))} are not edges")
        if _has_cycle(self.base.n, self.successors()):
            raise NotAcyclic(f"orientation reversing {sorted(rev)} has a cycle")

    @property
    def n(self):
        return self.base.n

    def direction(self, edge):
        return "rev" if tuple(edge) in self.reversed_edges else "fwd"

    def directed_edges(self):
        """Edges as (tail, head) pairs, in the base graph's edge order."""
        return [(i, j) if (j, i) in self.reversed_edges else (j, i)
                for j, i in self.base.edges]

    def successors(self):
        return _successors(self.base.n, self.base.edges, self.reversed_edges)

    def to_json(self):
        return {"edges": [[j, i, self.direction((j, i))] for j, i in self.base.edges]}

    @classmethod
    def from_json(cls, data, h):
        base = h.graph if isinstance(h, HessenbergFunction) else h
        rev = set()
        listed = set()
        for j, i, d in data["edges"]:
            listed.add((j, i))
            if d == "rev":
                rev.add((j, i))
            elif d != "fwd":
                raise ValueError(f"edge direction must be 'fwd' or 'rev', got {d!r}")
        if listed != set(base.edges):
            raise ValueError("orientation does not list exactly the graph's edges")
        return cls(base, frozenset(rev))

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class GraphType:
    """The directed graph G_{w,h}: the forward edges j -> i with w(j) < w(i)."""

    n: int
    forward_edges: frozenset


def graph_type(w, h):
    _check_size(w, h)
    return GraphType(h.n, frozenset((j, i) for j, i in h.graph.edges
                                    if w[j - 1] < w[i - 1]))


def orient_from_perm(w, h):
    """o_h(w): edge {j, i} points j -> i iff w(j) < w(i)."""
    _check_size(w, h)
    rev = frozenset((j, i) for j, i in h.graph.edges if w[j - 1] > w[i - 1])
    return AcyclicOrientation(h.graph, rev)


def enumerate_orientations(h):
    """All acyclic orientations of G_h.

    Backtracks over the edges in lexicographic order, trying forward before
    reversed, and rejects a choice as soon as it closes a directed cycle.
    """
    graph = h.graph if isinstance(h, HessenbergFunction) else h
    n, edges = graph.n, graph.edges
    succ = {v: set() for v in range(1, n + 1)}
    chosen = []
    out = []

    def reaches(a, b):
        stack, seen = [a], {a}
        while stack:
            v = stack.pop()
            if v == b:
                return True
            for x in succ[v]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        return False

    def rec(k):
        if k == len(edges):
            out.append(AcyclicOrientation(graph, frozenset(chosen)))
            return
        j, i = edges[k]
        for tail, head, rev in ((j, i, False), (i, j, True)):
            if reaches(head, tail):
                continue
            succ[tail].add(head)
            if rev:
                chosen.append((j, i))
            rec(k + 1)
            if rev:
                chosen.pop()
            succ[tail].discard(head)

    rec(0)
    return out


def descending_edge_count(o):
    """Number of edges directed from the larger vertex to the smaller one."""
    return len(o.reversed_edges)


def asc(o):
    return len(o.base.edges) - len(o.reversed_edges)


def sinks(o):
    succ = o.successors()
    return frozenset(v for v in succ if not succ[v])


def sources(o):
    heads = {b for a, b in o.directed_edges()}
    return frozenset(v for v in range(1, o.n + 1) if v not in heads)


def perm_from_orientation(o, h=None):
    """Invert o_h on the generator set by peeling off maximal sources.

    The vertex removed at step l receives the value l.
    """
    n = o.n
    succ = o.successors()
    indeg = {v: 0 for v in range(1, n + 1)}
    for v in succ:
        for x in succ[v]:
            indeg[x] += 1
    alive = set(range(1, n + 1))
    word = [0] * n
    for step in range(1, n + 1):
        s = max(v for v in alive if indeg[v] == 0)
        word[s - 1] = step
        alive.discard(s)
        for x in succ[s]:
            indeg[x] -= 1
    return Permutation._trusted(word)


def same_graph_type(v, w, h):
    if len(v) != len(w):
        raise SizeMismatch(f"cannot compare S_{len(v)} with S_{len(w)}")
    return graph_type(v, h) == graph_type(w, h)


def graph_type_classes(h, k):
    """Partition {w : ell_h(w) = k} into graph-type classes.

    Classes are sorted internally and listed in order of their first member.
    """
    from .core import iter_perms_by_ell

    classes = {}
    for w, ell in iter_perms_by_ell(h, k):
        if ell == k:
            classes.setdefault(graph_type(w, h), []).append(w)
    return sorted(classes.values(), key=lambda c: c[0])


def is_dashed_left_move(v, i, h):
    """True when v and s_i * v differ by a non-edge transposition.

    The values i and i+1 sit at positions p < q; the move is dashed iff q > h(p).
    """
    p, q = sorted((v.index(i) + 1, v.index(i + 1) + 1))
    return q > h.values[p - 1]


def dashed_chain(w, u, h):
    """Shortest (then lexicographically least) list [i_1, ..., i_r] of dashed
    left moves carrying w to u, or None when the graph types differ."""
    _check_size(w, h)
    _check_size(u, h)
    if not same_graph_type(w, u, h):
        return None
    prev = {w: None}
    queue = deque([w])
    while queue:
        v = queue.popleft()
        if v == u:
            break
        for i in range(1, h.n):
            if is_dashed_left_move(v, i, h):
                x = v.left_simple(i)
                if x not in prev:
                    prev[x] = (v, i)
                    queue.append(x)
    if u not in prev:
        return None
    chain = []
    x = u
    while prev[x] is not None:
        x, i = prev[x]
        chain.append(i)
    return chain[::-1]
