"""Hypothesis strategies and brute-force oracles shared by the test modules.

The oracles here are deliberately naive: they restate definitions directly
over all of S_n or all 2^|E| edge directions and share no code paths with
the library beyond the Permutation / HessenbergFunction value types.
"""

import itertools

from hypothesis import strategies as st

from hessencomb import Permutation, make_hessenberg


@st.composite
def hessenberg_functions(draw, min_n=2, max_n=6):
    n = draw(st.integers(min_n, max_n))
    values = []
    for i in range(1, n):
        lo = max(i + 1, values[-1] if values else 0)
        values.append(draw(st.integers(lo, n)))
    values.append(n)
    return make_hessenberg(values)


@st.composite
def hessenberg_and_perm(draw, min_n=2, max_n=6):
    h = draw(hessenberg_functions(min_n, max_n))
    w = draw(st.permutations(range(1, h.n + 1)))
    return h, Permutation(w)


def perms(n):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def edges_of(h):
    return [(j, i) for j in range(1, h.n + 1) for i in range(j + 1, h.values[j - 1] + 1)]


def brute_ell(w, h):
    return sum(1 for j, i in edges_of(h) if w[j - 1] > w[i - 1])


def brute_generator_condition(w, h):
    pos = {v: p for p, v in enumerate(w, 1)}
    return all(pos[w[j - 1] + 1] <= h.values[j - 1]
               for j in range(1, h.n + 1) if w[j - 1] < h.n)


def brute_acyclic_orientations(h):
    """All 2^|E| direction choices, filtered by 'every vertex can be peeled'."""
    es = edges_of(h)
    out = []
    for bits in itertools.product((False, True), repeat=len(es)):
        arcs = [(i, j) if rev else (j, i) for (j, i), rev in zip(es, bits)]
        alive = set(range(1, h.n + 1))
        while alive:
            free = [v for v in alive if not any(b == v and a in alive for a, b in arcs)]
            if not free:
                break
            alive -= set(free)
        if not alive:
            out.append(frozenset(e for e, rev in zip(es, bits) if rev))
    return out


def brute_csf_m(h, lam):
    """sum t^asc over every proper coloring with content lam, as a coefficient list."""
    coeffs = [0] * (len(edges_of(h)) + 1)
    colors = range(1, len(lam) + 1)
    for kappa in itertools.product(colors, repeat=h.n):
        if any(kappa.count(c) != lam[c - 1] for c in colors):
            continue
        if any(kappa[j - 1] == kappa[i - 1] for j, i in edges_of(h)):
            continue
        coeffs[sum(1 for j, i in edges_of(h) if kappa[j - 1] < kappa[i - 1])] += 1
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs
