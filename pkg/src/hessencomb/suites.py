"""
Exhaustive verification suites over the universe of Hessenberg functions.

Each suite maps one Hessenberg function to a list of IdentityCheck records;
``run_suite`` runs it over every h with 2 <= n <= n_max, optionally across
worker processes, and assembles the records in universe order.
"""

from __future__ import annotations

import math
import random
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor

from . import gkm
from .cache import cached_csf
from .core import (
    all_permutations, bruhat_leq, descent_set, in_generator_set,
    iota, iter_perms_by_ell, make_hessenberg, nilpotent_cell, opposite_cell_dim,
)
from .csf import check_brosnan_chow, check_chow_h2, check_sink_identity
from .errors import BudgetExceeded, UnknownSuite
from .generators import (
    A_i, P_i, P_i_closed_form, P_i_size, alpha_i, canonical_w, d_i, dim_H2,
    generators_k, level_one, source_blocks,
)
from .orientations import (
    descending_edge_count, enumerate_orientations, graph_type, orient_from_perm,
    perm_from_orientation,
)
from .reporting import IdentityCheck, VerifyReport
from .symfun import multinomial_dim

__all__ = [
    "enumerate_hessenberg", "run_suite", "SUITES", "DEFAULT_N_MAX",
    "bruhat_leq_oracle",
]


def enumerate_hessenberg(n):
    """All Hessenberg functions on [n] with h(i) >= i+1 for i < n, lexicographically."""
    if not 2 <= n <= 9:
        raise BudgetExceeded(f"the Hessenberg universe is generated for 2 <= n <= 9, not {n}")
    out = []

    def rec(prefix):
        i = len(prefix) + 1
        if i == n:
            out.append(make_hessenberg(prefix + [n]))
            return
        start = max(i + 1, prefix[-1] if prefix else 0)
        for v in range(start, n + 1):
            rec(prefix + [v])

    rec([])
    return out


def bruhat_leq_oracle(v, w):
    """v <= w iff w is reachable from v by length-increasing transposition moves."""
    n = len(v)
    seen, stack = {v}, [v]
    while stack:
        x = stack.pop()
        if x == w:
            return True
        lx = x.length()
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                y = x.swap_positions(a, b)
                if y not in seen and y.length() > lx:
                    seen.add(y)
                    stack.append(y)
    return False


def _check(identity, h, params, lhs, rhs):
    return IdentityCheck(identity, str(h), params, lhs, rhs)


def _levels(h):
    by_k = defaultdict(list)
    for w, k in iter_perms_by_ell(h):
        by_k[k].append(w)
    return by_k


def suite_counts(h, **_):
    n = h.n
    out = [_check("poincare-total", h, {}, sum(
        len(ws) for ws in _levels(h).values()), math.factorial(n))]
    orients = enumerate_orientations(h)
    o_by_k = defaultdict(int)
    for o in orients:
        o_by_k[descending_edge_count(o)] += 1
    levels = _levels(h)
    for k in range(h.N_h + 1):
        gk = [w for w in levels[k] if in_generator_set(w, h)]
        out.append(_check("generators-vs-orientations", h, {"k": k}, len(gk), o_by_k[k]))
        classes = defaultdict(list)
        for w in levels[k]:
            classes[graph_type(w, h)].append(w)
        out.append(_check("classes-vs-orientations", h, {"k": k}, len(classes), o_by_k[k]))
        reps = sorted(sum(1 for w in c if in_generator_set(w, h)) for c in classes.values())
        out.append(_check("one-generator-per-class", h, {"k": k}, reps, [1] * len(classes)))
    out.append(_check("orientations-degree-one", h, {}, o_by_k[1], n - 1))
    out.append(_check("G1-equals-w-list", h, {},
                      [str(w) for w in generators_k(h, 1)],
                      [str(w) for w in sorted(canonical_w(h))]))
    lvl1 = len(level_one(h))
    out.append(_check("dim-H2-sum-d", h, {}, dim_H2(h), lvl1))
    out.append(_check("dim-H2-sum-P", h, {}, sum(len(P_i(h, i)) for i in range(1, n)), lvl1))
    out.append(_check("alpha-multinomial", h, {},
                      sum(multinomial_dim(alpha_i(h, i)) for i in range(1, n)), dim_H2(h)))
    return out


def lemma_checks(h):
    """Descent/T disjointness and the A_j-meets-P_i singletons."""
    n, T = h.n, h.T
    out = []
    for i in range(1, n):
        des = set().union(*(descent_set(u) for u in A_i(h, i))) if A_i(h, i) else set()
        out.append(_check("A-descents-avoid-T", h, {"i": i},
                          sorted(des & {j for j in T if j >= i}), []))
    ts = sorted(T) + [n]
    for a, t in enumerate(ts[:-1]):
        i = t
        if h.in_T_or_n(i + 1):
            continue
        w = canonical_w(h)[i - 1]
        for j in range(i + 1, ts[a + 1]):
            u = w
            for k in range(n - 1, j, -1):
                u = u.left_simple(k)
            meet = sorted(set(A_i(h, j)) & set(P_i(h, i)))
            out.append(_check("A_j-cap-P_i", h, {"i": i, "j": j},
                              [str(x) for x in meet], [str(u)]))
    return out


def iota_checks(h):
    out = []
    set1, set2 = defaultdict(set), defaultdict(set)
    for w in all_permutations(h.n):
        if in_generator_set(w, h):
            set1[opposite_cell_dim(w, h)].add(w)
        k = nilpotent_cell(w, h)
        if k is not None:
            set2[k].add(w)
    for k in range(h.N_h + 1):
        out.append(_check("iota-bijection", h, {"k": k},
                          sorted(str(iota(w)) for w in set2[k]),
                          sorted(str(w) for w in set1[k])))
    return out


def source_block_checks(h):
    out = []
    n = h.n
    gens = [w for w in all_permutations(n) if in_generator_set(w, h)]
    mono = [str(w) for w in gens if not source_blocks(w, h).values_increase()]
    out.append(_check("source-values-increase", h, {}, mono, []))
    bad = []
    for w in gens:
        blocks = source_blocks(w, h).blocks
        if sorted(x for b in blocks for x in b) != list(range(1, n + 1)):
            bad.append(str(w))
    out.append(_check("source-blocks-partition", h, {}, bad, []))
    for i, w in enumerate(canonical_w(h), 1):
        comp = source_blocks(w, h).composition()
        out.append(_check("source-blocks-alpha", h, {"i": i},
                          list(comp.sorted()), list(alpha_i(h, i).sorted())))
    return out


def oracle_checks(h):
    out = []
    for i in range(1, h.n):
        out.append(_check("P_i-closed-form", h, {"i": i},
                          [str(u) for u in P_i(h, i)],
                          [str(u) for u in P_i_closed_form(h, i)]))
        out.append(_check("P_i-size", h, {"i": i}, len(P_i(h, i)), P_i_size(h, i)))
        out.append(_check("d_i-equals-alpha-dim", h, {"i": i},
                          d_i(h, i), multinomial_dim(alpha_i(h, i))))
    gens = [w for w in all_permutations(h.n) if in_generator_set(w, h)]
    out.append(_check("perm-orientation-roundtrip", h, {},
                      [str(perm_from_orientation(orient_from_perm(w, h))) for w in gens],
                      [str(w) for w in gens]))
    orients = enumerate_orientations(h)
    out.append(_check("orientation-perm-roundtrip", h, {},
                      [o.to_json() for o in orients],
                      [orient_from_perm(perm_from_orientation(o), h).to_json()
                       for o in orients]))
    if h.n <= 4:
        perms = all_permutations(h.n)
        bad = [f"{v}<={w}" for v in perms for w in perms
               if bruhat_leq(v, w) != bruhat_leq_oracle(v, w)]
        out.append(_check("bruhat-oracle", h, {}, bad, []))
    return out


def suite_lemmas(h, **_):
    return lemma_checks(h) + iota_checks(h) + source_block_checks(h) + oracle_checks(h)


def suite_chow(h, use_cache=False, **_):
    return [check_chow_h2(h, cached_csf(h, use_cache))]


def suite_sinks(h, use_cache=False, **_):
    return check_sink_identity(h, cached_csf(h, use_cache))


def suite_brosnan_chow(h, use_cache=False, **_):
    return check_brosnan_chow(h, cached_csf(h, use_cache))


def suite_gkm(h, random_classes=100, **_):
    n = h.n
    g = gkm.build_gkm(h)
    out = []
    anti = [f"{v}->{w}" for v, w in g.edges() if not (g.label(v, w) + g.label(w, v)).is_zero()]
    out.append(_check("label-antisymmetry", h, {}, anti, []))
    named = [("constant", gkm.constant_class(1, n))]
    named += [(f"global-t{k}", gkm.variable_class(k, n)) for k in range(1, n + 1)]
    named += [(f"position-t{k}", gkm.position_class(k, n)) for k in range(1, n + 1)]
    for name, c in named:
        out.append(_check("class-membership", h, {"class": name},
                          gkm.is_equivariant_class(g, c), True))
    rng = random.Random(f"gkm:{h}")
    perms = g.vertices
    law, preserved = [], []
    for r in range(random_classes):
        c = gkm.random_class(n, rng)
        u1, u2 = rng.choice(perms), rng.choice(perms)
        if gkm.dot_action(u1 * u2, c) != gkm.dot_action(u1, gkm.dot_action(u2, c)):
            law.append(r)
        if not (gkm.is_equivariant_class(g, c)
                and gkm.is_equivariant_class(g, gkm.dot_action(u1, c))):
            preserved.append(r)
    out.append(_check("dot-group-law", h, {"classes": random_classes}, law, []))
    out.append(_check("dot-preserves-classes", h, {"classes": random_classes}, preserved, []))
    if n <= 5:
        from .orientations import dashed_chain

        bad = []
        for w in all_permutations(n):
            if not in_generator_set(w, h):
                continue
            gt = graph_type(w, h)
            for u in all_permutations(n):
                if graph_type(u, h) != gt:
                    continue
                v = w
                for i in dashed_chain(w, u, h):
                    x = v.left_simple(i)
                    if gkm.edge_relation(v, x, h) is not gkm.EdgeRelation.DASHED:
                        bad.append(f"{w}~>{u}")
                        break
                    v = x
                if v != u:
                    bad.append(f"{w}~>{u}")
        out.append(_check("dashed-chain-steps", h, {}, bad, []))
    return out


SUITES = {
    "counts": suite_counts,
    "chow": suite_chow,
    "sinks": suite_sinks,
    "brosnan-chow": suite_brosnan_chow,
    "lemmas": suite_lemmas,
    "gkm": suite_gkm,
}

DEFAULT_N_MAX = {
    "counts": 6, "lemmas": 6, "chow": 7, "sinks": 6, "brosnan-chow": 6, "gkm": 4,
}


def _run_item(item):
    name, values, options = item
    return SUITES[name](make_hessenberg(values), **options)


def run_suite(name, n_max=None, jobs=1, **options):
    """Run one suite (or ``"all"``) and return a VerifyReport."""
    if name != "all" and name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    names = list(SUITES) if name == "all" else [name]
    items = []
    for s in names:
        top = n_max if n_max is not None else DEFAULT_N_MAX[s]
        for n in range(2, top + 1):
            items.extend((s, h.values, options) for h in enumerate_hessenberg(n))
    start = time.perf_counter()
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_item, items, chunksize=1))
    else:
        results = [_run_item(item) for item in items]
    report = VerifyReport(name, [e for chunk in results for e in chunk])
    report.wall_time = time.perf_counter() - start
    return report
