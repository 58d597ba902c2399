"""
Chromatic quasisymmetric functions of incomparability graphs G_h, and
machine checks of the identities relating them to G_h^k, acyclic
orientations and the degree-one permutation-module decomposition.

X_G(x, t) = sum over proper colorings k of x^k t^asc(k), where asc(k) counts
edges {a, b}, a < b, with k(a) < k(b).  This definition is Shareshian and
Wachs'; nothing else in the package is imported from outside.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import poincare_coefficients
from .errors import BudgetExceeded
from .generators import MAX_ENUMERATION_N, alpha_i, generators_k
from .orientations import asc, enumerate_orientations, sinks
from .reporting import IdentityCheck
from .symfun import SymFunc, TPoly, m_to_e, multinomial_dim, partitions

__all__ = [
    "CsfExpansion", "coloring_polynomial", "csf", "check_sink_identity",
    "check_chow_h2", "check_brosnan_chow",
]


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return out


def coloring_polynomial(h, content):
    """sum t^asc(k) over proper colorings k of G_h using color c exactly content[c-1] times.

    Colors vertices 1..n in order.  Because G_h is a unit-interval graph, the
    earlier neighbours of vertex p form the window [lo(p), p-1], so a state is
    (vertex, remaining color counts, colors in the window).
    """
    n = h.n
    content = tuple(content)
    if sum(content) != n:
        return TPoly()
    lo = [0] * (n + 2)
    for p in range(1, n + 1):
        lo[p] = next(j for j in range(1, p + 1) if h.values[j - 1] >= p)
    lo[n + 1] = n + 1

    @lru_cache(maxsize=None)
    def rec(p, counts, window):
        if p > n:
            return (1,)
        total = []
        for c, left in enumerate(counts):
            if not left or c in window:
                continue
            ups = sum(1 for x in window if x < c)
            nxt = counts[:c] + (left - 1,) + counts[c + 1:]
            full = window + (c,)
            keep = (p + 1) - lo[p + 1]
            sub = rec(p + 1, nxt, full[len(full) - keep:] if keep else ())
            total = _add(total, [0] * ups + list(sub))
        return tuple(total)

    return TPoly(rec(1, content, ()))


@dataclass(frozen=True, eq=False)
class CsfExpansion:
    h: object
    m_coeffs: SymFunc
    e_coeffs: SymFunc

    def c(self, lam):
        """c_lambda^h(t), the e_lambda coefficient."""
        return self.e_coeffs[lam]


def csf_m_basis(h):
    if h.n > MAX_ENUMERATION_N:
        raise BudgetExceeded(f"coloring enumeration is limited to n <= {MAX_ENUMERATION_N}")
    return SymFunc("m", h.n, {lam: coloring_polynomial(h, lam) for lam in partitions(h.n)})


def csf(h, m_coeffs=None):
    """X_{G_h} in the m and e bases; ``m_coeffs`` may be supplied from a cache."""
    if m_coeffs is None:
        m_coeffs = csf_m_basis(h)
    return CsfExpansion(h, m_coeffs, m_to_e(m_coeffs))


def check_sink_identity(h, expansion=None):
    """For each j: sum of c_lambda over length-j lambda vs sum of t^asc(o) over
    acyclic orientations with j sinks."""
    x = expansion or csf(h)
    by_len = {}
    for lam, c in x.e_coeffs.coeffs.items():
        by_len[len(lam)] = by_len.get(len(lam), TPoly()) + c
    by_sinks = {}
    for o in enumerate_orientations(h):
        j = len(sinks(o))
        by_sinks[j] = by_sinks.get(j, TPoly()) + TPoly.monomial(asc(o))
    return [
        IdentityCheck("sink-identity", str(h), {"j": j},
                      by_len.get(j, TPoly()), by_sinks.get(j, TPoly()))
        for j in range(1, h.n + 1)
    ]


def chow_rhs(h):
    out = SymFunc("e", h.n, {})
    for i in range(1, h.n):
        out = out + SymFunc.single("e", alpha_i(h, i).sorted())
    return out


def check_chow_h2(h, expansion=None):
    """[t^1] of the e-expansion against sum_i e_{sort(alpha^i)}."""
    x = expansion or csf(h)
    return IdentityCheck("chow-h2", str(h), {}, x.e_coeffs.t_coefficient(1), chow_rhs(h))


def check_brosnan_chow(h, expansion=None):
    """(a) total dimensions: sum c_lambda * dim M^lambda = sum_w t^ell_h(w);
    (b) invariant dimensions: sum c_lambda = sum_k |G_h^k| t^k."""
    x = expansion or csf(h)
    total_lhs, inv_lhs = TPoly(), TPoly()
    for lam, c in x.e_coeffs.coeffs.items():
        total_lhs = total_lhs + c * multinomial_dim(lam)
        inv_lhs = inv_lhs + c
    total_rhs = TPoly(poincare_coefficients(h))
    inv_rhs = TPoly([len(generators_k(h, k)) for k in range(h.N_h + 1)])
    return [
        IdentityCheck("brosnan-chow-total", str(h), {}, total_lhs, total_rhs),
        IdentityCheck("brosnan-chow-invariant", str(h), {}, inv_lhs, inv_rhs),
    ]
