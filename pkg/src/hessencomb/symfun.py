"""
Exact symmetric functions of degree n with coefficients in Z[t].

Only the monomial (m), elementary (e) and complete homogeneous (h) bases are
supported.  The e-to-m transition counts 0-1 matrices:

    e_mu = sum_lambda  #{0-1 matrices, row sums mu, column sums lambda} m_lambda

>>> e_to_m(SymFunc.single("e", (1, 1)))
SymFunc('m', 2, {(2,): 1, (1, 1): 2})
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import WrongBasis

__all__ = [
    "Partition", "Composition", "TPoly", "SymFunc", "partitions",
    "zero_one_matrix_count", "e_to_m_matrix", "e_to_m", "m_to_e",
    "omega_e_to_h", "multinomial_dim", "transition_determinant",
]


class Partition(tuple):
    __slots__ = ()

    def __new__(cls, parts):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not a partition")
        return tuple.__new__(cls, parts)

    @property
    def parts(self):
        return tuple(self)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def conjugate(self):
        if not self:
            return Partition(())
        return Partition(sum(1 for p in self if p > k) for k in range(self[0]))

    def __repr__(self):
        return f"Partition({tuple(self)})"


class Composition(tuple):
    __slots__ = ()

    def __new__(cls, parts):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"{parts} is not a composition")
        return tuple.__new__(cls, parts)

    @property
    def parts(self):
        return tuple(self)

    @property
    def size(self):
        return sum(self)

    def sorted(self):
        return Partition(sorted(self, reverse=True))

    def __repr__(self):
        return f"Composition({tuple(self)})"


@lru_cache(maxsize=None)
def partitions(n):
    """Partitions of n in decreasing lexicographic order: (n), (n-1, 1), ..."""
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, cap), 0, -1):
            rec(remaining - p, p, prefix + (p,))

    rec(n, n, ())
    return tuple(out)


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class TPoly:
    """Polynomial in t with exact (int or Fraction) coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [_normalize(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    def degree(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = TPoly([other])
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = TPoly([other])
        m = max(len(self.coeffs), len(other.coeffs))
        return TPoly([self[k] + other[k] for k in range(m)])

    __radd__ = __add__

    def __neg__(self):
        return TPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TPoly([c * other for c in self.coeffs])
        if not isinstance(other, TPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, x in enumerate(self.coeffs):
            if x:
                for b, y in enumerate(other.coeffs):
                    out[a + b] += x * y
        return TPoly(out)

    __rmul__ = __mul__

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    def to_json(self):
        return [c if isinstance(c, int) else f"{c.numerator}/{c.denominator}"
                for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(Fraction(c) if isinstance(c, str) else int(c) for c in data)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                coef = "" if c == 1 and k else "-" if c == -1 and k else str(c)
                terms.append(coef + ("" if k == 0 else "t" if k == 1 else f"t^{k}"))
        return " + ".join(terms).replace("+ -", "- ")


def _as_tpoly(c):
    return c if isinstance(c, TPoly) else TPoly([c])


@dataclass(frozen=True, eq=False)
class SymFunc:
    """Homogeneous symmetric function sum_lambda c_lambda(t) b_lambda, b in {m, e, h}."""

    basis: str
    n: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("m", "e", "h"):
            raise WrongBasis(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.coeffs.items():
            lam = Partition(lam)
            if lam.size != self.n:
                raise ValueError(f"{tuple(lam)} is not a partition of {self.n}")
            c = _as_tpoly(c)
            if c:
                clean[lam] = clean.get(lam, TPoly()) + c
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    @classmethod
    def single(cls, basis, lam, c=1):
        lam = Partition(lam)
        return cls(basis, lam.size, {lam: c})

    def __getitem__(self, lam):
        return self.coeffs.get(Partition(lam), TPoly())

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (self.basis, self.n, self.coeffs) == (other.basis, other.n, other.coeffs)

    def __add__(self, other):
        if (self.basis, self.n) != (other.basis, other.n):
            raise WrongBasis("can only add symmetric functions in the same basis and degree")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, TPoly()) + c
        return SymFunc(self.basis, self.n, out)

    def t_coefficient(self, k):
        """The degree-k part in t, as a symmetric function with constant coefficients."""
        return SymFunc(self.basis, self.n, {lam: c[k] for lam, c in self.coeffs.items()})

    def sorted_terms(self):
        order = {lam: pos for pos, lam in enumerate(partitions(self.n))}
        return sorted(self.coeffs.items(), key=lambda kv: order[kv[0]])

    def to_json(self):
        return {
            "basis": self.basis,
            "n": self.n,
            "terms": [{"partition": list(lam), "tpoly": c.to_json()}
                      for lam, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["basis"], data["n"],
                   {Partition(term["partition"]): TPoly.from_json(term["tpoly"])
                    for term in data["terms"]})

    def __repr__(self):
        body = ", ".join(
            f"{tuple(lam)}: {c.coeffs[0] if len(c.coeffs) == 1 else c}"
            for lam, c in self.sorted_terms())
        return f"SymFunc({self.basis!r}, {self.n}, {{{body}}})"


@lru_cache(maxsize=None)
def _zero_one_count(state, cols):
    # state: sorted tuple of (residual, multiplicity), residual >= 1
    if not cols:
        return 1 if not state else 0
    c, rest = cols[0], cols[1:]
    groups = list(state)
    total = 0

    def rec(g, need, chosen):
        nonlocal total
        if need == 0:
            ways = 1
            new = Counter()
            for (r, m), k in zip(groups, chosen + [0] * (len(groups) - len(chosen))):
                ways *= math.comb(m, k)
                if m - k:
                    new[r] += m - k
                if k and r - 1:
                    new[r - 1] += k
            total += ways * _zero_one_count(tuple(sorted(new.items())), rest)
            return
        if g == len(groups):
            return
        m = groups[g][1]
        for k in range(min(m, need), -1, -1):
            rec(g + 1, need - k, chosen + [k])

    rec(0, c, [])
    return total


def zero_one_matrix_count(row_sums, col_sums):
    """Number of 0-1 matrices with the given row and column sums.

    Columns are filled one at a time; the state is the multiset of residual
    row sums.
    """
    if sum(row_sums) != sum(col_sums):
        return 0
    state = tuple(sorted(Counter(r for r in row_sums if r > 0).items()))
    return _zero_one_count(state, tuple(col_sums))


@lru_cache(maxsize=None)
def e_to_m_matrix(n):
    """Row mu, column lambda: the m_lambda coefficient of e_mu (partitions(n) order)."""
    parts = partitions(n)
    return tuple(tuple(zero_one_matrix_count(mu, lam) for lam in parts) for mu in parts)


@lru_cache(maxsize=None)
def _m_to_e_matrix(n):
    # exact inverse of e_to_m_matrix(n) by Gauss-Jordan over the rationals
    a = [[Fraction(x) for x in row] for row in e_to_m_matrix(n)]
    size = len(a)
    inv = [[Fraction(int(r == c)) for c in range(size)] for r in range(size)]
    for col in range(size):
        piv = next(r for r in range(col, size) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        inv[col] = [x / scale for x in inv[col]]
        for r in range(size):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(_normalize(x) for x in row) for row in inv)


def transition_determinant(n):
    """Determinant of the e-to-m matrix, by fraction-free Bareiss elimination."""
    a = [list(row) for row in e_to_m_matrix(n)]
    size, sign, prev = len(a), 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for r in range(k + 1, size):
            for c in range(k + 1, size):
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def _require(f, basis):
    if f.basis != basis:
        raise WrongBasis(f"expected a {basis}-basis symmetric function, got {f.basis!r}")


def _transform(f, matrix, target):
    parts = partitions(f.n)
    index = {lam: k for k, lam in enumerate(parts)}
    out = {}
    for lam, c in f.coeffs.items():
        row = matrix[index[lam]]
        for k, x in enumerate(row):
            if x:
                out[parts[k]] = out.get(parts[k], TPoly()) + c * x
    return SymFunc(target, f.n, out)


def e_to_m(f):
    _require(f, "e")
    return _transform(f, e_to_m_matrix(f.n), "m")


def m_to_e(f):
    """Inverse of e_to_m; non-integral coefficients are kept as exact fractions."""
    _require(f, "m")
    return _transform(f, _m_to_e_matrix(f.n), "e")


def omega_e_to_h(f):
    _require(f, "e")
    return SymFunc("h", f.n, dict(f.coeffs))


def multinomial_dim(alpha):
    """n! / prod(alpha_s!), the dimension of the permutation module M^alpha."""
    out = math.factorial(sum(alpha))
    for a in alpha:
        out //= math.factorial(a)
    return out
