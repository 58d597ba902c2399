import math

import pytest

from hessencomb import (
    SymFunc, TPoly, check_brosnan_chow, check_chow_h2, check_sink_identity, csf,
    e_to_m, make_hessenberg, multinomial_dim, partitions,
)
from hessencomb.csf import coloring_polynomial
from hessencomb.errors import BudgetExceeded
from hessencomb.suites import enumerate_hessenberg

from helpers import brute_csf_m

H6 = make_hessenberg((2, 3, 5, 6, 6, 6))
H8 = make_hessenberg((2, 3, 6, 6, 6, 7, 8, 8))


def test_single_edge():
    x = csf(make_hessenberg((2, 2)))
    assert x.e_coeffs == SymFunc("e", 2, {(2,): TPoly([1, 1])})


def test_triangle():
    x = csf(make_hessenberg((3, 3, 3)))
    assert x.e_coeffs == SymFunc("e", 3, {(3,): TPoly([1, 2, 2, 1])})


def test_chow_t1_coefficient_n6():
    x = csf(H6)
    assert x.e_coeffs.t_coefficient(1) == SymFunc("e", 6, {(6,): 3, (4, 2): 1, (5, 1): 1})
    assert check_chow_h2(H6, x).passed


def test_chow_t1_coefficient_n8():
    chk = check_chow_h2(H8)
    assert chk.passed
    assert chk.rhs == SymFunc("e", 8, {(8,): 3, (6, 2): 2, (7, 1): 2})


def test_chow_trivial():
    chk = check_chow_h2(make_hessenberg((2, 2)))
    assert chk.passed and chk.lhs == SymFunc.single("e", (2,))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_m_coefficients_match_brute_force_colorings(n):
    for h in enumerate_hessenberg(n):
        x = csf(h)
        for lam in partitions(n):
            assert list(x.m_coeffs[lam].coeffs) == brute_csf_m(h, lam), (h, lam)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_expansion_invariants(n):
    for h in enumerate_hessenberg(n):
        x = csf(h)
        assert e_to_m(x.e_coeffs) == x.m_coeffs
        for c in x.e_coeffs.coeffs.values():
            assert c.is_integral() and all(v >= 0 for v in c.coeffs)
            assert c.degree() <= h.N_h
        t0 = sum(x.c(lam)[0] * multinomial_dim(lam) for lam in partitions(n))
        assert t0 == 1


def test_symmetry_under_permuted_content():
    # an m-coefficient must not depend on which colour gets which multiplicity
    for h in enumerate_hessenberg(5):
        for lam in partitions(5):
            base = coloring_polynomial(h, lam)
            assert coloring_polynomial(h, tuple(reversed(lam))) == base
            if len(lam) > 2:
                rot = lam[1:] + lam[:1]
                assert coloring_polynomial(h, rot) == base


def test_sink_identity_examples():
    checks = check_sink_identity(make_hessenberg((2, 2)))
    assert checks[0].lhs == TPoly([1, 1]) and checks[0].passed
    checks = check_sink_identity(make_hessenberg((3, 3, 3)))
    assert checks[0].rhs == TPoly([1, 2, 2, 1])
    assert all(c.passed for c in checks)


def test_brosnan_chow_examples():
    total, invariant = check_brosnan_chow(make_hessenberg((2, 4, 4, 4)))
    assert invariant.passed and invariant.rhs == TPoly([1, 3, 4, 3, 1])
    total, invariant = check_brosnan_chow(make_hessenberg((3, 3, 3)))
    assert total.passed and total.lhs == TPoly([1, 2, 2, 1])


def test_total_dimension_is_factorial():
    x = csf(H6)
    total = sum((x.c(lam) * multinomial_dim(lam) for lam in partitions(6)), TPoly())
    assert sum(total.coeffs) == math.factorial(6)


def test_budget():
    with pytest.raises(BudgetExceeded):
        csf(make_hessenberg(tuple(range(2, 11)) + (10,)))
