import itertools
import random
from fractions import Fraction

import pytest

from kromatic import bundled_graph
from kromatic.graphs import independence_polynomial
from kromatic.heaps import enumerate_pyramids
from kromatic.numbers import partitions_up_to, QPoly
from kromatic.symfunc import (
    Expansion, SymPoly, assemble, basis_element, basis_p, basis_pbar,
    basis_pbarprime, extract, omega, p_decompose_homogeneous, p_in_monomials,
    product_over_variables, series_log, series_mul, series_neg_sub,
    series_reciprocal, series_truncate, sympoly_int_power, sympoly_reciprocal,
    verify_omega_basis_identities,
)


def test_series_ops():
    assert series_truncate((1, 2), 4) == (1, 2, 0, 0, 0)
    assert series_mul((1, 1), (1, 1), 3) == (1, 2, 1, 0)
    assert series_reciprocal((1, -2), 4) == (1, 2, 4, 8, 16)
    assert series_reciprocal((1, 2), 3) == (1, -2, 4, -8)
    log = series_log(series_reciprocal((1, -1), 4), 4)
    assert log == (0, 1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))
    assert series_neg_sub((1, 2, 3)) == (1, -2, 3)
    with pytest.raises(ValueError):
        series_reciprocal((2, 1), 3)
    with pytest.raises(ValueError):
        series_log((0, 1), 3)


def _dense(F, M, N):
    """Expand a SymPoly into an explicit exponent-vector dict (oracle)."""
    out = {}
    for lam, c in F.c.items():
        seen = set()
        for perm in itertools.permutations(range(M), len(lam)):
            vec = [0] * M
            for pos, part in zip(perm, lam):
                vec[pos] = part
            seen.add(tuple(vec))
        for vec in seen:
            out[vec] = out.get(vec, 0) + c
    return {v: c for v, c in out.items() if c}


def _dense_mul(a, b, N):
    out = {}
    for va, ca in a.items():
        for vb, cb in b.items():
            s = tuple(x + y for x, y in zip(va, vb))
            if sum(s) <= N:
                out[s] = out.get(s, 0) + ca * cb
    return {v: c for v, c in out.items() if c}


def test_monomial_products_against_dense_oracle():
    M, N = 3, 5
    rng = random.Random(7)
    pool = [lam for lam in partitions_up_to(N) if len(lam) <= M]
    for _ in range(40):
        fa = SymPoly(M, N, {lam: rng.randint(-2, 2)
                            for lam in rng.sample(pool, 4)})
        fb = SymPoly(M, N, {lam: rng.randint(-2, 2)
                            for lam in rng.sample(pool, 4)})
        assert _dense(fa * fb, M, N) == _dense_mul(_dense(fa, M, N),
                                                   _dense(fb, M, N), N)


def test_specific_monomial_products():
    M, N = 6, 6
    m1 = SymPoly(M, N, {(1,): 1})
    m11 = SymPoly(M, N, {(1, 1): 1})
    m2 = SymPoly(M, N, {(2,): 1})
    assert (m1 * m1).c == {(2,): 1, (1, 1): 2}
    assert (m1 * m11).c == {(2, 1): 1, (1, 1, 1): 3}
    assert (m2 * m11).c == {(3, 1): 1, (2, 1, 1): 1}


def test_product_over_variables():
    F = product_over_variables((1, 2), 3, 3)
    assert F.c == {(): 1, (1,): 2, (1, 1): 4, (1, 1, 1): 8}
    with pytest.raises(ValueError):
        product_over_variables((2, 1), 3, 3)


def test_bases():
    assert basis_pbar(2, 5, 5).c == {(2,): 1, (2, 2): 1}
    assert basis_pbarprime(2, 5, 5).c == {(2,): 1, (4,): 1, (2, 2): 1}
    assert basis_p(2, 5, 5).c == {(2,): 1}
    assert basis_element("pbar", (1,), 5, 5).c == {
        (1,): 1, (1, 1): 1, (1, 1, 1): 1, (1, 1, 1, 1): 1, (1, 1, 1, 1, 1): 1}
    # lowest-degree term of each K-basis element is the classical power sum
    for basis in ("pbar", "pbarprime"):
        for lam in partitions_up_to(4):
            if not lam:
                continue
            B = basis_element(basis, lam, 6, 6)
            n = sum(lam)
            assert B.degree_slice(n) == p_in_monomials(lam, 6, 6).degree_slice(n)


def test_p_decompose_examples():
    got = p_decompose_homogeneous({(1, 1): 2}, 2, 5, 5)
    assert got == {(1, 1): 1, (2,): -1}
    # h_2 = m_2 + m_11 = (p_11 + p_2)/2
    got = p_decompose_homogeneous({(2,): 1, (1, 1): 1}, 2, 5, 5)
    assert got == {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}
    assert p_decompose_homogeneous({(2, 1): 1}, 3, 5, 5) == {(2, 1): 1, (3,): -1}


def test_omega_small():
    M = N = 5
    e2 = SymPoly(M, N, {(1, 1): 1})
    h2 = SymPoly(M, N, {(2,): 1, (1, 1): 1})
    assert omega(e2) == h2
    assert omega(h2) == e2
    # omega is degreewise and fixes constants
    c = SymPoly.const(M, N, 7)
    assert omega(c) == c


def test_omega_involution_randomized():
    rng = random.Random(11)
    M = N = 5
    pool = [lam for lam in partitions_up_to(N) if lam]
    for _ in range(25):
        F = SymPoly(M, N, {lam: rng.randint(-3, 3)
                           for lam in rng.sample(pool, 6)})
        assert omega(omega(F)) == F
    with pytest.raises(ValueError):
        omega(SymPoly(3, 5, {(1,): 1}))  # M < N refused


def test_omega_multiplicativity_lemma():
    # omega(prod_i f(x_i)) = prod_i 1/f(-x_i) for polynomial f with f(0)=1
    rng = random.Random(13)
    M = N = 5
    for _ in range(10):
        f = (1, rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-2, 2))
        lhs = omega(product_over_variables(f, M, N))
        rhs = product_over_variables(series_reciprocal(series_neg_sub(f), N), M, N)
        assert lhs == rhs


def test_extract_round_trip():
    rng = random.Random(17)
    M = N = 5
    pool = [lam for lam in partitions_up_to(N) if lam]
    for basis in ("p", "pbar", "pbarprime"):
        for _ in range(15):
            chosen = {lam: rng.randint(-3, 3) for lam in rng.sample(pool, 5)}
            F = SymPoly(M, N, {})
            for lam, c in chosen.items():
                F = F + basis_element(basis, lam, N, M).scale(c)
            exp = extract(F, basis)
            assert exp.certified
            assert exp.coeffs == {l: c for l, c in chosen.items() if c}
            assert assemble(exp, N, M) == F


def test_extract_fractional_coefficients():
    # extraction is total on symmetric input: m_11 alone expands with
    # rational coefficients and still round-trips exactly
    F = SymPoly(5, 2, {(1, 1): 1})
    exp = extract(F, "pbar")
    assert exp.coeffs == {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)}
    assert assemble(exp, 2, 5) == F
    with pytest.raises(ValueError):
        extract(SymPoly(3, 5, {(1,): 1}), "pbar")  # M < N refused


def test_sympoly_reciprocal_and_power():
    M = N = 5
    one = SymPoly.const(M, N, 1)
    F = one + SymPoly(M, N, {(1,): 1})
    G = sympoly_reciprocal(F)
    assert F * G == one
    assert sympoly_int_power(F, 3) == F * F * F
    assert sympoly_int_power(F, -2) * F * F == one
    assert sympoly_int_power(F, 0) == one


def test_omega_basis_identities():
    for k in (1, 2, 3, 4):
        assert verify_omega_basis_identities(k, 6, 6)


def test_qpoly_coefficients_supported():
    M = N = 3
    q = QPoly.q()
    F = SymPoly(M, N, {(1,): 1 + q, (1, 1): q})
    G = F * F
    assert G.coeff((2,)) == (1 + q) * (1 + q)
    assert omega(omega(F)) == F


def test_pyramid_counts_from_log_of_heap_series():
    # n * [t^n] log H_G(t) counts pyramids of size n, where
    # H_G(t) = 1 / I_G(-t)
    for name in ("k2", "p3", "paw"):
        g = bundled_graph(name)
        H = series_reciprocal(series_neg_sub(independence_polynomial(g)), 6)
        P = series_log(H, 6)
        for n in range(1, 7):
            assert n * P[n] == len(enumerate_pyramids(g, n))


def test_expansion_container():
    e = Expansion("pbar", 3, {(2, 1): -2, (3,): 1})
    assert e.coeff((2, 1)) == -2
    assert e.coeff((9,)) == 0
    assert [l for l, _ in e.items_sorted()] == [(3,), (2, 1)]
