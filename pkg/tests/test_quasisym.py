import pytest

from kromatic import bundled_graph
from kromatic.core import kromatic, theorem_coefficient
from kromatic.graphs import Graph
from kromatic.numbers import QPoly, partitions_up_to
from kromatic.quasisym import (
    ascent_polynomial, coloring_ascents, kromatic_q, kromatic_q_vectors,
    kromatic_q_via_clans, power_sum_coefficient_q, pyramid_p_expansion_q,
    specialize_q,
)
from kromatic.symfunc import extract, omega

K1 = bundled_graph("k1")
K2 = bundled_graph("k2")
K3 = bundled_graph("k3")
P3 = bundled_graph("p3")
P4 = bundled_graph("p4")
C4 = bundled_graph("c4")
PAW = bundled_graph("paw")
E2 = Graph(2, [])


def test_coloring_ascents():
    # K2, kappa(1)={1}, kappa(2)={2}: one ascending color pair
    assert coloring_ascents(K2, (0b01, 0b10)) == 1
    assert coloring_ascents(K2, (0b10, 0b01)) == 0
    # kappa(1)={1,2}, kappa(2)={3}: pairs (1,3) and (2,3)
    assert coloring_ascents(K2, (0b011, 0b100)) == 2
    # no edges, no ascents
    assert coloring_ascents(E2, (0b011, 0b100)) == 0


def test_k2_x1x2_coefficient():
    v = kromatic_q_vectors(K2, 2, 2)
    assert v[(1, 1)] == QPoly((1, 1))  # 1 + q
    assert kromatic_q(K2, 2, 2).coeff((1, 1)) == QPoly((1, 1))


def test_q_at_one_counts_colorings():
    from kromatic.core import proper_set_colorings
    for g in (K2, P3, PAW, E2):
        counts = kromatic_q_vectors(g, 4, 4)
        total = sum(p(1) for p in counts.values())
        assert total == sum(1 for _ in proper_set_colorings(g, 4, 4))


def test_specialize_q_collapse():
    for g in (K2, P3, PAW):
        assert specialize_q(kromatic_q(g, 4, 4), 1) == kromatic(g, 4, 4)


def test_via_clans_matches_direct_enumeration():
    cases = [(K1, 4, 3), (K2, 5, 3), (K3, 5, 3), (P3, 4, 3), (E2, 4, 3),
             (P4, 5, 3), (C4, 5, 3), (PAW, 5, 3)]
    for g, N, M in cases:
        assert kromatic_q_via_clans(g, N, M) == kromatic_q_vectors(g, N, M)


def test_edgeless_graph_has_constant_coefficients():
    for poly in kromatic_q_vectors(E2, 4, 3).values():
        assert len(poly.c) <= 1  # no ascents anywhere


def test_c4_vectors_are_not_symmetric():
    v = kromatic_q_vectors(C4, 5, 3)
    assert v[(2, 1, 2)] != v[(2, 2, 1)]
    with pytest.raises(ValueError):
        kromatic_q(C4, 5, 3)


def test_unit_interval_vectors_are_symmetric():
    for g in (K2, K3, P3, P4, PAW):
        kromatic_q(g, 5, 3)  # no ValueError


ASCENT_TABLES = {
    # path on three vertices
    (P3, (3,)): (1, 1, 1),
    (P3, (2, 1)): (1, 2, 1),
    (P3, (1, 1, 1)): (1, 4, 1),
    (P3, (4,)): (3, 4, 4, 4, 1),          # not palindromic
    (P3, (2, 1, 1)): (3, 8, 10, 4, 1),
    # triangle plus a pendant
    (PAW, (5,)): (4, 9, 13, 14, 14, 10, 5, 1),
    # single edge
    (K2, (2,)): (1, 1),
}


def test_ascent_polynomial_frozen_values():
    for (g, lam), coeffs in ASCENT_TABLES.items():
        assert ascent_polynomial(g, lam) == QPoly(coeffs), (g, lam)


def test_ascent_polynomial_empty_sizes():
    assert ascent_polynomial(K2, ()) == QPoly()     # cannot cover
    assert ascent_polynomial(K2, (), cover_all=False) == QPoly(1)


def test_pyramid_expansion_is_omega_image():
    # one degree beyond the vertex count, so heaps with repeated vertices
    # (whose ascent polynomials are not palindromic) are exercised
    for g in (K1, K2, K3, P3, P4, PAW):
        N = g.n + 1
        assert pyramid_p_expansion_q(g, N, N) == omega(kromatic_q(g, N, N))


def test_unrestricted_pair_statistic_fails():
    # counting all vertex-order ascents, not just adjacent ones, breaks the
    # expansion on any graph with a non-edge
    def all_pairs(h):
        w = h.word
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w))
                   if w[i] < w[j])

    g = P3
    wrong = pyramid_p_expansion_q(g, 3, 3, statistic=all_pairs)
    assert wrong != omega(kromatic_q(g, 3, 3))


def q_extraction_targets(g, N):
    X = kromatic_q(g, N, N)
    W = omega(X)
    return {"5.1": extract(W, "pbarprime"), "5.2": extract(X, "pbarprime"),
            "5.3": extract(W, "pbar"), "5.4": extract(X, "pbar")}


def test_rule_coefficients_match_extraction():
    for g, N in ((K2, 5), (P3, 4), (PAW, 4)):
        tgt = q_extraction_targets(g, N)
        for lam in partitions_up_to(N):
            if not lam:
                continue
            for rule in ("5.1", "5.2", "5.3", "5.4"):
                got = power_sum_coefficient_q(g, lam, rule)
                assert got == tgt[rule].coeff(lam), (g, lam, rule)


def test_rule_coefficients_collapse_at_q_one():
    for lam in partitions_up_to(5):
        if not lam:
            continue
        sign = -1 if (sum(lam) - len(lam)) % 2 else 1
        assert power_sum_coefficient_q(K2, lam, "5.1")(1) == \
            theorem_coefficient(K2, lam, "1.5")
        assert power_sum_coefficient_q(K2, lam, "5.2")(1) == \
            sign * theorem_coefficient(K2, lam, "1.4")
        assert power_sum_coefficient_q(K2, lam, "5.3")(1) == \
            theorem_coefficient(K2, lam, "1.3")
        assert power_sum_coefficient_q(K2, lam, "5.4")(1) == \
            sign * theorem_coefficient(K2, lam, "1.2")


def test_cover_filter_matters():
    # without the covering restriction the formulas overcount: a single
    # vertex cannot cover K2, so the true coefficient at (1,) is zero
    for rule in ("5.1", "5.2", "5.3", "5.4"):
        assert power_sum_coefficient_q(K2, (1,), rule) == QPoly()
        assert power_sum_coefficient_q(K2, (1,), rule, cover="plain") != \
            QPoly()


def test_rule_validation():
    with pytest.raises(ValueError):
        power_sum_coefficient_q(K2, (1,), "9.9")
