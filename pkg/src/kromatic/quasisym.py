"""q-refined set-coloring series.

The q-weight of a proper set coloring counts ascents: quadruples
(u, v, i, j) with {u,v} an edge, u < v in the vertex order, i a color on u,
j a color on v, and i < j.  The resulting series is quasisymmetric in
general and symmetric when the graph comes from a unit interval model.

Routes implemented here:
  * direct enumeration over set colorings (exponent-vector level);
  * the clan-graph route: blow vertices into cliques, enumerate ordinary
    proper colorings, divide out the q-factorial of the clique sizes;
  * pyramid expansions: coefficients of p_lambda / z_lambda are ascent
    generating functions over lists of pyramids covering the vertex set;
  * closed coefficient formulas for the four K-power-sum expansions.
"""

from collections import Counter
from fractions import Fraction
from itertools import product
from math import factorial

from .core import _coloring_exponent_vector, proper_set_colorings
from .graphs import clan_graph, popcount
from .heaps import ascent_count, compose_all, enumerate_pyramids
from .numbers import (QPoly, compositions_up_to, divisors, mobius, mu_hat,
                      partitions_up_to, q_factorial, z_lambda)
from .symfunc import SymPoly, p_in_monomials, sympoly_from_vector_counts


def _pairs_below(a, b):
    """Color pairs (i, j) with i in mask a, j in mask b, i < j."""
    total = 0
    j = 0
    rest = b
    while rest:
        if rest & 1:
            total += popcount(a & ((1 << j) - 1))
        rest >>= 1
        j += 1
    return total


def coloring_ascents(g, coloring):
    """Ascents of a set coloring given as per-vertex color bitmasks."""
    total = 0
    for u, v in g.edges:
        total += _pairs_below(coloring[u - 1], coloring[v - 1])
    return total


def _q_power_add(lst, exponent, amount=1):
    while len(lst) <= exponent:
        lst.append(0)
    lst[exponent] += amount


def kromatic_q_vectors(g, N, M):
    """Exponent-vector coefficients of the q-refined series: a dict mapping
    each length-M exponent vector to a polynomial in q.  This is the honest
    quasisymmetric object; see kromatic_q for the symmetric repackaging."""
    acc = {}
    for coloring in proper_set_colorings(g, N, M):
        vec = _coloring_exponent_vector(coloring, M)
        _q_power_add(acc.setdefault(vec, []), coloring_ascents(g, coloring))
    return {vec: QPoly(lst) for vec, lst in acc.items() if any(lst)}


def kromatic_q(g, N, M):
    """The q-refined series as a SymPoly with QPoly coefficients.  Raises
    ValueError if the underlying vector coefficients are not symmetric
    (graphs with no unit interval model)."""
    return sympoly_from_vector_counts(kromatic_q_vectors(g, N, M), M, N)


def _proper_colorings(g, M):
    """Ordinary proper colorings with colors 1..M, as tuples."""

    def rec(v, acc):
        if v > g.n:
            yield tuple(acc)
            return
        banned = set()
        for u in range(1, v):
            if g.adjacent(u, v):
                banned.add(acc[u - 1])
        for c in range(1, M + 1):
            if c not in banned:
                acc.append(c)
                yield from rec(v + 1, acc)
                acc.pop()

    yield from rec(1, [])


def _single_coloring_ascents(g, kappa):
    total = 0
    for u, v in g.edges:
        if kappa[u - 1] < kappa[v - 1]:
            total += 1
    return total


def kromatic_q_via_clans(g, N, M):
    """Exponent-vector coefficients assembled from clique blowups: for each
    positive composition alpha (one part per vertex, total at most N), color
    the alpha-clan graph properly, record ascents, and divide the vector
    coefficient by the q-factorial of alpha.  The division must be exact;
    divexact raises otherwise."""
    acc = {}
    for alpha in compositions_up_to(g.n, N):
        cg, piece_vertex = clan_graph(g, alpha)
        fac = q_factorial(alpha)
        per = {}
        for kappa in _proper_colorings(cg, M):
            vec = [0] * M
            for c in kappa:
                vec[c - 1] += 1
            _q_power_add(per.setdefault(tuple(vec), []),
                         _single_coloring_ascents(cg, kappa))
        for vec, lst in per.items():
            quot = QPoly(lst).divexact(fac)
            prev = acc.get(vec)
            acc[vec] = quot if prev is None else prev + quot
    return {vec: p for vec, p in acc.items() if p}


# ---------------------------------------------------------------------------
# pyramid expansions

def ascent_polynomial(g, sizes, cover_all=True, statistic=ascent_count):
    """Generating function sum q^statistic over ordered lists of pyramids
    with the given sizes, composed into one heap; with cover_all, only lists
    whose supports jointly cover every vertex count."""
    if not sizes:
        if g.n == 0 or not cover_all:
            return QPoly(1)
        return QPoly()
    lists = [enumerate_pyramids(g, s) for s in sizes]
    full = g.full_mask
    counts = []
    for combo in product(*lists):
        if cover_all:
            m = 0
            for h in combo:
                m |= h.support_mask
            if m != full:
                continue
        _q_power_add(counts, statistic(compose_all(combo)))
    return QPoly(counts)


def pyramid_p_expansion_q(g, N, M, statistic=ascent_count):
    """Sum over partitions of p_lambda / z_lambda times the covering ascent
    polynomial.  For unit-interval graphs this equals omega of kromatic_q."""
    total = SymPoly(M, N, {})
    for lam in partitions_up_to(N):
        if not lam:
            continue
        A = ascent_polynomial(g, lam, cover_all=True, statistic=statistic)
        if not A:
            continue
        total = total + p_in_monomials(lam, N, M).scale(
            A * Fraction(1, z_lambda(lam)))
    return total


# ---------------------------------------------------------------------------
# closed coefficient formulas

RULES_Q = ("5.1", "5.2", "5.3", "5.4")


def _triple_decompositions(lam):
    """Multisets of triples (a, d, n), each contributing n copies of the
    part value a*d, that together rebuild the part multiset of lam."""
    target = Counter(lam)
    cands = []
    for v in sorted(target):
        for n in range(1, target[v] + 1):
            for d in divisors(v):
                cands.append((v // d, d, n, v))

    def rec(idx, remaining, chosen):
        if not +remaining:
            yield tuple(chosen)
            return
        if idx == len(cands):
            return
        a, d, n, v = cands[idx]
        yield from rec(idx + 1, remaining, chosen)
        mx = remaining.get(v, 0) // n
        for take in range(1, mx + 1):
            nxt = remaining.copy()
            nxt[v] -= n * take
            if not nxt[v]:
                del nxt[v]
            yield from rec(idx + 1, nxt, chosen + [(a, d, n)] * take)

    yield from rec(0, target, [])


def _arrangements(triples):
    """Ordered assignments of (d, n) data to the positions of the sorted
    partition formed by the a-values."""
    by_a = Counter(t[0] for t in triples)
    by_triple = Counter(triples)
    num = 1
    for c in by_a.values():
        num *= factorial(c)
    for c in by_triple.values():
        num //= factorial(c)
    return num


def power_sum_coefficient_q(g, lam, rule, cover="all"):
    """Closed-formula coefficient of one K-power-sum basis element in the
    q-refined series or its omega image, as a polynomial in q (entries may
    be fractions).

    rule "5.1": coefficient on the multiplicative-over-all-multiples basis
        in the omega image; "5.2": same basis in the series itself;
    rule "5.3": coefficient on the single-column basis in the omega image;
        "5.4": same basis in the series itself.
    cover="all" restricts pyramid lists to those covering every vertex,
    which is the variant that matches extraction; "plain" drops the filter.
    """
    if rule not in RULES_Q:
        raise ValueError(f"unknown rule {rule!r}")
    f = mobius if rule in ("5.1", "5.2") else mu_hat
    signed = rule in ("5.2", "5.4")
    total = QPoly()
    for triples in _triple_decompositions(lam):
        lamp = tuple(sorted((a for a, d, n in triples), reverse=True))
        coef = Fraction(_arrangements(triples), z_lambda(lamp))
        ok = True
        for a, d, n in triples:
            num = f(d) * (-1) ** (n + 1)
            if num == 0:
                ok = False
                break
            coef *= Fraction(num, d * n)
        if not ok:
            continue
        A = ascent_polynomial(g, lamp, cover_all=(cover == "all"))
        if not A:
            continue
        if signed and (sum(lamp) - len(lamp)) % 2:
            coef = -coef
        total = total + A * coef
    return total


def specialize_q(F, value):
    """Evaluate every QPoly coefficient of a SymPoly at a fixed q."""
    return F.map_coeffs(lambda c: c(value) if isinstance(c, QPoly) else c)
