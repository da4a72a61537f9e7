"""The set-coloring generating function and its K-power-sum structure.

For a graph G on vertices 1..n, a proper set coloring assigns each vertex a
nonempty finite set of positive-integer colors so that adjacent vertices get
disjoint sets.  The generating function weights a coloring by the product of
x_i over all assigned colors (with multiplicity across vertices).  It equals
the alternating sum over vertex subsets W of prod_i I_W(x_i), where I_W is
the independence polynomial of the induced subgraph on W; its omega image
swaps I_W for H_W(t) = 1 / I_W(-t).

Everything here is exact and truncated to total degree N in M variables.
"""
from __future__ import annotations

import itertools

from .graphs import independence_polynomial, mask_vertices, popcount
from .heaps import enumerate_lyndon, lyndon_count
from .numbers import binomial, multichoose, multiplicities
from .symfunc import (
    Expansion, SymPoly, basis_element, extract, omega, product_over_variables,
    series_neg_sub, series_reciprocal, sympoly_from_vector_counts,
    sympoly_int_power,
)


def _subset_signed_products(g, N, M, series_of_mask):
    acc = SymPoly(M, N, {})
    for mask in range(g.full_mask + 1):
        sign = -1 if (g.n - popcount(mask)) % 2 else 1
        term = product_over_variables(series_of_mask(mask), M, N)
        acc = acc + term.scale(sign)
    return acc


def kromatic(g, N, M):
    """The set-coloring generating function, truncated to degree N in M
    variables, via the alternating subset expansion."""
    return _subset_signed_products(
        g, N, M, lambda mask: independence_polynomial(g, mask))


def omega_kromatic(g, N, M):
    """omega of the set-coloring generating function, computed directly from
    the reciprocal independence series of each induced subgraph."""
    return _subset_signed_products(
        g, N, M,
        lambda mask: series_reciprocal(
            series_neg_sub(independence_polynomial(g, mask)), N))


# ---------------------------------------------------------------------------
# brute-force oracles

def proper_set_colorings(g, budget, M):
    """Yield proper set colorings as tuples of color bitmasks (bit c-1 for
    color c), one per vertex, with total size <= budget."""
    nonempty = [m for m in range(1, 1 << M)]
    nonempty.sort(key=popcount)

    def rec(v, remaining, acc):
        if v > g.n:
            yield tuple(acc)
            return
        forbidden = 0
        for u in mask_vertices(g.adj[v]):
            if u < v:
                forbidden |= acc[u - 1]
        room = remaining - (g.n - v)  # later vertices need one color each
        for m in nonempty:
            sz = popcount(m)
            if sz > room:
                break
            if m & forbidden:
                continue
            acc.append(m)
            yield from rec(v + 1, remaining - sz, acc)
            acc.pop()

    if g.n == 0:
        yield ()
        return
    yield from rec(1, budget, [])


def _coloring_exponent_vector(coloring, M):
    vec = [0] * M
    for m in coloring:
        c = 1
        while m:
            if m & 1:
                vec[c - 1] += 1
            m >>= 1
            c += 1
    return tuple(vec)


def brute_force_kromatic(g, N, M):
    """Direct enumeration of proper set colorings (independent oracle for
    kromatic)."""
    counts = {}
    for coloring in proper_set_colorings(g, N, M):
        vec = _coloring_exponent_vector(coloring, M)
        counts[vec] = counts.get(vec, 0) + 1
    return sympoly_from_vector_counts(counts, M, N)


def brute_force_chromatic(g, M):
    """The classical proper-coloring generating function with M colors
    (homogeneous of degree n)."""
    counts = {}
    for assignment in itertools.product(range(M), repeat=g.n):
        ok = all(assignment[u - 1] != assignment[v - 1] for u, v in g.edges)
        if not ok:
            continue
        vec = [0] * M
        for c in assignment:
            vec[c] += 1
        vec = tuple(vec)
        counts[vec] = counts.get(vec, 0) + 1
    return sympoly_from_vector_counts(counts, M, g.n)


# ---------------------------------------------------------------------------
# classical power-sum oracles

def _edge_subset_components(g, edge_subset):
    parent = list(range(g.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edge_subset:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    sizes = {}
    for v in g.vertices():
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    return tuple(sorted(sizes.values(), reverse=True))


def chromatic_p_expansion_oracles(g):
    """Two independent power-sum expansions of the chromatic symmetric
    function: the signed edge-subset sum, and the acyclic-orientation count
    by source-component sizes.  Returns (edge_expansion, orientation_expansion),
    both over basis 'p'."""
    edge_coeffs = {}
    for r in range(len(g.edges) + 1):
        for sub in itertools.combinations(g.edges, r):
            lam = _edge_subset_components(g, sub)
            edge_coeffs[lam] = edge_coeffs.get(lam, 0) + (-1) ** r
    edge_coeffs = {l: v for l, v in edge_coeffs.items() if v}

    from .graphs import acyclic_orientations, source_components
    ao_coeffs = {}
    for orient in acyclic_orientations(g):
        comps = source_components(g, orient)
        lam = tuple(sorted((len(c) for c in comps), reverse=True))
        sign = -1 if (g.n - len(lam)) % 2 else 1
        ao_coeffs[lam] = ao_coeffs.get(lam, 0) + sign
    ao_coeffs = {l: v for l, v in ao_coeffs.items() if v}

    return (Expansion("p", g.n, edge_coeffs),
            Expansion("p", g.n, ao_coeffs))


# ---------------------------------------------------------------------------
# exponent families from Lyndon heap counts

def exponent_d(g, k, support=None):
    """Lyndon heaps of size k supported inside the subset."""
    return lyndon_count(g, k, support)


def exponent_b(g, k, support=None):
    """Sum of Lyndon counts over sizes k / 2^j (all j with 2^j dividing k)."""
    total = 0
    m = k
    while True:
        total += lyndon_count(g, m, support)
        if m % 2:
            break
        m //= 2
    return total


def exponent_c(g, k, support=None):
    if k % 2 == 1:
        return lyndon_count(g, k, support)
    if k % 4 == 0:
        return -lyndon_count(g, k, support)
    return -(lyndon_count(g, k, support) + lyndon_count(g, k // 2, support))


def exponent_a(g, k, support=None):
    if k % 2 == 1:
        return lyndon_count(g, k, support)
    total = 0
    m = k
    while m % 2 == 0:
        total += lyndon_count(g, m, support)
        m //= 2
    return -total


_EXPONENTS = {"a": exponent_a, "b": exponent_b, "c": exponent_c, "d": exponent_d}

# which exponent family pairs with which product and basis
_FACTORIZATION_VARIANTS = {
    # variant: (series kind, basis, exponent function)
    "a": ("independence", "pbar", exponent_a),
    "b": ("reciprocal", "pbar", exponent_b),
    "c": ("independence", "pbarprime", exponent_c),
    "d": ("reciprocal", "pbarprime", exponent_d),
}


def verify_factorization(g, variant, N, M, support=None):
    """Check prod_i F(x_i) = prod_k (1 + basis_k)^(e(k)) at truncation N,
    where F is the independence series (variants a, c) or its signed
    reciprocal (variants b, d) of the induced subgraph, and e is the matching
    Lyndon-count exponent family.  Returns True; raises AssertionError with
    context on failure."""
    kind, basis, efn = _FACTORIZATION_VARIANTS[variant]
    ind = independence_polynomial(g, support)
    series = ind if kind == "independence" else \
        series_reciprocal(series_neg_sub(ind), N)
    lhs = product_over_variables(series, M, N)
    one = SymPoly.const(M, N, 1)
    rhs = one
    for k in range(1, N + 1):
        e = efn(g, k, support)
        if e:
            rhs = rhs * sympoly_int_power(one + basis_element(basis, (k,), N, M), e)
    assert lhs == rhs, (
        f"factorization variant {variant!r} fails on {g!r} "
        f"support={support!r} at N={N}")
    return True


# ---------------------------------------------------------------------------
# coefficient rules ("which" tags follow the build contract)

def _menu_sizes(k, which):
    """Allowed Lyndon-heap sizes for a part of value k, plus selection mode
    ('distinct' = plain subsets, 'multiset' = repetition allowed)."""
    if which == "1.2":
        if k % 2 == 1:
            return [k], "distinct"
        sizes = []
        m = k
        while m % 2 == 0:
            sizes.append(m)
            m //= 2
        return sizes, "multiset"
    if which == "1.3":
        sizes = [k]
        m = k
        while m % 2 == 0:
            m //= 2
            sizes.append(m)
        return sizes, "distinct"
    if which == "1.4":
        if k % 2 == 1:
            return [k], "distinct"
        if k % 4 == 0:
            return [k], "multiset"
        return [k, k // 2], "multiset"
    if which == "1.5":
        return [k], "distinct"
    raise ValueError(f"unknown coefficient rule {which!r}")


def theorem_coefficient(g, lam, which):
    """Count of Lyndon-heap-list configurations for the partition lam by
    direct enumeration: for each part value k with multiplicity i_k pick i_k
    Lyndon heaps from the allowed sizes (with or without repetition per the
    rule), subject to the chosen heaps jointly covering every vertex.

    Extraction dictionaries: '1.2' gives (-1)^(|lam|-len(lam)) [pbar_lam] of
    the set-coloring function, '1.3' gives [pbar_lam] of its omega image,
    '1.4' gives (-1)^(|lam|-len(lam)) [pbarprime_lam], '1.5' gives
    [pbarprime_lam] of the omega image."""
    full = g.full_mask
    per_value = []
    for k, i_k in sorted(multiplicities(lam).items()):
        sizes, mode = _menu_sizes(k, which)
        menu = []
        for s in sizes:
            menu.extend(enumerate_lyndon(g, s))
        chooser = itertools.combinations if mode == "distinct" \
            else itertools.combinations_with_replacement
        selections = [sel for sel in chooser(range(len(menu)), i_k)]
        per_value.append((menu, selections))
    total = 0
    for combo in itertools.product(*(sel for _, sel in per_value)):
        mask = 0
        for (menu, _), chosen in zip(per_value, combo):
            for idx in chosen:
                mask |= menu[idx].support_mask
        if mask == full:
            total += 1
    return total


def _rule_count_on_subset(g, support, k, i_k, which):
    sizes, mode = _menu_sizes(k, which)
    pool = sum(lyndon_count(g, s, support) for s in sizes)
    return binomial(pool, i_k) if mode == "distinct" else multichoose(pool, i_k)


def theorem_coefficient_subsets(g, lam, which):
    """Same count as theorem_coefficient, by inclusion-exclusion over vertex
    subsets with per-subset binomial/multichoose products."""
    mult = multiplicities(lam)
    total = 0
    for mask in range(g.full_mask + 1):
        sign = -1 if (g.n - popcount(mask)) % 2 else 1
        prod = 1
        for k, i_k in mult.items():
            prod *= _rule_count_on_subset(g, mask, k, i_k, which)
            if not prod:
                break
        total += sign * prod
    return total


# ---------------------------------------------------------------------------
# independence multiset

class IndependenceMultiset:
    """The multiset of induced-subgraph independence polynomials, with the
    subset sizes kept alongside (enough to rebuild the alternating sums)."""

    __slots__ = ("n", "entries")

    def __init__(self, n, entries):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", tuple(sorted(entries)))

    def __setattr__(self, *a):
        raise AttributeError("IndependenceMultiset is immutable")

    def __eq__(self, other):
        return (isinstance(other, IndependenceMultiset)
                and (self.n, self.entries) == (other.n, other.entries))

    def __repr__(self):
        return f"IndependenceMultiset(n={self.n}, entries={list(self.entries)})"


def independence_multiset(g):
    entries = []
    for mask in range(g.full_mask + 1):
        entries.append((independence_polynomial(g, mask), popcount(mask)))
    return IndependenceMultiset(g.n, entries)


def kromatic_from_multiset(ms, N, M, image="direct"):
    """Rebuild the (direct or omega) set-coloring generating function from an
    IndependenceMultiset alone."""
    acc = SymPoly(M, N, {})
    for poly, size in ms.entries:
        series = poly if image == "direct" else \
            series_reciprocal(series_neg_sub(poly), N)
        sign = -1 if (ms.n - size) % 2 else 1
        acc = acc + product_over_variables(series, M, N).scale(sign)
    return acc


# ---------------------------------------------------------------------------
# recovering the signed exponent family from coefficients

def _lambda_of_vector(u):
    parts = []
    for k, times in enumerate(u, start=1):
        parts.extend([k] * times)
    return tuple(sorted(parts, reverse=True))


def omega_pbar_coefficients_via_subsets(g, vectors):
    """[pbar_{lam(u)}] of the omega image for each exponent vector u, via the
    signed subset sum of binomial products of the subset exponent family
    (size-graded Lyndon counts).  Returns an Expansion over exactly the
    partitions lam(u)."""
    coeffs = {}
    n_deg = 0
    for u in vectors:
        lam = _lambda_of_vector(u)
        n_deg = max(n_deg, sum(lam))
        total = 0
        for mask in range(g.full_mask + 1):
            sign = -1 if (g.n - popcount(mask)) % 2 else 1
            prod = 1
            for k, u_k in enumerate(u, start=1):
                if u_k:
                    prod *= binomial(exponent_b(g, k, mask), u_k)
                    if not prod:
                        break
            total += sign * prod
        if total:
            coeffs[lam] = total
    return Expansion("pbar", n_deg, coeffs)


def recover_signed_exponent_multiset(obj, K, caps):
    """Invert a pbar expansion into the signed family {vector: weight} with
    coefficient(lam(u)) = sum_v weight(v) * prod_k C(v_k, u_k), peeling from
    componentwise-largest vectors downward inside the cap box.

    obj may be an Expansion over 'pbar' or a SymPoly (extracted first).
    caps is a scalar bound or a length-K tuple of per-size bounds; the true
    family must lie inside the box for the inversion to be exact."""
    if isinstance(obj, SymPoly):
        obj = extract(obj, "pbar")
    if obj.basis != "pbar":
        raise ValueError("recovery needs a pbar expansion")
    if isinstance(caps, int):
        caps = (caps,) * K
    if len(caps) != K:
        raise ValueError("caps length must equal K")
    need = sum((k + 1) * c for k, c in enumerate(caps))
    if need > obj.N:
        raise ValueError(
            f"truncation too small: recovering up to caps={caps} needs "
            f"degree {need} > N={obj.N}")
    box = sorted(itertools.product(*(range(c + 1) for c in caps)),
                 key=lambda u: (-sum(u), u))
    support = {}
    for u in box:
        coeff = obj.coeff(_lambda_of_vector(u))
        acc = coeff
        for v, w in support.items():
            if v == u or any(vk < uk for vk, uk in zip(v, u)):
                continue
            prod = w
            for vk, uk in zip(v, u):
                prod *= binomial(vk, uk)
                if not prod:
                    break
            acc -= prod
        if acc:
            support[u] = acc
    return support


def signed_exponent_family(g, K):
    """The ground-truth signed family: for each vertex subset W, the vector
    (b_W(1), ..., b_W(K)) weighted by (-1)^(n - |W|), aggregated."""
    fam = {}
    for mask in range(g.full_mask + 1):
        vec = tuple(exponent_b(g, k, mask) for k in range(1, K + 1))
        sign = -1 if (g.n - popcount(mask)) % 2 else 1
        fam[vec] = fam.get(vec, 0) + sign
    return {v: w for v, w in fam.items() if w}
