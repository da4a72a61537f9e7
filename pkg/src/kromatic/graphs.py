"""Finite simple graphs on ordered vertices 1..n, with bitmask subsets.

Vertex subsets are plain Python ints used as bitmasks (bit v-1 for vertex v),
so capacity is unbounded.  Graphs are immutable and hashable.
"""
from __future__ import annotations

import itertools


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def mask_vertices(mask):
    """Vertices of a bitmask, ascending."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def popcount(mask):
    return mask.bit_count()


class Graph:
    """Simple undirected graph; vertices 1..n carry a fixed total order."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n, edges):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        adj = [0] * (n + 1)  # adj[v] = bitmask of neighbours, index 0 unused
        norm = []
        for e in edges:
            u, v = e
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {e} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, *a):
        raise AttributeError("Graph is immutable")

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def vertices(self):
        return range(1, self.n + 1)

    def adjacent(self, u, v):
        return bool(self.adj[u] >> (v - 1) & 1)

    def __eq__(self, other):
        return isinstance(other, Graph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def graph_to_json(g):
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges]}


def graph_from_json(obj):
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("graph json must have keys 'n' and 'edges'")
    return Graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])


def induced_subgraph(g, mask):
    """Induced subgraph on a vertex bitmask.

    Returns (subgraph, mapping) where mapping[old_vertex] = new_vertex and the
    new labels 1..k preserve the old vertex order.
    """
    verts = mask_vertices(mask)
    mapping = {v: i + 1 for i, v in enumerate(verts)}
    edges = [(mapping[u], mapping[v]) for u, v in g.edges
             if u in mapping and v in mapping]
    return Graph(len(verts), edges), mapping


def clan_graph(g, alpha):
    """Blow each vertex v into a clique of alpha[v-1] copies.

    Copies of the same vertex are mutually adjacent; copies of adjacent
    vertices are all adjacent.  Pieces are ordered by host vertex then copy
    index.  Returns (graph, piece_vertex) with piece_vertex[p-1] = host vertex
    of piece p.
    """
    if len(alpha) != g.n:
        raise ValueError("composition length must equal vertex count")
    if any(a < 0 for a in alpha):
        raise ValueError("composition parts must be nonnegative")
    piece_vertex = []
    first = {}
    for v in g.vertices():
        first[v] = len(piece_vertex) + 1
        piece_vertex.extend([v] * alpha[v - 1])
    edges = []
    m = len(piece_vertex)
    for p in range(1, m + 1):
        for r in range(p + 1, m + 1):
            u, v = piece_vertex[p - 1], piece_vertex[r - 1]
            if u == v or g.adjacent(u, v):
                edges.append((p, r))
    return Graph(m, edges), tuple(piece_vertex)


def independence_polynomial(g, mask=None):
    """Coefficients (i_0, i_1, ...) of the independence polynomial of g
    restricted to the vertices in mask (default: all)."""
    if mask is None:
        mask = g.full_mask
    coeffs = [0] * (popcount(mask) + 1)

    def walk(avail, size):
        coeffs[size] += 1
        m = avail
        while m:
            low = m & -m
            v = low.bit_length()
            m ^= low
            # only extend with vertices above the last choice: enforced by
            # masking below, so each independent set is counted once
            walk(avail & ~((low << 1) - 1) & ~g.adj[v], size + 1)

    walk(mask, 0)
    # walk double counts nothing but visits each independent set once because
    # vertices are added in increasing order
    top = max(i for i, c in enumerate(coeffs) if c) if any(coeffs) else 0
    return tuple(coeffs[:top + 1])


def independent_sets(g, mask=None):
    """All independent vertex subsets (as bitmasks) inside mask."""
    if mask is None:
        mask = g.full_mask
    out = []

    def walk(avail, chosen):
        out.append(chosen)
        m = avail
        while m:
            low = m & -m
            v = low.bit_length()
            m ^= low
            walk(avail & ~((low << 1) - 1) & ~g.adj[v], chosen | low)

    walk(mask, 0)
    return out


def acyclic_orientations(g):
    """All acyclic orientations, each a tuple of directed edges (u, v)=u->v."""
    m = len(g.edges)
    out = []
    for bits in range(1 << m):
        oriented = tuple((u, v) if not (bits >> i & 1) else (v, u)
                         for i, (u, v) in enumerate(g.edges))
        if _is_acyclic(g.n, oriented):
            out.append(oriented)
    return out


def _is_acyclic(n, oriented):
    succ = [[] for _ in range(n + 1)]
    indeg = [0] * (n + 1)
    for u, v in oriented:
        succ[u].append(v)
        indeg[v] += 1
    queue = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == n


def chromatic_polynomial(g):
    """Chromatic polynomial coefficients by deletion-contraction,
    low degree first."""
    if not g.edges:
        out = [0] * (g.n + 1)
        out[g.n] = 1
        return tuple(out)
    u, v = g.edges[0]
    deleted = Graph(g.n, g.edges[1:])
    # contract v into u, relabel down
    keep = [w for w in g.vertices() if w != v]
    relab = {w: i + 1 for i, w in enumerate(keep)}
    cedges = set()
    for a, b in g.edges[1:]:
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            cedges.add((min(relab[a2], relab[b2]), max(relab[a2], relab[b2])))
    contracted = Graph(g.n - 1, sorted(cedges))
    pd = chromatic_polynomial(deleted)
    pc = chromatic_polynomial(contracted)
    out = list(pd) + [0] * (len(pc) - len(pd))
    for i, c in enumerate(pc):
        out[i] -= c
    return tuple(out)


def source_components(g, oriented):
    """Partition of the vertices by repeated least-vertex reachability.

    Take the least unused vertex, flood everything reachable from it along
    the orientation through unused vertices, remove, repeat.  Returns the
    list of vertex sets in extraction order.
    """
    succ = [0] * (g.n + 1)
    for u, v in oriented:
        succ[u] |= 1 << (v - 1)
    unused = g.full_mask
    comps = []
    while unused:
        start = (unused & -unused).bit_length()
        comp = 1 << (start - 1)
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                v = low.bit_length()
                f ^= low
                nxt |= succ[v] & unused & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(set(mask_vertices(comp)))
        unused &= ~comp
    return comps


# ---------------------------------------------------------------------------
# natural unit-interval graphs

class UnitIntervalModel:
    """Interval bounds h with h[i-1] >= i, nondecreasing: vertex i is adjacent
    to every j with i < j <= h[i-1]."""

    __slots__ = ("n", "h")

    def __init__(self, n, h):
        h = tuple(h)
        if len(h) != n:
            raise ValueError("bounds length must equal n")
        for i, b in enumerate(h, start=1):
            if not (i <= b <= n):
                raise ValueError(f"bound h[{i}]={b} outside [{i}, {n}]")
        if any(h[i] > h[i + 1] for i in range(n - 1)):
            raise ValueError("bounds must be nondecreasing")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "h", h)

    def __setattr__(self, *a):
        raise AttributeError("UnitIntervalModel is immutable")

    def __repr__(self):
        return f"UnitIntervalModel(n={self.n}, h={list(self.h)})"


def model_to_json(m):
    return {"n": m.n, "bounds": list(m.h)}


def model_from_json(obj):
    if not isinstance(obj, dict) or "n" not in obj or "bounds" not in obj:
        raise ValueError("model json must have keys 'n' and 'bounds'")
    return UnitIntervalModel(int(obj["n"]), [int(b) for b in obj["bounds"]])


def unit_interval_graph(model):
    edges = [(i, j) for i in range(1, model.n + 1)
             for j in range(i + 1, model.h[i - 1] + 1)]
    return Graph(model.n, edges)


def natural_unit_interval_model(g):
    """The bounds model realizing g under its given labels, or None."""
    h = []
    for i in g.vertices():
        above = [j for j in mask_vertices(g.adj[i]) if j > i]
        hi = max(above) if above else i
        if above != list(range(i + 1, hi + 1)):
            return None
        h.append(hi)
    if any(h[i] > h[i + 1] for i in range(g.n - 1)):
        return None
    return UnitIntervalModel(g.n, h)


def has_induced_c4_or_claw(g):
    """True if some 4 vertices induce a 4-cycle or a claw."""
    for quad in itertools.combinations(g.vertices(), 4):
        sub, _ = induced_subgraph(g, mask_of(quad))
        deg = sorted(popcount(sub.adj[v]) for v in sub.vertices())
        if len(sub.edges) == 4 and deg == [2, 2, 2, 2]:
            return True  # induced C4
        if len(sub.edges) == 3 and deg == [1, 1, 1, 3]:
            return True  # induced claw
    return False
