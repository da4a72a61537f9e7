"""Heaps of pieces over a graph: traces, pyramids, rotation, Lyndon heaps.

A heap over graph G is an equivalence class of words on the vertex alphabet,
where two neighbouring letters may be swapped iff their vertices are distinct
and non-adjacent.  Each class is represented by its canonical word: the
lexicographically largest member, computed greedily by always emitting the
largest-vertex piece among those with no unemitted earlier dependency.
Pieces are referred to by their index (0-based) in the canonical word.
"""
from __future__ import annotations

import itertools

from .graphs import mask_of
from .numbers import divisors, mobius


def _dependent(g, a, b):
    return a == b or g.adjacent(a, b)


def canonical_word_with_perm(g, word):
    """Canonical (lex-max) word of the trace of `word`, plus the permutation
    perm with perm[k] = index in `word` of the piece at canonical slot k."""
    n = len(word)
    preds = [[] for _ in range(n)]
    succs = [[] for _ in range(n)]
    blockers = [0] * n
    for i in range(n):
        for j in range(i):
            if _dependent(g, word[j], word[i]):
                preds[i].append(j)
                succs[j].append(i)
                blockers[i] += 1
    avail = {i for i in range(n) if blockers[i] == 0}
    out = []
    perm = []
    for _ in range(n):
        best = max(avail, key=lambda i: word[i])
        avail.remove(best)
        out.append(word[best])
        perm.append(best)
        for j in succs[best]:
            blockers[j] -= 1
            if blockers[j] == 0:
                avail.add(j)
    return tuple(out), tuple(perm)


def canonical_word(g, word):
    return canonical_word_with_perm(g, word)[0]


class Heap:
    """A trace over a host graph, held in canonical-word form."""

    __slots__ = ("graph", "word")

    def __init__(self, graph, word):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "word", tuple(word))

    def __setattr__(self, *a):
        raise AttributeError("Heap is immutable")

    @property
    def size(self):
        return len(self.word)

    @property
    def type(self):
        """Multiplicity vector alpha: alpha[v-1] = copies of vertex v."""
        alpha = [0] * self.graph.n
        for v in self.word:
            alpha[v - 1] += 1
        return tuple(alpha)

    @property
    def support_mask(self):
        return mask_of(set(self.word))

    def __eq__(self, other):
        return (isinstance(other, Heap)
                and self.graph == other.graph and self.word == other.word)

    def __hash__(self):
        return hash((self.graph.n, self.graph.edges, self.word))

    def __lt__(self, other):
        return self.word < other.word

    def __repr__(self):
        return f"Heap[{word_str(self.word)}]"


def word_str(word):
    if all(v < 10 for v in word):
        return "".join(str(v) for v in word)
    return ",".join(str(v) for v in word)


def heap_from_word(g, word):
    word = tuple(word)
    for v in word:
        if not (1 <= v <= g.n):
            raise ValueError(f"letter {v} outside vertex range 1..{g.n}")
    return Heap(g, canonical_word(g, word))


def compose(h1, h2):
    """Stack h2 above h1 (pieces of h2 come after all pieces of h1)."""
    if h1.graph != h2.graph:
        raise ValueError("heaps live on different graphs")
    return Heap(h1.graph, canonical_word(h1.graph, h1.word + h2.word))


def compose_all(heaps):
    it = iter(heaps)
    first = next(it)
    word = first.word
    for h in it:
        if h.graph != first.graph:
            raise ValueError("heaps live on different graphs")
        word = word + h.word
    return Heap(first.graph, canonical_word(first.graph, word))


def sources(h):
    """Piece indices with no dependent piece before them."""
    g, w = h.graph, h.word
    out = []
    for i in range(len(w)):
        if not any(_dependent(g, w[j], w[i]) for j in range(i)):
            out.append(i)
    return out


def is_pyramid(h):
    return h.size >= 1 and len(sources(h)) == 1


def rotate(h, p):
    """One rotation step at piece p: split off the upward closure V of p and
    put it below the rest.  Returns (rotated heap, new index of p)."""
    g, w = h.graph, h.word
    if not (0 <= p < len(w)):
        raise IndexError("piece index out of range")
    reach = {p}
    for j in range(p + 1, len(w)):
        if any(_dependent(g, w[i], w[j]) for i in reach):
            reach.add(j)
    upper = [i for i in range(len(w)) if i in reach]
    lower = [i for i in range(len(w)) if i not in reach]
    new_word = tuple(w[i] for i in upper) + tuple(w[i] for i in lower)
    canon, perm = canonical_word_with_perm(g, new_word)
    return Heap(g, canon), perm.index(0)


def rotate_to_source(h, p):
    """Iterate rotation at p until p is the unique bottom piece; returns the
    resulting pyramid (precondition: h is a pyramid)."""
    cur, cp = h, p
    for _ in range(4 * h.size * h.size + 8):
        if is_pyramid(cur) and sources(cur) == [cp]:
            return cur
        cur, cp = rotate(cur, cp)
    raise RuntimeError(f"rotation did not stabilize for {h!r} at piece {p}")


def rotation_class(h):
    """The set of pyramids reachable by rotating each piece of h to the
    bottom, sorted by canonical word (precondition: h is a pyramid)."""
    if not is_pyramid(h):
        raise ValueError("rotation class is defined for pyramids")
    seen = {}
    for p in range(h.size):
        r = rotate_to_source(h, p)
        seen[r.word] = r
    return [seen[w] for w in sorted(seen)]


def is_aperiodic(h):
    """True iff h is not a d-fold power of a smaller heap for any d >= 2."""
    n = h.size
    for d in divisors(n):
        if d == 1 or n % d:
            continue
        base = n // d
        alpha = h.type
        if any(a % d for a in alpha):
            continue
        target_type = tuple(a // d for a in alpha)
        for k in enumerate_heaps(h.graph, base):
            if k.type != target_type:
                continue
            if canonical_word(h.graph, k.word * d) == h.word:
                return False
    return True


def is_lyndon(h):
    """Aperiodic pyramid that is the lex-least member of its rotation class."""
    if not is_pyramid(h):
        return False
    cls = rotation_class(h)
    if len(cls) != h.size:
        return False  # periodic: rotation class collapses
    return h.word == cls[0].word


_heap_cache = {}


def enumerate_heaps(g, n):
    """All heaps of size n on g, as canonical words extended letter by letter
    (every prefix of a canonical word is canonical)."""
    key = (g, n)
    if key in _heap_cache:
        return _heap_cache[key]
    if n == 0:
        result = (Heap(g, ()),)
    else:
        result = []
        for h in enumerate_heaps(g, n - 1):
            for v in g.vertices():
                cand = h.word + (v,)
                if canonical_word(g, cand) == cand:
                    result.append(Heap(g, cand))
        result = tuple(sorted(result, key=lambda x: x.word))
    _heap_cache[key] = result
    return result


def enumerate_pyramids(g, n):
    return tuple(h for h in enumerate_heaps(g, n) if is_pyramid(h))


_lyndon_cache = {}


def enumerate_lyndon(g, n):
    key = (g, n)
    if key not in _lyndon_cache:
        _lyndon_cache[key] = tuple(
            h for h in enumerate_pyramids(g, n) if is_lyndon(h))
    return _lyndon_cache[key]


def lyndon_count(g, n, support=None):
    """Number of Lyndon heaps of size n; if support is a bitmask, only heaps
    whose pieces all lie inside it are counted."""
    if support is None:
        return len(enumerate_lyndon(g, n))
    return sum(1 for h in enumerate_lyndon(g, n)
               if h.support_mask & ~support == 0)


def _downward_closed_subsets(h, size):
    """Piece index sets of the given size closed under dependency
    predecessors."""
    g, w = h.graph, h.word
    n = len(w)
    preds = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i):
            if _dependent(g, w[j], w[i]):
                preds[i].add(j)
    for subset in itertools.combinations(range(n), size):
        s = set(subset)
        if all(preds[i] <= s for i in s):
            yield subset


def left_divide(h, l):
    """All heaps k with h = l o k (usually zero or one)."""
    out = []
    seen = set()
    for subset in _downward_closed_subsets(h, l.size):
        s = set(subset)
        lower = tuple(h.word[i] for i in subset)
        upper = tuple(h.word[i] for i in range(h.size) if i not in s)
        if canonical_word(h.graph, lower) == l.word:
            k = Heap(h.graph, canonical_word(h.graph, upper))
            if k.word not in seen:
                # confirm the factorization reassembles h
                if canonical_word(h.graph, l.word + k.word) == h.word:
                    seen.add(k.word)
                    out.append(k)
    return out


def lyndon_factorize(h):
    """The unique factorization of h into Lyndon heaps L1 o ... o Lk with
    canonical words nonincreasing lexicographically."""
    g = h.graph
    lyndon_pool = []
    for n in range(1, h.size + 1):
        lyndon_pool.extend(enumerate_lyndon(g, n))

    results = []

    def search(rest, bound, acc):
        if rest.size == 0:
            results.append(list(acc))
            return
        for l in lyndon_pool:
            if l.size > rest.size:
                continue
            if bound is not None and l.word > bound:
                continue
            for k in left_divide(rest, l):
                search(k, l.word, acc + [l])

    search(h, None, [])
    if len(results) != 1:
        raise RuntimeError(
            f"expected exactly one nonincreasing Lyndon factorization of "
            f"{h!r}, found {len(results)}")
    return results[0]


def ascent_count(h):
    """Pairs of pieces (a, b) with a before b in the canonical word, vertices
    adjacent in the host graph, and vertex(a) < vertex(b)."""
    g, w = h.graph, h.word
    total = 0
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] < w[j] and g.adjacent(w[i], w[j]):
                total += 1
    return total


def heap_count_identity_defect(g, max_n):
    """Coefficients of (sum_n #Heaps(n) t^n) * I_G(-t) - 1 up to degree
    max_n; all zero when the counting identity holds."""
    from .graphs import independence_polynomial
    ind = independence_polynomial(g)
    counts = [len(enumerate_heaps(g, n)) for n in range(max_n + 1)]
    out = []
    for n in range(max_n + 1):
        acc = 0
        for k, c in enumerate(ind):
            if k <= n:
                acc += counts[n - k] * c * (-1) ** k
        out.append(acc - (1 if n == 0 else 0))
    return out


def lyndon_mobius_check(g, n):
    """Both sides of k*#Lyndon(k) = sum_{d | k} mobius(k/d) * #Pyramids(d),
    for k = n."""
    lhs = n * len(enumerate_lyndon(g, n))
    rhs = sum(mobius(n // d) * len(enumerate_pyramids(g, d))
              for d in divisors(n))
    return lhs, rhs
