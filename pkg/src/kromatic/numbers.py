"""Exact scalar arithmetic: partitions, arithmetic functions, q-polynomials.

Partitions are plain tuples of ints sorted nonincreasing; compositions are
plain tuples.  All arithmetic is exact (int / fractions.Fraction / QPoly),
never floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
import itertools


# ---------------------------------------------------------------------------
# partitions

def is_partition(lam):
    return all(isinstance(p, int) and p > 0 for p in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def partitions_of(n, max_part=None):
    """Yield partitions of n in descending lex order: (n), ..., (1,..,1)."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_up_to(n):
    """All partitions of 0..n, graded by size then descending lex."""
    for d in range(n + 1):
        yield from partitions_of(d)


def partition_sort_key(lam):
    """Sort key giving graded order, descending lex within each degree."""
    return (sum(lam), tuple(-p for p in lam))


def multiplicities(lam):
    """Part-value -> multiplicity map of a partition."""
    m = {}
    for p in lam:
        m[p] = m.get(p, 0) + 1
    return m


def z_lambda(lam):
    """Order of the centralizer of a permutation of cycle type lam."""
    z = 1
    for value, count in multiplicities(lam).items():
        z *= value ** count
        for i in range(1, count + 1):
            z *= i
    return z


def scale_and_repeat(lam, d, n):
    """Partition with part d[i]*lam[i] repeated n[i] times, sorted."""
    parts = []
    for p, di, ni in zip(lam, d, n):
        parts.extend([di * p] * ni)
    return tuple(sorted(parts, reverse=True))


# ---------------------------------------------------------------------------
# arithmetic functions

def divisors(n):
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def mobius(n):
    if n < 1:
        raise ValueError("mobius undefined for n < 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if n > 1:
        result = -result
    return result


def mu_hat(n):
    """Dirichlet inverse of d -> (-1)**(d+1).

    Equals mobius(n) for odd n; for n = 2**j * m with m odd and j >= 1 it
    equals 2**(j-1) * mobius(m).
    """
    if n < 1:
        raise ValueError("mu_hat undefined for n < 1")
    j = 0
    while n % 2 == 0:
        n //= 2
        j += 1
    if j == 0:
        return mobius(n)
    return (1 << (j - 1)) * mobius(n)


def binomial(n, k):
    if k < 0:
        return 0
    return comb(n, k)


def multichoose(n, k):
    """Multisets of size k from n kinds: C(n+k-1, k)."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n <= 0:
        return 0
    return comb(n + k - 1, k)


# ---------------------------------------------------------------------------
# q-polynomials

def _norm_scalar(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


class QPoly:
    """Polynomial in q with exact (int or Fraction) coefficients.

    Immutable; coefficients stored low degree first with no trailing zeros.
    Supports +, -, * against QPoly and plain scalars, evaluation, and exact
    division (raises if the division does not come out even).
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        c = [_norm_scalar(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "c", tuple(c))

    def __setattr__(self, *a):
        raise AttributeError("QPoly is immutable")

    @staticmethod
    def q(power=1):
        return QPoly((0,) * power + (1,))

    @property
    def degree(self):
        return len(self.c) - 1  # -1 for the zero polynomial

    def __bool__(self):
        return bool(self.c)

    def __hash__(self):
        return hash(self.c)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c == QPoly(other).c
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly(tuple(-x for x in self.c))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return QPoly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QPoly()
            return QPoly(tuple(x * other for x in self.c))
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self.c or not other.c:
            return QPoly()
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __call__(self, value):
        acc = 0
        for x in reversed(self.c):
            acc = acc * value + x
        return _norm_scalar(acc)

    def divexact(self, other):
        """Exact polynomial division; raises ValueError on nonzero remainder."""
        if isinstance(other, (int, Fraction)):
            other = QPoly(other)
        if not other.c:
            raise ZeroDivisionError("division of QPoly by zero")
        if not self.c:
            return QPoly()
        rem = list(self.c)
        d = other.c
        if len(rem) < len(d):
            raise ValueError(f"inexact QPoly division: {self!r} by {other!r}")
        quot = [0] * (len(rem) - len(d) + 1)
        lead = d[-1]
        for i in range(len(quot) - 1, -1, -1):
            coef = Fraction(rem[i + len(d) - 1]) / lead
            quot[i] = coef
            for j, y in enumerate(d):
                rem[i + j] -= coef * y
        if any(rem):
            raise ValueError(f"inexact QPoly division: {self!r} by {other!r}")
        return QPoly(quot)

    def coeff(self, power):
        if 0 <= power < len(self.c):
            return self.c[power]
        return 0

    def to_list(self):
        return list(self.c)

    def __repr__(self):
        if not self.c:
            return "QPoly(0)"
        terms = []
        for i, x in enumerate(self.c):
            if not x:
                continue
            if i == 0:
                terms.append(str(x))
            elif i == 1:
                terms.append(f"{x}*q" if x != 1 else "q")
            else:
                terms.append(f"{x}*q^{i}" if x != 1 else f"q^{i}")
        return "QPoly(" + " + ".join(terms) + ")"


def q_int(n):
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return QPoly((1,) * n)


def q_factorial(alpha):
    """[alpha]_q! = product over parts a of [1]_q [2]_q ... [a]_q."""
    acc = QPoly(1)
    for a in alpha:
        for j in range(1, a + 1):
            acc = acc * q_int(j)
    return acc


# ---------------------------------------------------------------------------
# composition helpers

def compositions(length, total):
    """All tuples of `length` positive ints summing to exactly `total`."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - length + 2):
        for rest in compositions(length - 1, total - first):
            yield (first,) + rest


def compositions_up_to(length, max_total):
    for total in range(length, max_total + 1):
        yield from compositions(length, total)


def iter_product(*ranges):
    return itertools.product(*ranges)
