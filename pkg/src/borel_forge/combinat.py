"""Exponent vectors, term orders and the Borel order.

Exponents are plain tuples of ints; index 0 is the largest variable X_1.
Upper triangular matrices are tuples of row tuples.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import BudgetExceeded, DegreeMismatch, NotBorelComparable, WidthMismatch

Exponent = tuple  # tuple[int, ...]
Matrix = tuple  # tuple[tuple[int, ...], ...]

DEFAULT_ENUM_BUDGET = 10**6


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


# -- exponent arithmetic ----------------------------------------------------

def unit(n: int, i: int) -> Exponent:
    """The standard vector e_i (0-based index)."""
    return tuple(1 if k == i else 0 for k in range(n))


def add(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff X^a divides X^b."""
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(min(x, y) for x, y in zip(a, b))


def monomials_of_degree(n: int, d: int) -> Iterator[Exponent]:
    """All of N^n_d, in descending hlex order."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


class ExponentTransforms(NamedTuple):
    m: int
    star: Exponent
    plus: Exponent
    minus: Exponent


def last_index(a: Sequence[int]) -> int:
    """m(a): 1-based position of the last nonzero entry, 1 for the zero vector."""
    for i in range(len(a) - 1, -1, -1):
        if a[i] != 0:
            return i + 1
    return 1


def star(a: Sequence[int]) -> Exponent:
    return tuple(a[:-1]) + (0,)


def exponent_transforms(a: Sequence[int]) -> ExponentTransforms:
    return ExponentTransforms(
        m=last_index(a),
        star=star(a),
        plus=tuple(max(x, 0) for x in a),
        minus=tuple(-min(x, 0) for x in a),
    )


# -- term orders --------------------------------------------------------------

@dataclass(frozen=True)
class TermOrder:
    """A monomial order on K[X_1..X_n] with X_1 > ... > X_n.

    ``kind`` is ``"hlex"``, ``"rlex"`` or ``"elim"``.  The elimination order
    compares the first ``block`` variables by degree and rlex, then the
    remaining ones by degree and rlex; it is only used internally.
    """

    kind: str
    n: int
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("hlex", "rlex", "elim"):
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.n < 1:
            raise ValueError("ring width must be positive")
        if self.kind == "elim" and not 0 < self.block < self.n:
            raise ValueError("elimination block must split the variables")

    @classmethod
    def hlex(cls, n: int) -> "TermOrder":
        return cls("hlex", n)

    @classmethod
    def rlex(cls, n: int) -> "TermOrder":
        return cls("rlex", n)

    @classmethod
    def elim(cls, n: int, block: int) -> "TermOrder":
        return cls("elim", n, block)

    @property
    def degree_compatible(self) -> bool:
        return self.kind != "elim"

    def key(self, a: Sequence[int]) -> tuple:
        """Sort key: ``key(u) > key(v)`` iff ``u > v``."""
        return _order_key(self.kind, self.block, tuple(a))

    def compare(self, u: Sequence[int], v: Sequence[int]) -> Ordering:
        if len(u) != self.n or len(v) != self.n:
            raise WidthMismatch(f"expected width {self.n}, got {len(u)} and {len(v)}")
        ku, kv = self.key(u), self.key(v)
        if ku == kv:
            return Ordering.EQ
        return Ordering.GT if ku > kv else Ordering.LT

    def __str__(self):
        return self.kind if self.kind != "elim" else f"elim({self.block})"


@lru_cache(maxsize=1 << 18)
def _order_key(kind: str, block: int, a: tuple) -> tuple:
    if kind == "rlex":
        return (sum(a),) + tuple(-x for x in reversed(a))
    if kind == "hlex":
        return (sum(a),) + a
    head, tail = a[:block], a[block:]
    return ((sum(head),) + tuple(-x for x in reversed(head))
            + (sum(tail),) + tuple(-x for x in reversed(tail)))


def as_order(order, n: int) -> TermOrder:
    """Accept a TermOrder or one of the names ``"rlex"``/``"hlex"``."""
    if isinstance(order, TermOrder):
        if order.n != n:
            raise WidthMismatch(f"order is for width {order.n}, ring has width {n}")
        return order
    return TermOrder(str(order), n)


def compare(order: TermOrder, u: Sequence[int], v: Sequence[int]) -> Ordering:
    if len(u) != len(v):
        raise WidthMismatch(f"widths differ: {len(u)} vs {len(v)}")
    return as_order(order, len(u)).compare(u, v)


# -- Borel order --------------------------------------------------------------

def _check_pair(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise WidthMismatch(f"widths differ: {len(a)} vs {len(b)}")
    if sum(a) != sum(b):
        raise DegreeMismatch(f"degrees differ: {sum(a)} vs {sum(b)}")


def prefix_differences(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """alpha_k = sum_{i<=k} (a_i - b_i) for k = 1..n-1."""
    out, s = [], 0
    for x, y in zip(a[:-1], b[:-1]):
        s += x - y
        out.append(s)
    return out


def borel_ge(a: Sequence[int], b: Sequence[int]) -> bool:
    """a >=Bor b for a, b of equal degree, decided by prefix sums."""
    _check_pair(a, b)
    return all(s >= 0 for s in prefix_differences(a, b))


def borel_witness(a: Sequence[int], b: Sequence[int]) -> Matrix:
    """An upper triangular M >= 0 with row sums a and column sums b.

    Starts from the bidiagonal matrix built from the prefix sums and repairs
    negative diagonal entries one unit at a time.
    """
    _check_pair(a, b)
    alpha = prefix_differences(a, b)
    if any(s < 0 for s in alpha):
        raise NotBorelComparable(f"{tuple(a)} is not Borel-greater than {tuple(b)}")
    n = len(a)
    alpha = [0] + alpha + [0]  # alpha[k] for k = 0..n, 1-based as in the construction
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = b[i] - alpha[i]
        if i + 1 < n:
            M[i][i + 1] = alpha[i + 1]
    while True:
        l = next((j for j in range(n) if M[j][j] < 0), None)
        if l is None:
            break
        p = next(i for i in range(l) if M[i][l] > 0)
        q = next(j for j in range(l + 1, n) if M[l][j] > 0)
        M[l][l] += 1
        M[p][q] += 1
        M[p][l] -= 1
        M[l][q] -= 1
    return tuple(tuple(row) for row in M)


def row_sums(M: Matrix) -> Exponent:
    return tuple(sum(row) for row in M)


def col_sums(M: Matrix) -> Exponent:
    return tuple(sum(col) for col in zip(*M))


def in_U(M: Matrix, a: Sequence[int], b: Sequence[int]) -> bool:
    """Membership in U(a,b): upper triangular, nonnegative, rows a, columns b."""
    n = len(a)
    if len(M) != n or any(len(row) != n for row in M):
        return False
    for i in range(n):
        for j in range(n):
            if M[i][j] < 0 or (j < i and M[i][j] != 0):
                return False
    return row_sums(M) == tuple(a) and col_sums(M) == tuple(b)


def enumerate_U(a: Sequence[int], b: Sequence[int],
                budget: int = DEFAULT_ENUM_BUDGET) -> list[Matrix]:
    """Every matrix in U(a,b), by exhaustive column-wise search.

    ``budget`` bounds the number of search nodes visited.
    """
    _check_pair(a, b)
    n = len(a)
    M = [[0] * n for _ in range(n)]
    rem = list(a)
    out: list[Matrix] = []
    visited = 0

    def fill(j: int, i: int, left: int):
        # column j, choosing M[i][j] for rows i < j; the diagonal takes the rest
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceeded(f"U(a,b) enumeration exceeded {budget} nodes")
        if i == j:
            if left > rem[j]:
                return
            M[j][j] = left
            rem[j] -= left
            if j + 1 == n:
                if all(r == 0 for r in rem):
                    out.append(tuple(tuple(row) for row in M))
            else:
                fill(j + 1, 0, b[j + 1])
            rem[j] += left
            M[j][j] = 0
            return
        for v in range(min(rem[i], left), -1, -1):
            M[i][j] = v
            rem[i] -= v
            fill(j, i + 1, left - v)
            rem[i] += v
        M[i][j] = 0

    fill(0, 0, b[0])
    return out


def _check_equidegree(A: Iterable[Sequence[int]]) -> tuple[int, int] | None:
    A = list(A)
    if not A:
        return None
    n, d = len(A[0]), sum(A[0])
    for a in A:
        if len(a) != n:
            raise WidthMismatch("exponents of different widths")
        if sum(a) != d:
            raise DegreeMismatch("set mixes degrees")
    return n, d


def borel_closure(D: Iterable[Sequence[int]]) -> frozenset:
    """The smallest Borel set containing the equidegree set D."""
    D = [tuple(x) for x in D]
    shape = _check_equidegree(D)
    if shape is None:
        return frozenset()
    n, d = shape
    return frozenset(a for a in monomials_of_degree(n, d)
                     if any(borel_ge(a, x) for x in D))


def is_borel_set(A: Iterable[Sequence[int]]) -> bool:
    """True iff A is closed under the moves e_k - e_{k+1} (hence upward closed)."""
    A = frozenset(tuple(x) for x in A)
    if _check_equidegree(A) is None:
        return True
    for a in A:
        for k in range(len(a) - 1):
            if a[k + 1] > 0:
                up = list(a)
                up[k] += 1
                up[k + 1] -= 1
                if tuple(up) not in A:
                    return False
    return True
