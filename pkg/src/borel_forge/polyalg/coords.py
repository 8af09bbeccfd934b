"""Linear coordinate changes X_j -> sum_i g_ij X_i by unipotent matrices."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import WidthMismatch
from .polynomial import Polynomial

DEFAULT_ENTROPY_BOUND = 10**6


@dataclass(frozen=True)
class UnipotentChange:
    """Upper triangular matrix with unit diagonal, acting on K[X_1..X_n].

    ``seed`` and ``draw`` record where a random matrix came from.
    """

    matrix: tuple
    seed: int | None = None
    draw: int | None = None

    def __post_init__(self):
        m = self.matrix
        n = len(m)
        for i in range(n):
            if len(m[i]) != n:
                raise ValueError("matrix must be square")
            if m[i][i] != 1:
                raise ValueError("diagonal entries must be 1")
            if any(m[i][j] != 0 for j in range(i)):
                raise ValueError("matrix must be upper triangular")

    @property
    def n(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, n: int) -> "UnipotentChange":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "UnipotentChange":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    def images(self) -> list[Polynomial]:
        n = self.n
        return [Polynomial(n, [(tuple(1 if k == i else 0 for k in range(n)), self.matrix[i][j])
                               for i in range(j + 1)])
                for j in range(n)]

    def apply(self, f: Polynomial) -> Polynomial:
        if f.n != self.n:
            raise WidthMismatch(f"change has width {self.n}, polynomial {f.n}")
        return f.substitute(self.images())

    def inverse(self) -> "UnipotentChange":
        n = self.n
        g = self.matrix
        inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        # back substitution column by column
        for j in range(n):
            for i in range(j - 1, -1, -1):
                inv[i][j] = -sum((Fraction(g[i][k]) * inv[k][j] for k in range(i + 1, j + 1)),
                                 Fraction(0))
        return UnipotentChange(tuple(tuple(row) for row in inv), self.seed, self.draw)

    def __matmul__(self, other: "UnipotentChange") -> "UnipotentChange":
        n = self.n
        prod = tuple(tuple(sum((Fraction(self.matrix[i][k]) * other.matrix[k][j]
                                for k in range(n)), Fraction(0))
                           for j in range(n)) for i in range(n))
        return UnipotentChange(prod)


def random_unipotent(n: int, seed: int, draw: int = 0,
                     entropy_bound: int = DEFAULT_ENTROPY_BOUND) -> UnipotentChange:
    """Seeded unipotent matrix with entries above the diagonal in [1, entropy_bound]."""
    rng = random.Random(f"unipotent/{n}/{seed}/{draw}")
    rows = [[1 if i == j else (rng.randint(1, entropy_bound) if j > i else 0)
             for j in range(n)] for i in range(n)]
    return UnipotentChange(tuple(tuple(r) for r in rows), seed, draw)
