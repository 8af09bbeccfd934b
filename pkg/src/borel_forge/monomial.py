"""Monomial ideals: Borel and lex ideals, Hilbert functions, saturation."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .combinat import (as_order, divides, lcm, monomials_of_degree, star,
                       _check_equidegree)
from .errors import InadmissibleHilbertFunction, Unstabilized, WidthMismatch


def minimalize(gens: Iterable[Sequence[int]]) -> frozenset:
    """Drop every exponent divisible by another one."""
    gens = sorted(set(tuple(g) for g in gens), key=sum)
    kept: list[tuple] = []
    for g in gens:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return frozenset(kept)


class MonomialIdeal:
    """A monomial ideal of K[X_1..X_n] stored by its minimal generators."""

    __slots__ = ("n", "gens", "_hash")

    def __init__(self, n: int, gens: Iterable[Sequence[int]] = ()):
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != n:
                raise WidthMismatch(f"generator {g} does not have width {n}")
            if any(x < 0 for x in g):
                raise ValueError(f"negative exponent in {g}")
        self.n = n
        self.gens = minimalize(gens)
        self._hash = None

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, [(0,) * n])

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.gens))
        return self._hash

    def __repr__(self):
        return f"MonomialIdeal({self.n}, {self.sorted_gens()})"

    def __contains__(self, a) -> bool:
        return any(divides(g, a) for g in self.gens)

    def sorted_gens(self, order="rlex") -> list[tuple]:
        """Minimal generators, descending in the given order."""
        key = as_order(order, self.n).key
        return sorted(self.gens, key=key, reverse=True)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return (0,) * self.n in self.gens

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def degree_part(self, d: int) -> frozenset:
        return frozenset(a for a in monomials_of_degree(self.n, d) if a in self)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(g in self for g in other.gens)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.n, self.gens | other.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.n, [lcm(g, h) for g in self.gens for h in other.gens])

    def colon(self, m: Sequence[int]) -> "MonomialIdeal":
        """(I : X^m)."""
        return MonomialIdeal(self.n, [tuple(max(x - y, 0) for x, y in zip(g, m))
                                      for g in self.gens])

    def colon_var_power(self, j: int) -> "MonomialIdeal":
        """(I : X_j^infinity), j 0-based."""
        return MonomialIdeal(self.n, [g[:j] + (0,) + g[j + 1:] for g in self.gens])

    def restrict(self, i: int) -> "MonomialIdeal":
        """I intersected with K[X_1..X_i], as an ideal of that ring."""
        return MonomialIdeal(i, [g[:i] for g in self.gens if not any(g[i:])])

    def extend(self, n: int) -> "MonomialIdeal":
        return MonomialIdeal(n, [g + (0,) * (n - self.n) for g in self.gens])

    def count_in_degree(self, d: int) -> int:
        """Number of monomials of degree d lying in the ideal."""
        return _count_from_numerator(hilbert_numerator(self), self.n, d)


# -- Hilbert series ----------------------------------------------------------

def hilbert_numerator(I: MonomialIdeal) -> dict[int, int]:
    """N(t) with HS(S/I) = N(t) / (1-t)^n, as {power: coefficient}."""
    return _numerator(tuple(sorted(I.gens)), I.n)


def degree_counter(I: MonomialIdeal):
    """d -> number of monomials of degree d in I, sharing one numerator."""
    num = hilbert_numerator(I)
    n = I.n
    return lambda d: _count_from_numerator(num, n, d)


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict[int, int] = {}
    for i, a in p.items():
        for j, b in q.items():
            out[i + j] = out.get(i + j, 0) + a * b
    return {k: v for k, v in out.items() if v}


def _numerator(gens: tuple, n: int) -> dict[int, int]:
    if not gens:
        return {0: 1}
    used = [0] * n
    for g in gens:
        for i, x in enumerate(g):
            if x:
                used[i] += 1
    if all(u <= 1 for u in used):
        out = {0: 1}
        for g in gens:
            if not any(g):
                return {}
            out = _poly_mul(out, {0: 1, sum(g): -1})
        return out
    # pivot on a power of the busiest variable that is not already in I
    i = max(range(n), key=lambda k: used[k])
    mixed = sorted(g[i] for g in gens if g[i] and sum(g) != g[i])
    e = mixed[len(mixed) // 2]
    p = tuple(e if k == i else 0 for k in range(n))
    plus = minimalize(gens + (p,))
    colon = minimalize(tuple(max(x - y, 0) for x, y in zip(g, p)) for g in gens)
    left = _numerator(tuple(sorted(plus)), n)
    right = _numerator(tuple(sorted(colon)), n)
    out = dict(left)
    for k, v in right.items():
        out[k + e] = out.get(k + e, 0) + v
    return {k: v for k, v in out.items() if v}


def _count_from_numerator(num: Mapping[int, int], n: int, d: int) -> int:
    quotient = sum(c * comb(d - k + n - 1, n - 1) for k, c in num.items() if k <= d)
    return comb(d + n - 1, n - 1) - quotient


# -- Hilbert data and polynomials ---------------------------------------------

class QPolynomial(tuple):
    """Rational polynomial in t, coefficients from the constant term upwards."""

    def __new__(cls, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return super().__new__(cls, c)

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self):
            acc = acc * t + c
        return acc

    @property
    def degree(self) -> int:
        return len(self) - 1  # -1 for the zero polynomial

    def __sub__(self, other):
        m = max(len(self), len(other))
        a = list(self) + [0] * (m - len(self))
        b = list(other) + [0] * (m - len(other))
        return QPolynomial(x - y for x, y in zip(a, b))

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for k in range(len(self) - 1, -1, -1):
            c = self[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            c = abs(c)
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = f"{c} {mono}"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"QPolynomial({str(self)!r})"


def interpolate(points: Sequence[tuple[int, int]]) -> QPolynomial:
    """The polynomial of degree < len(points) through the given (t, value) pairs."""
    result = [Fraction(0)] * len(points)
    for i, (ti, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (tj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= tj * basis[k + 1]
            denom *= ti - tj
        for k, c in enumerate(basis):
            result[k] += yi * c / denom
    return QPolynomial(result)


@dataclass
class HilbertData:
    """Hilbert function of an ideal up to a degree bound.

    ``values[d]`` counts the monomials (or dimension) of the ideal in degree d.
    """

    n: int
    values: dict = field(default_factory=dict)
    polynomial: QPolynomial | None = None
    onset: int | None = None

    def __call__(self, d: int) -> int:
        return self.values[d]

    @property
    def bound(self) -> int:
        return max(self.values, default=-1)

    def quotient(self) -> dict:
        """Hilbert function of S/I on the same degrees."""
        return {d: comb(d + self.n - 1, self.n - 1) - v for d, v in self.values.items()}

    def lines(self) -> list[str]:
        out = [f"{d}: {v}" for d, v in sorted(self.values.items())]
        if self.polynomial is not None:
            out.append(f"poly: {self.polynomial}")
        return out


def default_bound(I: MonomialIdeal) -> int:
    return max(10, I.max_degree() + I.n + 6)


def hilbert_function(I: MonomialIdeal, up_to: int | None = None,
                     with_polynomial: bool = False) -> HilbertData:
    if up_to is None:
        up_to = default_bound(I)
    num = hilbert_numerator(I)
    data = HilbertData(I.n, {d: _count_from_numerator(num, I.n, d) for d in range(up_to + 1)})
    if with_polynomial:
        data.polynomial, data.onset = _stabilize(num, I)
    return data


def hilbert_function_bruteforce(I: MonomialIdeal, up_to: int) -> dict:
    """Count monomials degree by degree; slow reference implementation."""
    return {d: sum(1 for a in monomials_of_degree(I.n, d) if a in I)
            for d in range(up_to + 1)}


def _stabilize(num, I: MonomialIdeal, window: int = 3, retries: int = 50):
    n = I.n
    D = I.max_degree() + n + 3
    for _ in range(retries):
        pts = [(t, _count_from_numerator(num, n, t)) for t in range(D, D + n)]
        p = interpolate(pts)
        if all(p(t) == _count_from_numerator(num, n, t) for t in range(D + n, D + n + window)):
            return p, D
        D += 1
    raise Unstabilized(f"Hilbert function did not stabilize after {retries} attempts")


def hilbert_polynomial(I: MonomialIdeal) -> QPolynomial:
    """The polynomial eventually agreeing with the ideal's Hilbert function."""
    return _stabilize(hilbert_numerator(I), I)[0]


# -- Borel, lex and saturation -------------------------------------------------

def is_borel_ideal(I: MonomialIdeal, up_to: int | None = None) -> bool:
    """Check X_i/X_j * X^a in I for each minimal generator a and i < j.

    ``up_to`` is accepted for interface symmetry; the generator test decides
    every degree at once.
    """
    for g in I.gens:
        for j in range(1, I.n):
            if g[j] == 0:
                continue
            for i in range(j):
                up = list(g)
                up[j] -= 1
                up[i] += 1
                if tuple(up) not in I:
                    return False
    return True


def is_lex_segment(A: Iterable[Sequence[int]]) -> bool:
    A = frozenset(tuple(a) for a in A)
    shape = _check_equidegree(A)
    if shape is None:
        return True
    n, d = shape
    seen_gap = False
    for a in monomials_of_degree(n, d):
        if a in A:
            if seen_gap:
                return False
        else:
            seen_gap = True
    return True


def lex_ideal_from_hilbert(h: HilbertData, up_to: int | None = None) -> MonomialIdeal:
    """The lex ideal whose degree-d piece is the first h(d) monomials in hlex."""
    n = h.n
    if up_to is None:
        up_to = h.bound
    pieces = []
    for d in range(up_to + 1):
        count = h.values.get(d, 0)
        total = comb(d + n - 1, n - 1)
        if not 0 <= count <= total:
            raise InadmissibleHilbertFunction(f"h({d}) = {count} outside [0, {total}]")
        pieces.append(frozenset(a for _, a in zip(range(count), monomials_of_degree(n, d))))
    for d in range(up_to):
        for a in pieces[d]:
            for i in range(n):
                up = a[:i] + (a[i] + 1,) + a[i + 1:]
                if up not in pieces[d + 1]:
                    raise InadmissibleHilbertFunction(
                        f"lex segments of degrees {d} and {d + 1} do not form an ideal")
    return MonomialIdeal(n, [a for piece in pieces for a in piece])


def saturate_monomial(I: MonomialIdeal) -> MonomialIdeal:
    """(I : S_+^infinity).

    Borel ideals only need the last variable stripped; in general this is the
    intersection of the colons by each variable's infinite power.
    """
    if is_borel_ideal(I):
        return MonomialIdeal(I.n, [star(g) for g in I.gens])
    return saturate_monomial_general(I)


def saturate_monomial_general(I: MonomialIdeal) -> MonomialIdeal:
    if I.is_zero:
        return I
    out = I.colon_var_power(0)
    for j in range(1, I.n):
        out = out.intersect(I.colon_var_power(j))
    return out
