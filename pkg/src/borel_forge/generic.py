"""Generic coordinates, generic initial ideals and the symbolic coefficient calculus.

The symbolic ring T[X] is modelled by ordinary Polynomials in
n(n+1)/2 + n variables: first the Y_ij (i <= j, row by row), then X_1..X_n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

from .combinat import (DEFAULT_ENUM_BUDGET, add, as_order, borel_ge, enumerate_U,
                       exponent_transforms, last_index)
from .errors import BudgetExceeded, DegreeMismatch, HypothesisViolated, WidthMismatch
from .monomial import MonomialIdeal, degree_counter, is_borel_ideal
from .polyalg import (DEFAULT_ENTROPY_BOUND, DEFAULT_RETRIES, DEFAULT_SPAIR_BUDGET, Ideal,
                      Polynomial, UnipotentChange, apply_change, certify, groebner_basis,
                      random_unipotent)

__all__ = [
    "UnipotentChange", "random_unipotent", "apply_change", "GinResult", "gin", "gin_certified",
    "y_count", "y_index", "y_names", "y_power", "phi_expand", "coefficient", "alpha", "mu",
    "p_rho", "verify_alpha_shift", "shift_matrix", "check_shift_hypothesis", "tx_names",
]


# -- generic initial ideals ----------------------------------------------------

@dataclass
class GinResult:
    ideal: MonomialIdeal
    candidates: list = field(default_factory=list)
    seed: int = 0

    @property
    def draws(self) -> int:
        return len(self.candidates)


def gin_certified(I: Ideal, order="rlex", seed: int = 0,
                  entropy_bound: int = DEFAULT_ENTROPY_BOUND,
                  retries: int = DEFAULT_RETRIES,
                  budget: int = DEFAULT_SPAIR_BUDGET) -> GinResult:
    """init(g(I)) for seeded unipotent g, certified by two agreeing Borel draws."""
    if not I.is_homogeneous():
        raise ValueError("generic initial ideals need a homogeneous ideal")
    n = I.n
    order = as_order(order, n)
    if I.is_zero():
        return GinResult(MonomialIdeal(n), [], seed)
    hint = degree_counter(I.initial_ideal("rlex"))

    def one(draw: int) -> MonomialIdeal:
        g = random_unipotent(n, seed, draw, entropy_bound)
        moved = apply_change(g, I)
        G = groebner_basis(moved.generators, order, n, budget=budget, hilbert=hint)
        return MonomialIdeal(n, [f.lead_exp(order) for f in G])

    value, seen = certify(one, retries, valid=is_borel_ideal)
    return GinResult(value, seen, seed)


def gin(I: Ideal, order="rlex", seed: int = 0, entropy_bound: int = DEFAULT_ENTROPY_BOUND,
        retries: int = DEFAULT_RETRIES, budget: int = DEFAULT_SPAIR_BUDGET) -> MonomialIdeal:
    return gin_certified(I, order, seed, entropy_bound, retries, budget).ideal


# -- the ring T[X] ---------------------------------------------------------------

def y_count(n: int) -> int:
    return n * (n + 1) // 2


def y_index(n: int, i: int, j: int) -> int:
    """Position of Y_ij (0-based, i <= j) in the Y block."""
    if not 0 <= i <= j < n:
        raise IndexError(f"no variable Y_{i + 1}{j + 1} for n = {n}")
    return i * n - i * (i - 1) // 2 + (j - i)


def y_names(n: int) -> list[str]:
    sep = "" if n < 10 else "_"
    return [f"Y{i + 1}{sep}{j + 1}" for i in range(n) for j in range(i, n)]


def tx_names(n: int) -> list[str]:
    return y_names(n) + [f"X{i + 1}" for i in range(n)]


def y_power(M: Sequence[Sequence[int]]) -> tuple:
    """Exponent of Y^M in the Y block; M must be upper triangular."""
    n = len(M)
    e = [0] * y_count(n)
    for i in range(n):
        for j in range(n):
            if M[i][j]:
                if j < i:
                    raise ValueError("Y^M needs an upper triangular M")
                e[y_index(n, i, j)] = M[i][j]
    return tuple(e)


def _y_monomial(n: int, M) -> Polynomial:
    return Polynomial.monomial(y_power(M))


def phi_expand(b: Sequence[int], budget: int = DEFAULT_ENUM_BUDGET) -> Polynomial:
    """phi(X^b) with phi(X_j) = sum_{i <= j} Y_ij X_i, fully expanded in T[X]."""
    n = len(b)
    N = y_count(n)
    width = N + n

    def phi(j: int) -> Polynomial:
        terms = []
        for i in range(j + 1):
            e = [0] * width
            e[y_index(n, i, j)] = 1
            e[N + i] = 1
            terms.append((tuple(e), 1))
        return Polynomial(width, terms)

    out = Polynomial.constant(width)
    for j, k in enumerate(b):
        for _ in range(k):
            out = out * phi(j)
            if len(out) > budget:
                raise BudgetExceeded(f"expansion exceeded {budget} terms")
    return out


def coefficient(expansion: Polynomial, a: Sequence[int]) -> Polynomial:
    """The coefficient of X^a in an element of T[X], as a polynomial in the Y block."""
    n = len(a)
    N = expansion.n - n
    if N != y_count(n):
        raise WidthMismatch("expansion does not live in T[X_1..X_n]")
    a = tuple(a)
    return Polynomial(N, [(e[:N], c) for e, c in expansion.terms.items() if e[N:] == a])


def mu(M: Sequence[Sequence[int]]) -> int:
    """Product over the columns of the multinomial coefficients."""
    out = 1
    for col in zip(*M):
        if any(x < 0 for x in col):
            raise ValueError("mu needs a nonnegative matrix")
        out *= factorial(sum(col))
        for x in col:
            out //= factorial(x)
    return out


def alpha(a: Sequence[int], b: Sequence[int], budget: int = DEFAULT_ENUM_BUDGET) -> Polynomial:
    """Coefficient of X^a in phi(X^b), as sum over U(a,b) of mu_M Y^M."""
    if len(a) != len(b):
        raise WidthMismatch(f"widths differ: {len(a)} vs {len(b)}")
    if sum(a) != sum(b):
        raise DegreeMismatch(f"degrees differ: {sum(a)} vs {sum(b)}")
    n = len(a)
    return Polynomial(y_count(n), [(y_power(M), mu(M)) for M in enumerate_U(a, b, budget)])


def shift_matrix(M: Sequence[Sequence[int]], rho: Sequence[int]) -> tuple:
    """M + rho, with rho placed on the diagonal."""
    return tuple(tuple(x + (rho[i] if i == j else 0) for j, x in enumerate(row))
                 for i, row in enumerate(M))


def check_shift_hypothesis(b: Sequence[int], c: Sequence[int], rho: Sequence[int]) -> list[str]:
    """Reasons why (b, c, rho) fails the hypothesis of the shift identities."""
    problems = []
    if not len(b) == len(c) == len(rho):
        raise WidthMismatch("b, c and rho must have the same width")
    if sum(b) != sum(c):
        problems.append("b and c have different degrees")
    if sum(rho) != 0:
        problems.append("rho does not sum to zero")
    if any(x < 0 for x in add(b, rho)):
        problems.append("b + rho has a negative entry")
    if any(x < 0 for x in add(c, rho)):
        problems.append("c + rho has a negative entry")
    m = last_index(rho)
    if tuple(b[:m - 1]) != tuple(c[:m - 1]):
        problems.append(f"b and c differ before position m(rho) = {m}")
    return problems


def p_rho(b: Sequence[int], c: Sequence[int], rho: Sequence[int], force: bool = False,
          budget: int = DEFAULT_ENUM_BUDGET) -> Polynomial:
    """sum over M in U(b,c) of mu_M Y^(M - rho^-), rho^- on the diagonal.

    Raises HypothesisViolated unless the prefix condition holds; ``force``
    evaluates the sum anyway as long as every exponent stays nonnegative.
    """
    problems = check_shift_hypothesis(b, c, rho)
    if problems and not force:
        raise HypothesisViolated("; ".join(problems))
    if sum(b) != sum(c):
        raise DegreeMismatch(f"degrees differ: {sum(b)} vs {sum(c)}")
    minus = exponent_transforms(rho).minus
    n = len(b)
    terms = []
    for M in enumerate_U(b, c, budget):
        shifted = shift_matrix(M, [-x for x in minus])
        if any(shifted[j][j] < 0 for j in range(n)):
            raise HypothesisViolated(f"Y^(M - rho^-) has a negative exponent for M = {M}")
        terms.append((y_power(shifted), mu(M)))
    return Polynomial(y_count(n), terms)


def _diag_power(n: int, v: Sequence[int]) -> Polynomial:
    return _y_monomial(n, [[v[i] if i == j else 0 for j in range(n)] for i in range(n)])


def verify_alpha_shift(b: Sequence[int], c: Sequence[int], rho: Sequence[int],
                       force: bool = False, budget: int = DEFAULT_ENUM_BUDGET) -> dict:
    """Evaluate both sides of the two shift identities independently.

    low:  alpha^c_b          versus p * Y^(rho^-)
    high: alpha^(c+rho)_(b+rho) versus p * Y^(rho^+)
    """
    n = len(b)
    tr = exponent_transforms(rho)
    p = p_rho(b, c, rho, force=force, budget=budget)
    lhs_low = alpha(b, c, budget)
    rhs_low = p * _diag_power(n, tr.minus)
    lhs_high = alpha(add(b, rho), add(c, rho), budget)
    rhs_high = p * _diag_power(n, tr.plus)
    return {
        "p": p,
        "lhs_low": lhs_low, "rhs_low": rhs_low,
        "lhs_high": lhs_high, "rhs_high": rhs_high,
        "equal_low": lhs_low == rhs_low, "equal_high": lhs_high == rhs_high,
        "borel": borel_ge(b, c),
    }
