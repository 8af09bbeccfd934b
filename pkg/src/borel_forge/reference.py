"""Worked reference data: three small examples with known answers.

Polynomial lists are kept as text in the variable names x, y, z, t (, u) and
parsed on demand.
"""

from __future__ import annotations

from functools import lru_cache

from .binomial import BinomialSystem
from .combinat import borel_closure
from .io import parse_polynomial
from .monomial import MonomialIdeal
from .polyalg import Ideal, default_names

# first example, K[x,y,z,t]
EX1_C = "y^2 - x*z, x^2, x*y, x*z^2"
EX1_D = "y^2*z - x*t^2, x^2, x*y, x*z, y^3"
EX1_B = "x^2, x*y, y^2, x*z^2"
EX1_LF = "x^2, x*y, x*z, y^3, y^2*z"
EX1_LQ = "x, y^3, y^2*z^2"
EX1_HILBERT_POLY = "1/6 t^3 + t^2 - 1/6 t - 2"

# second example, K[x,y,z,t]
EX2_A = [(3, 0, 0, 0), (2, 1, 0, 0), (2, 0, 1, 0), (2, 0, 0, 1), (1, 2, 0, 0),
         (1, 1, 1, 0), (1, 1, 0, 1), (1, 0, 2, 0), (0, 3, 0, 0), (0, 2, 1, 0)]
EX2_C = [(0, 2, 0, 1)]
EX2_RHO = (1, -2, 1, 0)
EX2_F = ("x^3, x^2*y, x^2*z, x^2*t, x*y^2, x*y*z, x*y*t, x*z^2, y^3, y^2*z, "
         "y^2*t - x*z*t")
EX2_SAT = EX1_C

# the non-good system, K[x,y,z,t,u]
CE_RHO = (1, -2, 2, -2, 1)
CE_B = (0, 2, 0, 3, 0)
CE_C = (0, 2, 0, 2, 1)
CE_GIN = """
x^5, x^4*y, x^3*y^2, x^2*y^3, x*y^4, y^5, x^4*z, x^3*y*z, x^2*y^2*z, x*y^3*z, y^4*z, x^3*z^2,
x^2*y*z^2, x*y^2*z^2, y^3*z^2, x^2*z^3, x*y*z^3, y^2*z^3, x*z^4, x^4*t, x^3*y*t, x^2*y^2*t,
x*y^3*t, y^4*t, x^3*z*t, x^2*y*z*t, x*y^2*z*t, y^3*z*t, x^2*z^2*t, x*y*z^2*t, y^2*z^2*t, x*z^3*t,
x^3*t^2, x^2*y*t^2, x*y^2*t^2, y^3*t^2, x^2*z*t^2, x*y*z*t^2, y^2*z*t^2, x*z^2*t^2, x^2*t^3,
x*y*t^3, y^2*t^3,
x^4*u, x^3*y*u, x^2*y^2*u, x*y^3*u, y^4*u, x^3*z*u, x^2*y*z*u, x*y^2*z*u, y^3*z*u, x^2*z^2*u,
x*y*z^2*u, y^2*z^2*u, x*z^3*u, x^3*t*u, x^2*y*t*u, x*y^2*t*u, y^3*t*u, x^2*z*t*u, x*y*z*t*u,
y^2*z*t*u, x*z^2*t*u, x^2*t^2*u, x*y*t^2*u, x^3*u^2, x^2*y*u^2, x*y^2*u^2, x^2*z*u^2, x*y*z*u^2
"""
CE_INIT = """
x^5, x^4*y, x^3*y^2, x^2*y^3, x*y^4, y^5, x^4*z, x^3*y*z, x^2*y^2*z, x*y^3*z, y^4*z, x^3*z^2,
x^2*y*z^2, x*y^2*z^2, y^3*z^2, x^2*z^3, x*y*z^3, y^2*z^3, x*z^4, x^4*t, x^3*y*t, x^2*y^2*t,
x*y^3*t, y^4*t, x^3*z*t, x^2*y*z*t, x*y^2*z*t, y^3*z*t, x^2*z^2*t, x*y*z^2*t, y^2*z^2*t, x*z^3*t,
x^3*t^2, x^2*y*t^2, x*y^2*t^2, y^3*t^2, x^2*z*t^2, x*y*z*t^2, y^2*z*t^2, x*z^2*t^2, x^2*t^3,
x*y*t^3, y^2*t^3,
x^4*u, x^3*y*u, x^2*y^2*u, x*y^3*u, y^4*u, x^3*z*u, x^2*y*z*u, x*y^2*z*u, y^3*z*u, x^2*z^2*u,
x*y*z^2*u, y^2*z^2*u, x*z^3*u, x^3*t*u, x^2*y*t*u, x*y^2*t*u, y^3*t*u, x^2*z*t*u, x*y*z*t*u,
y^2*z*t*u, x^2*t^2*u, x*y*t^2*u, y^2*t^2*u, x^3*u^2, x^2*y*u^2, x*y^2*u^2, x^2*z*u^2, x*y*z*u^2
"""
CE_ONLY_GIN = "x*z^2*t*u"
CE_ONLY_INIT = "y^2*t^2*u"


def polys(text: str, n: int) -> list:
    names = default_names(n)
    return [parse_polynomial(p, names) for p in text.replace("\n", " ").split(",") if p.strip()]


def ideal(text: str, n: int = 4) -> Ideal:
    return Ideal(n, polys(text, n))


def monomial_ideal(text: str, n: int = 4) -> MonomialIdeal:
    exps = []
    for f in polys(text, n):
        if not f.is_monomial():
            raise ValueError(f"{f} is not a monomial")
        exps.append(next(iter(f.terms)))
    return MonomialIdeal(n, exps)


def monomial_list(text: str, n: int) -> list:
    return [next(iter(f.terms)) for f in polys(text, n)]


def example2_system() -> BinomialSystem:
    return BinomialSystem.make(EX2_A, EX2_C, EX2_RHO, n=4, d=3)


@lru_cache(maxsize=None)
def counterexample_system() -> BinomialSystem:
    """C = {b, c}; A is the Borel closure of C u (C+rho) minus both."""
    C = {CE_B, CE_C}
    D = C | {tuple(x + r for x, r in zip(c, CE_RHO)) for c in C}
    A = borel_closure(D) - D
    return BinomialSystem.make(A, C, CE_RHO, n=5, d=5)
