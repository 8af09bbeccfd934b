"""Flat one-parameter families degenerating an ideal to an initial ideal."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..combinat import TermOrder, as_order
from ..errors import WeightNotFound
from ..monomial import hilbert_function
from .ideal import Ideal, hilbert_function_ideal
from .polynomial import Polynomial

DEFAULT_WEIGHT_BUDGET = 100_000


def _dot(w: Sequence[int], a: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(w, a))


def find_weight(constraints: Sequence[Sequence[int]], n: int,
                budget: int = DEFAULT_WEIGHT_BUDGET) -> tuple:
    """Integer w with w.v > 0 for every v, by perceptron updates."""
    w = [0] * n
    for _ in range(budget):
        bad = next((v for v in constraints if _dot(w, v) <= 0), None)
        if bad is None:
            return tuple(w)
        w = [x + y for x, y in zip(w, bad)]
    raise WeightNotFound(f"no separating weight within {budget} updates")


def order_weight(order: TermOrder, D: int) -> tuple:
    """A weight refining ``order`` on homogeneous monomials of degree <= D."""
    n, base = order.n, D + 1
    if order.kind == "rlex":
        return tuple(-base ** i for i in range(n))
    if order.kind == "hlex":
        return tuple(base ** (n - 1 - i) for i in range(n))
    raise WeightNotFound(f"no closed-form weight for {order}")


@dataclass
class DegenerationFamily:
    """Generators of a family over K[z]; z is the last variable.

    ``generators[k]`` is sum_a c_a z^(W - w.a) X^a for the k-th element of the
    reduced basis, W being the weight of its leading term.
    """

    base: Ideal
    order: TermOrder
    weight: tuple
    generators: list
    samples: tuple = (0, 1)

    def fiber(self, u) -> Ideal:
        n = self.base.n
        u = Fraction(u)
        images = [Polynomial.variable(n, i) for i in range(n)] + [Polynomial.constant(n, u)]
        return Ideal(n, [f.substitute(images) for f in self.generators])

    def rescaled_base(self, u) -> Ideal:
        """Image of the base ideal under X_i -> u^(-w_i) X_i."""
        n = self.base.n
        u = Fraction(u)
        images = [Polynomial.variable(n, i) * (u ** -w) for i, w in enumerate(self.weight)]
        return Ideal(n, [f.substitute(images) for f in self.base.generators])

    def verify(self, up_to: int = 10) -> dict:
        """Per sample: does the fiber have the expected Hilbert function?

        Fiber 0 is compared with the initial ideal, other fibers with the base.
        """
        h_base = hilbert_function_ideal(self.base, up_to).values
        init = self.base.initial_ideal(self.order)
        h_init = hilbert_function(init, up_to).values
        out = {}
        for u in self.samples:
            fib = self.fiber(u)
            h = hilbert_function_ideal(fib, up_to).values
            if Fraction(u) == 0:
                out[u] = h == h_init and fib.initial_ideal(self.order) == init
            else:
                out[u] = h == h_base
        return out


def weight_degeneration(I: Ideal, order="rlex", t_samples: Sequence = (0, 1),
                        budget: int = DEFAULT_WEIGHT_BUDGET) -> DegenerationFamily:
    """The Groebner degeneration of a homogeneous ideal to its initial ideal."""
    if not I.is_homogeneous():
        raise ValueError("weight degeneration needs a homogeneous ideal")
    n = I.n
    order = as_order(order, n)
    G = I.groebner(order)
    constraints = []
    for g in G:
        lead = g.lead_exp(order)
        constraints.extend(tuple(x - y for x, y in zip(lead, a)) for a in g.terms if a != lead)
    try:
        w = find_weight(constraints, n, budget)
    except WeightNotFound:
        w = order_weight(order, max((g.degree() for g in G), default=0))
        if any(_dot(w, v) <= 0 for v in constraints):
            raise
    family = []
    for g in G:
        top = _dot(w, g.lead_exp(order))
        family.append(Polynomial._raw(n + 1, {a + (top - _dot(w, a),): c
                                             for a, c in g.terms.items()}))
    return DegenerationFamily(I, order, w, family, tuple(t_samples))
