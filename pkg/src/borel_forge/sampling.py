"""Seeded random inputs for property checks."""

from __future__ import annotations

import random

from .combinat import borel_closure, monomials_of_degree
from .monomial import MonomialIdeal
from .polyalg import Ideal, Polynomial


def random_polynomial(rng: random.Random, n: int, degree: int, max_terms: int = 3,
                      coeff_bound: int = 3) -> Polynomial:
    """A homogeneous polynomial with a few terms and small integer coefficients."""
    pool = list(monomials_of_degree(n, degree))
    k = rng.randint(1, min(max_terms, len(pool)))
    terms = [(a, rng.choice([c for c in range(-coeff_bound, coeff_bound + 1) if c]))
             for a in rng.sample(pool, k)]
    return Polynomial(n, terms)


def random_ideal(seed: int, n: int = 4, max_gens: int = 4, max_degree: int = 3) -> Ideal:
    """A nonzero homogeneous ideal with at most max_gens generators."""
    rng = random.Random(f"ideal/{n}/{max_gens}/{max_degree}/{seed}")
    # lean towards several generators of higher degree so saturation matters
    count = rng.choice([k for k in range(1, max_gens + 1) for _ in range(k)])
    degrees = [d for d in range(1, max_degree + 1) for _ in range(d)]
    gens = [random_polynomial(rng, n, rng.choice(degrees)) for _ in range(count)]
    return Ideal(n, gens)


def random_borel_ideal(seed: int, n: int = 4, max_degree: int = 3) -> MonomialIdeal:
    """Borel closure of a few random monomials, degree by degree."""
    rng = random.Random(f"borel/{n}/{max_degree}/{seed}")
    gens = []
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(1, max_degree)
        a = rng.choice(list(monomials_of_degree(n, d)))
        gens.extend(borel_closure([a]))
    return MonomialIdeal(n, gens)
