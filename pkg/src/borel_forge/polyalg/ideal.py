"""Ideals of K[X_1..X_n]: cached Groebner bases and the standard operations."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence, TypeVar

from ..combinat import TermOrder, as_order
from ..errors import CertificateMismatch, WidthMismatch
from ..monomial import (HilbertData, MonomialIdeal, degree_counter, hilbert_function,
                        is_borel_ideal)
from .coords import DEFAULT_ENTROPY_BOUND, UnipotentChange, random_unipotent
from .groebner import DEFAULT_SPAIR_BUDGET, groebner_basis, normal_form
from .polynomial import Polynomial

DEFAULT_RETRIES = 3

T = TypeVar("T")


class Ideal:
    """An ideal given by generators, with reduced bases cached per order."""

    def __init__(self, n: int, generators: Iterable[Polynomial] = ()):
        gens: list[Polynomial] = []
        seen = set()
        for f in generators:
            if f.n != n:
                raise WidthMismatch(f"generator of width {f.n} in a ring of width {n}")
            if f and f not in seen:
                seen.add(f)
                gens.append(f)
        self.n = n
        self.generators = gens
        self._cache: dict = {}

    @classmethod
    def from_monomial(cls, I: MonomialIdeal) -> "Ideal":
        return cls(I.n, [Polynomial.monomial(g) for g in I.sorted_gens()])

    @classmethod
    def unit(cls, n: int) -> "Ideal":
        return cls(n, [Polynomial.constant(n)])

    def __repr__(self):
        return f"Ideal({self.n}, [{', '.join(str(f) for f in self.generators)}])"

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(f.is_homogeneous() for f in self.generators)

    def is_monomial(self) -> bool:
        return all(f.is_monomial() for f in self.generators)

    def groebner(self, order="rlex", budget: int = DEFAULT_SPAIR_BUDGET,
                 hilbert: Callable[[int], int] | None = None) -> list[Polynomial]:
        order = as_order(order, self.n)
        G = self._cache.get(order)
        if G is None:
            G = groebner_basis(self.generators, order, self.n, budget=budget, hilbert=hilbert)
            self._cache[order] = G
        return G

    def seed_basis(self, order, G: list[Polynomial]) -> None:
        """Record a reduced basis computed elsewhere (e.g. by a closed formula)."""
        self._cache[as_order(order, self.n)] = list(G)

    def initial_ideal(self, order="rlex") -> MonomialIdeal:
        order = as_order(order, self.n)
        return MonomialIdeal(self.n, [g.lead_exp(order) for g in self.groebner(order)])

    def reduce(self, f: Polynomial, order="rlex") -> Polynomial:
        return normal_form(f, self.groebner(order), order)

    def __contains__(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(f in self for f in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.n == other.n and self.groebner("rlex") == other.groebner("rlex")

    def __hash__(self):
        return hash((self.n, tuple(self.groebner("rlex"))))

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.n, self.generators + other.generators)

    def extend(self, n: int) -> "Ideal":
        """The extended ideal in a ring with more trailing variables."""
        return Ideal(n, [f.embed(n) for f in self.generators])

    def map(self, fn: Callable[[Polynomial], Polynomial]) -> "Ideal":
        gens = [fn(f) for f in self.generators]
        return Ideal(gens[0].n if gens else self.n, gens)

    def to_monomial(self) -> MonomialIdeal:
        """The same ideal as a MonomialIdeal; it must be generated by monomials."""
        if not self.is_monomial():
            G = self.groebner("rlex")
            if not all(g.is_monomial() for g in G):
                raise ValueError("ideal is not a monomial ideal")
            return MonomialIdeal(self.n, [next(iter(g.terms)) for g in G])
        return MonomialIdeal(self.n, [next(iter(f.terms)) for f in self.generators])


def groebner(I, order="rlex", budget: int = DEFAULT_SPAIR_BUDGET) -> list[Polynomial]:
    """Reduced Groebner basis of an Ideal or of a list of generators."""
    if isinstance(I, Ideal):
        return I.groebner(order, budget)
    I = list(I)
    return groebner_basis(I, order, budget=budget)


def initial_ideal(I: Ideal, order="rlex") -> MonomialIdeal:
    return I.initial_ideal(order)


def hilbert_function_ideal(I: Ideal, up_to: int | None = None,
                           with_polynomial: bool = False) -> HilbertData:
    return hilbert_function(I.initial_ideal("rlex"), up_to, with_polynomial)


# -- elimination, intersection, colon -----------------------------------------

def eliminate(I: Ideal, keep: int) -> Ideal:
    """I intersected with K[X_1..X_keep], as an ideal of that ring."""
    n = I.n
    if keep >= n:
        return I
    if I.is_zero():
        return Ideal(keep, [])
    drop = n - keep
    # move the variables to be eliminated to the front of an elimination order
    perm = list(range(keep, n)) + list(range(keep))
    moved = [f.permute(perm) for f in I.generators]
    G = groebner_basis(moved, TermOrder.elim(n, drop), n)
    kept = [g for g in G if not any(any(a[:drop]) for a in g.terms)]
    return Ideal(keep, [g.project(range(drop, n)) for g in kept])


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I cap J = (t I + (1 - t) J) cap K[X], with t adjoined first."""
    if I.n != J.n:
        raise WidthMismatch(f"widths differ: {I.n} vs {J.n}")
    n = I.n
    if I.is_zero() or J.is_zero():
        return Ideal(n, [])
    t = Polynomial.variable(n + 1, 0)
    gens = ([t * f.embed(n + 1, 1) for f in I.generators]
            + [(1 - t) * g.embed(n + 1, 1) for g in J.generators])
    G = groebner_basis(gens, TermOrder.elim(n + 1, 1), n + 1)
    return Ideal(n, [g.project(range(1, n + 1)) for g in G
                     if not any(a[0] for a in g.terms)])


def colon_variable(I: Ideal, j: int) -> Ideal:
    """(I : X_j) from I cap (X_j), j 0-based."""
    x = Polynomial.variable(I.n, j)
    meet = ideal_intersection(I, Ideal(I.n, [x]))
    e = tuple(1 if k == j else 0 for k in range(I.n))
    return Ideal(I.n, [f.divide_monomial(e) for f in meet.groebner("rlex")])


def _strip_var(G: Sequence[Polynomial], j: int) -> list[Polynomial]:
    out = []
    for g in G:
        k = min(a[j] for a in g.terms)
        e = tuple(k if i == j else 0 for i in range(g.n))
        out.append(g.divide_monomial(e) if k else g)
    return out


def colon_var_power(I: Ideal, j: int, method: str = "auto") -> Ideal:
    """(I : X_j^infinity), j 0-based.

    ``method="colon"`` iterates single colons until the ideal stops growing.
    For homogeneous I, ``"auto"`` instead takes a reduced basis in the
    reverse lexicographic order with X_j moved to the last position and
    divides out the powers of X_j; both give the same ideal.
    """
    if method not in ("auto", "colon"):
        raise ValueError(f"unknown method {method!r}")
    if I.is_zero():
        return I
    if method == "auto" and I.is_homogeneous():
        n = I.n
        perm = [k for k in range(n) if k != j] + [j]
        if j == n - 1:
            G = I.groebner("rlex")
            return Ideal(n, _strip_var(G, j))
        moved = Ideal(n, [f.permute(perm) for f in I.generators])
        stripped = _strip_var(moved.groebner("rlex"), n - 1)
        back = [0] * n
        for k, p in enumerate(perm):
            back[p] = k
        return Ideal(n, [f.permute(back) for f in stripped])
    current = I
    while True:
        nxt = colon_variable(current, j)
        if nxt == current:
            return current
        current = nxt


# -- saturation ----------------------------------------------------------------

def certify(compute: Callable[[int], T], retries: int = DEFAULT_RETRIES,
            valid: Callable[[T], bool] = lambda v: True) -> tuple[T, list[T]]:
    """Run independent draws until some value has been produced twice.

    Draws 0 and 1 are always made; at most ``retries`` further draws vote on
    a disagreement.  Values rejected by ``valid`` do not vote.  Returns the
    certified value and the list of all candidates seen.
    """
    candidates: list[T] = []
    votes: list[int] = []
    for draw in range(2 + retries):
        v = compute(draw)
        if valid(v):
            for k, c in enumerate(candidates):
                if c == v:
                    votes[k] += 1
                    if votes[k] >= 2:
                        return c, candidates + [v]
                    break
            else:
                candidates.append(v)
                votes.append(1)
        else:
            candidates.append(v)
            votes.append(-(1 << 30))
    raise CertificateMismatch(
        f"no agreement between {len(candidates)} generic draws", candidates)


def apply_change(g: UnipotentChange, I: Ideal) -> Ideal:
    if g.n != I.n:
        raise WidthMismatch(f"change has width {g.n}, ideal {I.n}")
    images = g.images()
    return Ideal(I.n, [f.substitute(images) for f in I.generators])


def saturate(I: Ideal, seed: int = 0, entropy_bound: int = DEFAULT_ENTROPY_BOUND,
             retries: int = DEFAULT_RETRIES, budget: int = DEFAULT_SPAIR_BUDGET) -> Ideal:
    """I^sat = (I : S_+^infinity) for homogeneous I.

    When the reverse lexicographic initial ideal is Borel the answer is
    (I : X_n^infinity).  Otherwise a seeded unipotent g is drawn and
    g^-1((g(I) : X_n^infinity)) is computed; two draws must agree.
    """
    if not I.is_homogeneous():
        raise ValueError("saturation needs a homogeneous ideal")
    n = I.n
    if I.is_zero():
        return I
    init = I.initial_ideal("rlex")
    if is_borel_ideal(init):
        return colon_var_power(I, n - 1)
    hint = degree_counter(init)

    def one(draw: int) -> Ideal:
        g = random_unipotent(n, seed, draw, entropy_bound)
        moved = apply_change(g, I)
        G = groebner_basis(moved.generators, "rlex", n, budget=budget, hilbert=hint)
        colon = Ideal(n, _strip_var(G, n - 1))
        return apply_change(g.inverse(), colon)

    return certify(one, retries)[0]


def is_saturated(I: Ideal, seed: int = 0) -> bool:
    return saturate(I, seed) == I
