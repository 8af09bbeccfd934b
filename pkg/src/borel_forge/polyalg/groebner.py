"""Buchberger's algorithm over Q.

Internally polynomials are kept primitive with integer coefficients so the
reduction loop never touches Fraction; results are converted back to monic
Fraction polynomials at the end.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm as ilcm
from typing import Callable, Iterable, Sequence

from ..combinat import TermOrder, as_order
from ..errors import BudgetExceeded
from .polynomial import Polynomial

DEFAULT_SPAIR_BUDGET = 200_000


class _IPoly:
    __slots__ = ("lead", "lc", "terms", "deg")

    def __init__(self, terms: dict, lead: tuple):
        self.terms = terms
        self.lead = lead
        self.lc = terms[lead]
        self.deg = sum(lead)


class _Ring:
    """Per-computation caches for one term order."""

    def __init__(self, order: TermOrder):
        self.order = order
        self._neg: dict = {}

    def negkey(self, a: tuple) -> tuple:
        k = self._neg.get(a)
        if k is None:
            k = tuple(-x for x in self.order.key(a))
            self._neg[a] = k
        return k

    def lead_of(self, terms: dict) -> tuple:
        return min(terms, key=self.negkey)


def _integral(f: Polynomial) -> dict:
    den = 1
    for c in f.terms.values():
        den = ilcm(den, c.denominator)
    terms = {a: int(c * den) for a, c in f.terms.items()}
    return _primitive(terms)[0]


def _primitive(terms: dict) -> tuple[dict, int]:
    g = gcd(*terms.values()) if terms else 1
    if g > 1:
        terms = {a: c // g for a, c in terms.items()}
    return terms, g


def _reduce(terms: dict, reducers: Sequence[_IPoly], ring: _Ring,
            full: bool = True) -> tuple[dict, Fraction]:
    """Reduce by the first divisor in list order, highest term first.

    Returns ``(p, mult)`` with ``p == mult * remainder`` and p primitive.
    """
    p = dict(terms)
    nk = ring.negkey
    heap = [(nk(e), e) for e in p]
    heapq.heapify(heap)
    mult = Fraction(1)
    steps = 0
    while heap:
        _, e = heapq.heappop(heap)
        c = p.get(e)
        if c is None:
            continue
        de = sum(e)
        r = None
        for g in reducers:
            if g.deg <= de and all(x >= y for x, y in zip(e, g.lead)):
                r = g
                break
        if r is None:
            if not full:
                break
            continue
        lc = r.lc
        gg = gcd(c, lc)
        a, b = lc // gg, c // gg
        if a != 1:
            for k in p:
                p[k] *= a
            mult *= a
        shift = tuple(x - y for x, y in zip(e, r.lead))
        for ge, gc in r.terms.items():
            ne = tuple(x + y for x, y in zip(ge, shift))
            old = p.get(ne)
            if old is None:
                p[ne] = -b * gc
                heapq.heappush(heap, (nk(ne), ne))
            else:
                v = old - b * gc
                if v:
                    p[ne] = v
                else:
                    del p[ne]
        steps += 1
        if steps % 16 == 0 and p:
            p, g = _primitive(p)
            mult /= g
    if p:
        p, g = _primitive(p)
        mult /= g
    return p, mult


def _normalize_sign(terms: dict, ring: _Ring) -> _IPoly:
    lead = ring.lead_of(terms)
    if terms[lead] < 0:
        terms = {a: -c for a, c in terms.items()}
    return _IPoly(terms, lead)


def _coprime(a: tuple, b: tuple) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _spoly(f: _IPoly, g: _IPoly, l: tuple) -> dict:
    gg = gcd(f.lc, g.lc)
    cf, cg = g.lc // gg, f.lc // gg
    sf = tuple(x - y for x, y in zip(l, f.lead))
    sg = tuple(x - y for x, y in zip(l, g.lead))
    out: dict = {}
    for a, c in f.terms.items():
        out[tuple(x + y for x, y in zip(a, sf))] = cf * c
    for a, c in g.terms.items():
        e = tuple(x + y for x, y in zip(a, sg))
        v = out.get(e, 0) - cg * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _buchberger(inputs: list[dict], ring: _Ring, budget: int,
                hilbert: Callable[[int], int] | None) -> list[_IPoly]:
    order = ring.order
    n = order.n
    basis: list[_IPoly] = []
    active: list[int] = []
    live: dict = {}  # (i, j) -> lcm
    heap: list = []

    def insert(h: _IPoly):
        idx = len(basis)
        basis.append(h)
        lh = h.lead
        cands = [(g, _lcm(lh, basis[g].lead)) for g in active]
        kept: list = []
        while cands:
            g1, l1 = cands.pop(0)
            if (_coprime(lh, basis[g1].lead)
                    or (not any(_divides(l2, l1) for _, l2 in cands)
                        and not any(_divides(l2, l1) for _, l2 in kept))):
                kept.append((g1, l1))
        fresh = [(g, l) for g, l in kept if not _coprime(lh, basis[g].lead)]
        for (i, j), l in list(live.items()):
            if (_divides(lh, l) and _lcm(basis[i].lead, lh) != l
                    and _lcm(basis[j].lead, lh) != l):
                del live[(i, j)]
        for g, l in fresh:
            live[(g, idx)] = l
            heapq.heappush(heap, (sum(l), order.key(l), g, idx))
        active[:] = [g for g in active if not _divides(lh, basis[g].lead)] + [idx]

    for terms in sorted(inputs, key=lambda t: order.key(ring.lead_of(t))):
        red, _ = _reduce(terms, [basis[g] for g in active], ring)
        if red:
            insert(_normalize_sign(red, ring))

    done = 0
    counted: dict = {}
    while heap:
        deg, _, i, j = heapq.heappop(heap)
        l = live.pop((i, j), None)
        if l is None:
            continue
        if hilbert is not None:
            stamp = (deg, len(basis))
            if stamp not in counted:
                from ..monomial import MonomialIdeal
                have = MonomialIdeal(n, [basis[g].lead for g in active]).count_in_degree(deg)
                counted[stamp] = have >= hilbert(deg)
            if counted[stamp]:
                continue
        done += 1
        if done > budget:
            raise BudgetExceeded(f"Groebner computation exceeded {budget} S-pairs")
        s = _spoly(basis[i], basis[j], l)
        if not s:
            continue
        red, _ = _reduce(s, [basis[g] for g in active], ring)
        if red:
            insert(_normalize_sign(red, ring))
    return [basis[g] for g in active]


def _interreduce(G: list[_IPoly], ring: _Ring) -> list[_IPoly]:
    key = ring.order.key
    G = sorted(G, key=lambda g: key(g.lead))
    minimal: list[_IPoly] = []
    for g in G:
        if not any(_divides(h.lead, g.lead) for h in minimal):
            minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        red, _ = _reduce(g.terms, others, ring)
        out.append(_normalize_sign(red, ring))
    return out


def _to_monic(g: _IPoly, n: int) -> Polynomial:
    lc = g.lc
    return Polynomial._raw(n, {a: Fraction(c, lc) for a, c in g.terms.items()})


def groebner_basis(generators: Iterable[Polynomial], order, n: int | None = None,
                   budget: int = DEFAULT_SPAIR_BUDGET,
                   hilbert: Callable[[int], int] | None = None,
                   check: bool = True) -> list[Polynomial]:
    """Reduced Groebner basis, monic, sorted by descending leading term.

    ``hilbert`` may give the ideal's Hilbert function (monomials of the ideal
    per degree) for homogeneous input under a degree-compatible order; pairs
    of a degree where the leading terms already account for it are skipped.
    With ``check`` the result is re-verified by reducing all its S-pairs.
    """
    gens = [f for f in generators if f]
    if n is None:
        if not gens:
            raise ValueError("cannot infer the ring width of an empty generator list")
        n = gens[0].n
    order = as_order(order, n)
    if not gens:
        return []
    if hilbert is not None and not (order.degree_compatible
                                    and all(f.is_homogeneous() for f in gens)):
        hilbert = None
    ring = _Ring(order)
    G = _buchberger([_integral(f) for f in gens], ring, budget, hilbert)
    G = _interreduce(G, ring)
    if check and not _pairs_reduce(G, ring):
        raise ArithmeticError("Groebner self-check failed")
    out = [_to_monic(g, n) for g in G]
    out.sort(key=lambda f: order.key(f.lead_exp(order)), reverse=True)
    return out


def normal_form(f: Polynomial, G: Sequence[Polynomial], order) -> Polynomial:
    """Remainder of f on division by G.

    The highest reducible term is eliminated first, using the first element of
    G (in list order) whose leading term divides it.
    """
    order = as_order(order, f.n)
    if not f:
        return f
    ring = _Ring(order)
    reducers = [_normalize_sign(_integral(g), ring) for g in G if g]
    den = 1
    for c in f.terms.values():
        den = ilcm(den, c.denominator)
    start = {a: int(c * den) for a, c in f.terms.items()}
    red, mult = _reduce(start, reducers, ring)
    scale = mult * den
    return Polynomial._raw(f.n, {a: Fraction(c) / scale for a, c in red.items()})


def spoly(f: Polynomial, g: Polynomial, order) -> Polynomial:
    order = as_order(order, f.n)
    (a, ca), (b, cb) = f.leading(order), g.leading(order)
    l = _lcm(a, b)
    return (f.mul_monomial(tuple(x - y for x, y in zip(l, a)), 1 / ca)
            - g.mul_monomial(tuple(x - y for x, y in zip(l, b)), 1 / cb))


def is_groebner(G: Sequence[Polynomial], order) -> bool:
    """Every S-pair not covered by the product or chain criterion reduces to zero."""
    G = [g for g in G if g]
    if not G:
        return True
    order = as_order(order, G[0].n)
    ring = _Ring(order)
    return _pairs_reduce([_normalize_sign(_integral(g), ring) for g in G], ring)


def _pairs_reduce(reducers: list[_IPoly], ring: _Ring) -> bool:
    """Buchberger's criterion with the product and chain shortcuts.

    A pair (i, j) is skipped when some other lead X^k divides their lcm and
    both lcm(i, k) and lcm(j, k) are proper divisors of it; those pairs are
    either checked or skipped for the same reason with a smaller lcm.
    """
    leads = [f.lead for f in reducers]
    for i in range(len(reducers)):
        for j in range(i + 1, len(reducers)):
            f, g = reducers[i], reducers[j]
            if _coprime(f.lead, g.lead):
                continue
            l = _lcm(f.lead, g.lead)
            if any(k != i and k != j and _divides(leads[k], l)
                   and _lcm(leads[i], leads[k]) != l and _lcm(leads[j], leads[k]) != l
                   for k in range(len(leads))):
                continue
            s = _spoly(f, g, l)
            if s and _reduce(s, reducers, ring)[0]:
                return False
    return True


def is_reduced(G: Sequence[Polynomial], order) -> bool:
    if not G:
        return True
    order = as_order(order, G[0].n)
    leads = [g.leading(order) for g in G]
    if any(c != 1 for _, c in leads):
        return False
    for k, g in enumerate(G):
        for a in g.terms:
            if any(_divides(lead, a) for m, (lead, _) in enumerate(leads) if m != k):
                return False
    return True
