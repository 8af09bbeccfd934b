"""Binomial systems (A, C, rho), their ideals, filtrations and deformation chains."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

from .combinat import (add, borel_closure, is_borel_set, last_index, monomials_of_degree,
                       star)
from .errors import OrientationRequired, UnknownRelation, WidthMismatch
from .generic import gin
from .monomial import MonomialIdeal, degree_counter, interpolate, saturate_monomial
from .polyalg import (Ideal, Polynomial, eliminate, hilbert_function_ideal, is_groebner,
                      saturate)


@dataclass(frozen=True)
class BinomialSystem:
    n: int
    d: int
    A: frozenset
    C: frozenset
    rho: tuple

    @classmethod
    def make(cls, A, C, rho, n: int | None = None, d: int | None = None) -> "BinomialSystem":
        A = frozenset(tuple(a) for a in A)
        C = frozenset(tuple(c) for c in C)
        rho = tuple(rho)
        n = len(rho) if n is None else n
        if d is None:
            d = sum(next(iter(A | C))) if A | C else 0
        return cls(n, d, A, C, rho)

    @property
    def m(self) -> int:
        """m(rho), 1-based."""
        return last_index(self.rho)

    @property
    def C_shift(self) -> frozenset:
        return frozenset(add(c, self.rho) for c in self.C)

    def flipped(self) -> "BinomialSystem":
        """(A, C + rho, -rho): the same ideal with the other orientation."""
        return BinomialSystem(self.n, self.d, self.A, self.C_shift, tuple(-x for x in self.rho))

    @property
    def oriented(self) -> bool:
        return not self.C or self.rho[self.m - 1] > 0


# -- validity --------------------------------------------------------------------

@dataclass
class SystemReport:
    shape: bool
    shift_in_range: bool
    disjoint: bool
    borel: bool
    hint: str | None = None
    problems: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.shape and self.shift_in_range and self.disjoint and self.borel

    def lines(self) -> list[str]:
        out = [f"shape: {'pass' if self.shape else 'fail'}",
               f"(i) C+rho in N^n_d: {'pass' if self.shift_in_range else 'fail'}",
               f"(ii) disjointness: {'pass' if self.disjoint else 'fail'}",
               f"(iii) Borel unions: {'pass' if self.borel else 'fail'}",
               f"valid: {'yes' if self.valid else 'no'}"]
        out += [f"problem: {p}" for p in self.problems]
        if self.hint:
            out.append(f"hint: {self.hint}")
        return out


def validate_system(sys: BinomialSystem) -> SystemReport:
    n, d = sys.n, sys.d
    problems = []
    shape = len(sys.rho) == n and all(len(v) == n and sum(v) == d and min(v) >= 0
                                      for v in sys.A | sys.C)
    if not shape:
        problems.append(f"every exponent must lie in N^{n}_{d} and rho must have {n} entries")
    shifted = [add(c, sys.rho) for c in sys.C]
    in_range = all(min(v) >= 0 and sum(v) == d for v in shifted)
    if not in_range:
        problems.append("some c + rho has a negative entry or the wrong degree")
    Cs = frozenset(shifted)
    disjoint = not (sys.A & sys.C or sys.A & Cs or sys.C & Cs)
    if not disjoint:
        problems.append("A, C and C+rho are not pairwise disjoint")
    borel = shape and is_borel_set(sys.A | sys.C) and is_borel_set(sys.A | Cs)
    if not borel:
        problems.append("A u C or A u (C+rho) is not a Borel set")
    hint = None
    if sys.C and sys.rho[sys.m - 1] < 0:
        hint = "rho_m(rho) < 0; the flipped system (A, C+rho, -rho) generates the same ideal"
    return SystemReport(shape, in_range, disjoint, borel, hint, problems)


def is_good(sys: BinomialSystem) -> bool:
    """All elements of C agree on the coordinates before m(rho)."""
    k = sys.m - 1
    prefixes = {c[:k] for c in sys.C}
    return len(prefixes) <= 1


def normalize(sys: BinomialSystem) -> tuple[BinomialSystem, str | None]:
    """Flip to rho_m(rho) > 0 when needed, with a note saying so."""
    if sys.oriented:
        return sys, None
    return sys.flipped(), "flipped to (A, C+rho, -rho) so that rho_m(rho) > 0"


# -- ideals and closed-form bases ---------------------------------------------------

def _sorted(vs, n: int):
    from .combinat import TermOrder
    return sorted(vs, key=TermOrder.rlex(n).key, reverse=True)


def monomials(A, n: int) -> list[Polynomial]:
    return [Polynomial.monomial(a) for a in _sorted(A, n)]


def binomials(C, rho: Sequence[int], n: int) -> list[Polynomial]:
    """Bin(C, rho) = {X^c - X^(c+rho)}."""
    return [Polynomial.binomial(c, add(c, rho)) for c in _sorted(C, n)]


def ideal_of(sys: BinomialSystem) -> Ideal:
    """F(A, C, rho) = (X^A u Bin(C, rho))."""
    return Ideal(sys.n, monomials(sys.A, sys.n) + binomials(sys.C, sys.rho, sys.n))


@dataclass
class GBFormulas:
    gb_rlex: list
    init_rlex: MonomialIdeal
    gb_rlex_sat: list
    sat: Ideal


def _require_oriented(sys: BinomialSystem):
    if not sys.oriented:
        raise OrientationRequired("rho_m(rho) must be positive; use the flipped system")


def gb_formulas(sys: BinomialSystem) -> GBFormulas:
    _require_oriented(sys)
    n = sys.n
    gb = monomials(sys.A, n) + binomials(sys.C, sys.rho, n)
    Astar = {star(a) for a in sys.A}
    Cstar = {star(c) for c in sys.C}
    gb_sat = monomials(Astar, n) + binomials(Cstar, sys.rho, n)
    return GBFormulas(gb, MonomialIdeal(n, sys.A | sys.C), gb_sat, Ideal(n, gb_sat))


def check_gb_formulas(sys: BinomialSystem, seed: int = 0) -> dict:
    """Compare the closed forms with the general engine."""
    f = gb_formulas(sys)
    F = ideal_of(sys)
    return {
        "gb_rlex is a Groebner basis": is_groebner(f.gb_rlex, "rlex"),
        "init_rlex": F.initial_ideal("rlex") == f.init_rlex,
        "gb_rlex_sat is a Groebner basis": is_groebner(f.gb_rlex_sat, "rlex"),
        "saturation": saturate(F, seed) == f.sat,
    }


# -- sections and the filtration -----------------------------------------------------

def truncate(A, i: int) -> frozenset:
    """A_i: the elements supported on the first i coordinates, cut to width i."""
    return frozenset(a[:i] for a in A if not any(a[i:]))


def section_ideal(sys: BinomialSystem, i: int) -> Ideal:
    """Saturated section in K[X_1..X_i].

    For i >= m(rho) this is (F cap S_(i))^sat, generated by
    X^((A_i)*) u Bin((C_i)*, rho_1..rho_i).  For smaller i it is
    ((init_rlex F) cap S_(i))^sat, generated by X^(((A u C)_i)*).
    """
    _require_oriented(sys)
    if not 1 <= i <= sys.n:
        raise ValueError(f"section width must be in 1..{sys.n}")
    if i >= sys.m or not sys.C:
        A = MonomialIdeal(i, {star(a) for a in truncate(sys.A, i)}).gens
        C = {star(c) for c in truncate(sys.C, i)}
        return Ideal(i, monomials(A, i) + binomials(C, sys.rho[:i], i))
    mono = saturate_monomial(MonomialIdeal(i, truncate(sys.A | sys.C, i)))
    return Ideal.from_monomial(mono)


@dataclass
class FiltrationStep:
    index: int
    ideal: Ideal
    branch: str  # "base", "binomial" or "monomial"
    width: int  # the section ring S_(width) the step comes from


@dataclass
class Filtration:
    system: BinomialSystem
    steps: list
    bound: int
    note: str | None = None

    @property
    def ideals(self) -> list:
        return [s.ideal for s in self.steps]

    def lines(self) -> list[str]:
        from .io import canonical_generators
        from .polyalg import default_names
        names = default_names(self.system.n)
        out = []
        if self.note:
            out.append(f"note: {self.note}")
        for s in self.steps:
            gens = ", ".join(g.to_str(names) for g in canonical_generators(s.ideal.generators))
            out.append(f"F_{s.index} [{s.branch}, S_({s.width})]: ({gens})")
        return out


def filtration(sys: BinomialSystem, bound: int = 12) -> Filtration:
    """F_0 = F, then the saturated sections extended back to width n."""
    sys, note = normalize(sys)
    n, m = sys.n, sys.m
    steps = [FiltrationStep(0, ideal_of(sys), "base", n)]
    for i in range(1, n + 1):
        w = n - i + 1
        branch = "binomial" if i <= n - m + 1 else "monomial"
        steps.append(FiltrationStep(i, section_ideal(sys, w).extend(n), branch, w))
    return Filtration(sys, steps, bound, note)


def _fit_degree(values: Callable[[int], int], max_degree: int, start: int, window: int = 3):
    """Polynomial of degree <= max_degree agreeing with values on start.. (plus window)."""
    k = max(max_degree + 1, 0)
    pts = [(t, values(t)) for t in range(start, start + k)]
    p = interpolate(pts) if pts else None
    for t in range(start + k, start + k + window):
        expect = p(t) if p is not None else 0
        if values(t) != expect:
            return None
    return p if p is not None else interpolate([])


@dataclass
class FiltrationReport:
    checks: list  # (claim, passed, detail)

    @property
    def ok(self) -> bool:
        return all(p for _, p, _ in self.checks)

    def lines(self) -> list[str]:
        return [f"{'PASS' if p else 'FAIL'} {c}: {d}" for c, p, d in self.checks]


def seam_exponent(sys: BinomialSystem) -> int | None:
    """r = max{a_(m-1) : a in (A u C)_(m-1)} + rho_m, or None if that set is empty."""
    m = sys.m
    T = truncate(sys.A | sys.C, m - 1) if m >= 2 else frozenset()
    if not T:
        return None
    return max(a[m - 2] for a in T) + sys.rho[m - 1]


def check_filtration(sys: BinomialSystem, bound: int = 12, engine: bool = True,
                     window: int = 3) -> FiltrationReport:
    filt = filtration(sys, bound)
    sys = filt.system
    n, m = sys.n, sys.m
    F = filt.ideals
    checks = []

    # (a) generated in the subring S_(n-i) except at the seam
    for i in range(n + 1):
        if i == n - m + 1:
            continue
        G = F[i].groebner("rlex")
        width = max((g.support_width() for g in G), default=0)
        checks.append((f"a: F_{i} generated in S_({n - i})", width <= n - i,
                       f"reduced basis has support width {width}"))

    # (b) next step is the saturated section of the previous one (engine)
    if engine:
        for i in range(n):
            if i == n - m + 1:
                continue
            sec = eliminate(F[i], n - i)
            nxt = (saturate(sec).extend(n) if n - i >= 1 and not sec.is_zero()
                   else sec.extend(n))
            checks.append((f"b: F_{i + 1} = (F_{i} cap S_({n - i}))^sat S", nxt == F[i + 1],
                           "engine elimination and saturation"))

    # (c) the seam inclusion
    if m >= 2 and sys.C:
        low = section_ideal(sys, m)
        high = section_ideal(sys, m - 1).extend(m)
        checks.append(("c: seam inclusion", high.contains_ideal(low),
                       f"(F cap S_({m}))^sat inside ((in F) cap S_({m - 1}))^sat S_({m})"))

    # (d) all inclusions, by normal forms and degreewise up to the bound
    for i in range(n):
        ok = F[i + 1].contains_ideal(F[i])
        h0 = hilbert_function_ideal(F[i], bound).values
        h1 = hilbert_function_ideal(F[i + 1], bound).values
        ok = ok and all(h0[k] <= h1[k] for k in h0)
        checks.append((f"d: F_{i} inside F_{i + 1}", ok, f"checked up to degree {bound}"))

    # (e) X_i^r kills the seam quotient for i < m
    if m >= 2 and sys.C:
        r = seam_exponent(sys)
        if r is None:
            checks.append(("e: radical containment", True, "vacuous: (A u C)_(m-1) is empty"))
        else:
            b = section_ideal(sys, m)
            a_gens = section_ideal(sys, m - 1).extend(m).generators
            ok = True
            for i in range(m - 1):
                xr = Polynomial.monomial(tuple(r if k == i else 0 for k in range(m)))
                ok = ok and all(xr * g in b for g in a_gens)
            checks.append(("e: radical containment", ok,
                           f"X_i^{r} times the seam ideal lies in (F cap S_({m}))^sat, i < {m}"))

    # (f) X_m is a non-zerodivisor on the initial ideal of the top section
    if sys.C:
        init = section_ideal(sys, m).initial_ideal("rlex")
        ok = all(g[m - 1] == 0 for g in init.gens)
        expect = MonomialIdeal(m, {star(a) for a in truncate(sys.A | sys.C, m)})
        checks.append(("f: no initial generator divisible by X_m", ok and init == expect,
                       f"{len(init.gens)} generators"))

    # dimension ladder: h_(F_{i+1}) - h_(F_i) eventually of degree <= i - 1
    counters = [degree_counter(f.initial_ideal("rlex")) for f in F]
    start = max(max((g.degree() for g in f.generators), default=0) for f in F) + n + 3
    for i in range(n):
        delta = (lambda c1, c0: (lambda t: c1(t) - c0(t)))(counters[i + 1], counters[i])
        p = _fit_degree(delta, i - 1, start, window)
        detail = "no fit" if p is None else f"delta polynomial {p}"
        checks.append((f"dim: F_{i + 1}/F_{i} of dimension <= {i}", p is not None, detail))
    return FiltrationReport(checks)


# -- random systems --------------------------------------------------------------------

def random_system(seed: int, n: int = 4, d: int = 3, good: bool | None = None,
                  max_tries: int = 10_000) -> BinomialSystem:
    """A seeded valid binomial system with C nonempty and rho_m(rho) > 0.

    rho has zero sum and small support, C is drawn with C + rho in range, and
    A is the Borel closure of C u (C+rho) with both removed.
    """
    rng = random.Random(f"system/{n}/{d}/{seed}")
    pool = list(monomials_of_degree(n, d))
    for _ in range(max_tries):
        support = rng.sample(range(n), rng.choice([2, 2, 3]) if n >= 3 else 2)
        rho = [0] * n
        for k in support[:-1]:
            rho[k] = rng.choice([-2, -1, 1, 2])
        rho[support[-1]] = -sum(rho)
        if not any(rho):
            continue
        m = last_index(rho)
        if rho[m - 1] < 0:
            rho = [-x for x in rho]
        cands = [c for c in pool if min(add(c, rho)) >= 0]
        if not cands:
            continue
        C = set(rng.sample(cands, min(len(cands), rng.choice([1, 1, 2, 2, 3]))))
        Cs = {add(c, rho) for c in C}
        if C & Cs:
            continue
        A = borel_closure(C | Cs) - C - Cs
        sys = BinomialSystem(n, d, frozenset(A), frozenset(C), tuple(rho))
        if not validate_system(sys).valid:
            continue
        if good is not None and is_good(sys) != good:
            continue
        return sys
    raise RuntimeError("no valid system found; widen the search")


# -- deformation chains ------------------------------------------------------------------

RELATIONS = ("init_rlex", "init_hlex", "gin_rlex", "sat_init_hlex")
_ALIASES = {"sat∘init_hlex": "sat_init_hlex", "sat.init_hlex": "sat_init_hlex"}
_ANNOTATIONS = {"=": "=", "<=": "<=", "≤": "<=", "<": "<"}


@dataclass
class ChainEdge:
    relation: str
    source: str
    target: str
    annotation: str | None = None


@dataclass
class EdgeResult:
    edge: ChainEdge
    ideal_ok: bool
    expected: list
    actual: list
    observed: str  # Hilbert relation h_source ? h_target: "=", "<", ">" or "incomparable"
    hilbert_ok: bool

    @property
    def ok(self) -> bool:
        return self.ideal_ok and self.hilbert_ok


@dataclass
class ChainReport:
    results: list

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def lines(self, names: dict | None = None) -> list[str]:
        out = []
        for r in self.results:
            e = r.edge
            ann = e.annotation or "-"
            out.append(f"{'PASS' if r.ok else 'FAIL'} {e.relation} {e.source} -> {e.target}: "
                       f"ideal {'ok' if r.ideal_ok else 'mismatch'}, "
                       f"hilbert observed {r.observed}, annotated {ann}")
            if not r.ideal_ok:
                out.append("  expected: " + ", ".join(r.expected))
                out.append("  computed: " + ", ".join(r.actual))
        return out


def compare_hilbert(f: dict, g: dict) -> str:
    """'=' , '<' (f <= g, strict somewhere), '>' or 'incomparable'."""
    le = all(f[k] <= g[k] for k in f)
    ge = all(f[k] >= g[k] for k in f)
    if le and ge:
        return "="
    if le:
        return "<"
    if ge:
        return ">"
    return "incomparable"


def _annotation_holds(ann: str, observed: str) -> bool:
    if ann == "=":
        return observed == "="
    if ann == "<=":
        return observed in ("=", "<")
    return observed == "<"


def apply_relation(relation: str, I: Ideal, seed: int = 0) -> MonomialIdeal:
    relation = _ALIASES.get(relation, relation)
    if relation == "init_rlex":
        return I.initial_ideal("rlex")
    if relation == "init_hlex":
        return I.initial_ideal("hlex")
    if relation == "gin_rlex":
        return gin(I, "rlex", seed)
    if relation == "sat_init_hlex":
        return saturate_monomial(I.initial_ideal("hlex"))
    raise UnknownRelation(f"unknown relation {relation!r}; expected one of {RELATIONS}")


def verify_chain(edges: Sequence[ChainEdge], ideals: dict, bound: int = 10, seed: int = 0,
                 names: Sequence[str] | None = None) -> ChainReport:
    """Recompute every edge and compare ideals and Hilbert functions up to bound."""
    from .polyalg import default_names
    results = []
    for e in edges:
        rel = _ALIASES.get(e.relation, e.relation)
        if rel not in RELATIONS:
            raise UnknownRelation(f"unknown relation {e.relation!r}; expected one of {RELATIONS}")
        ann = None
        if e.annotation is not None:
            if e.annotation not in _ANNOTATIONS:
                raise UnknownRelation(f"unknown Hilbert annotation {e.annotation!r}")
            ann = _ANNOTATIONS[e.annotation]
        src, tgt = ideals[e.source], ideals[e.target]
        if src.n != tgt.n:
            raise WidthMismatch(f"{e.source} and {e.target} live in different rings")
        nm = list(names) if names is not None else default_names(src.n)
        computed = apply_relation(rel, src, seed)
        target_ideal = tgt
        ideal_ok = Ideal.from_monomial(computed) == target_ideal
        hs = hilbert_function_ideal(src, bound).values
        ht = hilbert_function_ideal(target_ideal, bound).values
        observed = compare_hilbert(hs, ht)
        if ann is None:
            ann_eff = "<=" if rel == "sat_init_hlex" else "="
        else:
            ann_eff = ann
        expected = [g.to_str(nm) for g in target_ideal.groebner("rlex")]
        actual = [Polynomial.monomial(a).to_str(nm) for a in computed.sorted_gens()]
        results.append(EdgeResult(e, ideal_ok, expected, actual, observed,
                                  _annotation_holds(ann_eff, observed)))
    return ChainReport(results)


def quotient_hilbert(I: Ideal, bound: int) -> dict:
    """Hilbert function of S/I up to bound."""
    h = hilbert_function_ideal(I, bound).values
    return {k: comb(k + I.n - 1, I.n - 1) - v for k, v in h.items()}

