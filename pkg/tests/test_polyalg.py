from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from borel_forge import reference as R
from borel_forge.errors import BudgetExceeded, CertificateMismatch
from borel_forge.monomial import MonomialIdeal, hilbert_function
from borel_forge.polyalg import (Ideal, Polynomial, UnipotentChange, apply_change, certify,
                                 colon_var_power, default_names, eliminate, groebner,
                                 groebner_basis, hilbert_function_ideal, ideal_intersection,
                                 is_groebner, is_reduced, is_saturated, normal_form,
                                 random_unipotent, saturate, spoly, weight_degeneration)
from borel_forge.sampling import random_borel_ideal, random_ideal

SYMS = sympy.symbols("x y z t")
SYMPY_ORDER = {"rlex": "grevlex", "hlex": "grlex"}


def to_sympy(f: Polynomial):
    return sum(sympy.Rational(c.numerator, c.denominator) * sympy.Mul(
        *[s ** e for s, e in zip(SYMS[:f.n], a)]) for a, c in f.terms.items())


def sympy_basis(I: Ideal, order: str) -> set:
    G = sympy.groebner([to_sympy(g) for g in I.generators], *SYMS[:I.n],
                       order=SYMPY_ORDER[order], domain=sympy.QQ)
    return set(G.exprs)  # already reduced and monic for the chosen order


def p(text, n=4):
    return R.polys(text, n)[0]


def test_polynomial_arithmetic():
    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    f = (x + y) ** 3
    assert f.terms == {(3, 0): 1, (2, 1): 3, (1, 2): 3, (0, 3): 1}
    assert (f - f).is_zero()
    assert (x * Fraction(1, 2) + x * Fraction(1, 2)) == x
    assert Polynomial.binomial((1, 1), (2, 0)) == x * y - x * x


def test_normal_form_examples():
    c = R.ideal(R.EX1_C)
    G = c.groebner("rlex")
    for g in c.generators:
        assert normal_form(g * p("x*t - y^2"), G, "rlex").is_zero()
    f = p("y^2 - x*z")
    assert normal_form(f, [p("x^2"), p("x*y")], "rlex") == f
    printed = R.polys(R.EX2_F, 4)
    for i, f in enumerate(printed):
        for g in printed[i + 1:]:
            assert normal_form(spoly(f, g, "rlex"), printed, "rlex").is_zero()


def test_groebner_examples():
    mono = Ideal.from_monomial(MonomialIdeal(4, [(2, 0, 0, 0), (1, 1, 0, 0), (3, 0, 0, 0)]))
    assert set(groebner(mono)) == {p("x^2"), p("x*y")}
    c, d = R.ideal(R.EX1_C), R.ideal(R.EX1_D)
    assert c.initial_ideal("rlex") == R.monomial_ideal(R.EX1_B)
    assert d.initial_ideal("rlex") == R.monomial_ideal(R.EX1_LF)
    assert c.initial_ideal("hlex") == R.monomial_ideal(R.EX1_LF)
    assert is_reduced(c.groebner("rlex"), "rlex")


def test_initial_of_monomial_ideal_is_itself():
    I = R.monomial_ideal(R.EX1_LQ)
    for order in ("rlex", "hlex"):
        assert Ideal.from_monomial(I).initial_ideal(order) == I


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize("order", ["rlex", "hlex"])
def test_groebner_matches_sympy(seed, order):
    I = random_ideal(seed)
    G = groebner(I, order)
    assert is_groebner(G, order) and is_reduced(G, order)
    mine = {to_sympy(g) for g in G}
    assert {sympy.expand(e) for e in mine} == {sympy.expand(e) for e in sympy_basis(I, order)}


def test_is_groebner_rejects_non_bases():
    c = R.ideal(R.EX1_C)
    assert is_groebner(c.generators, "rlex")
    assert not is_groebner(c.generators, "hlex")
    d = R.ideal(R.EX1_D)
    # the leads of d already generate init_rlex(d)
    assert is_groebner(d.generators, "rlex")
    assert not is_groebner(d.generators, "hlex")


@pytest.mark.parametrize("seed", range(8))
def test_is_groebner_agrees_with_full_pair_check(seed):
    I = random_ideal(seed)
    gens = I.generators + [f * g for f in I.generators for g in I.generators][:3]
    # compare the criterion-based test with a check that reduces every S-pair
    full = all(normal_form(spoly(f, g, "rlex"), gens, "rlex").is_zero()
               for k, f in enumerate(gens) for g in gens[k + 1:])
    assert is_groebner(gens, "rlex") == full


def test_budget_exceeded():
    d = R.ideal(R.EX1_D)
    with pytest.raises(BudgetExceeded):
        groebner_basis(d.generators, "hlex", budget=1)


def test_hilbert_function_ideal_examples():
    c = R.ideal(R.EX1_C)
    assert hilbert_function_ideal(c, 10).values == \
        hilbert_function(R.monomial_ideal(R.EX1_B), 10).values
    assert set(hilbert_function_ideal(Ideal(4), 5).values.values()) == {0}


def test_colon_var_power_examples():
    F = R.ideal(R.EX2_F)
    c = R.ideal(R.EX2_SAT)
    assert colon_var_power(F, 3) == c
    assert colon_var_power(F, 3, method="colon") == c
    assert colon_var_power(c, 3) == c
    mono = MonomialIdeal(4, [(1, 0, 0, 2), (0, 1, 1, 1), (0, 0, 3, 0)])
    assert colon_var_power(Ideal.from_monomial(mono), 3).to_monomial() == mono.colon_var_power(3)


@pytest.mark.parametrize("seed", range(6))
def test_colon_methods_agree(seed):
    I = random_ideal(seed)
    for j in range(4):
        assert colon_var_power(I, j) == colon_var_power(I, j, method="colon")


def test_saturate_examples():
    d = R.ideal(R.EX1_D)
    lq = Ideal.from_monomial(R.monomial_ideal(R.EX1_LQ))
    assert saturate(Ideal.from_monomial(d.initial_ideal("hlex"))) == lq
    assert saturate(lq) == lq
    F = R.ideal(R.EX2_F)
    assert saturate(F) == colon_var_power(F, 3) == R.ideal(R.EX2_SAT)


@pytest.mark.parametrize("seed", range(8))
def test_saturation_properties(seed):
    I = random_ideal(seed)
    S = saturate(I, seed)
    assert S.contains_ideal(I)
    assert saturate(S, seed) == S
    assert is_saturated(S)
    # S/I has finite length: the Hilbert functions agree in high degree
    hI, hS = hilbert_function_ideal(I, 16).values, hilbert_function_ideal(S, 16).values
    assert hI[16] == hS[16]


def test_intersection_examples():
    c = R.ideal(R.EX1_C)
    assert ideal_intersection(c, c) == c
    x, y = Ideal(4, [p("x")]), Ideal(4, [p("y")])
    assert ideal_intersection(x, y) == Ideal(4, [p("x*y")])
    A = MonomialIdeal(4, [(2, 0, 0, 0), (0, 1, 1, 0)])
    B = MonomialIdeal(4, [(1, 1, 0, 0), (0, 0, 2, 1)])
    got = ideal_intersection(Ideal.from_monomial(A), Ideal.from_monomial(B))
    assert got.to_monomial() == A.intersect(B)


def test_eliminate():
    # the twisted cubic: eliminate the parameters from (x - s^3, y - s^2 u, z - s u^2, w - u^3)
    n = 6
    names = ["x", "y", "z", "w", "s", "u"]
    from borel_forge.io import parse_polynomial
    gens = [parse_polynomial(f, names) for f in
            ("x - s^3", "y - s^2*u", "z - s*u^2", "w - u^3")]
    E = eliminate(Ideal(n, gens), 4)
    cubic = [parse_polynomial(f, ["x", "y", "z", "w"])
             for f in ("x*z - y^2", "y*w - z^2", "x*w - y*z")]
    assert E == Ideal(4, cubic)


def test_unipotent_changes():
    g = random_unipotent(4, seed=1)
    assert all(g.matrix[i][i] == 1 for i in range(4))
    assert all(g.matrix[i][j] == 0 for i in range(4) for j in range(i))
    assert (g @ g.inverse()) == UnipotentChange.identity(4)
    assert random_unipotent(4, 1) == g and random_unipotent(4, 1, draw=1) != g
    c = R.ideal(R.EX1_C)
    assert apply_change(UnipotentChange.identity(4), c) == c
    assert apply_change(g.inverse(), apply_change(g, c)) == c
    with pytest.raises(ValueError):
        UnipotentChange(((1, 0), (1, 1)))


def test_unipotents_fix_borel_and_good_ideals():
    for seed in range(4):
        B = Ideal.from_monomial(random_borel_ideal(seed))
        assert apply_change(random_unipotent(4, seed), B) == B
    ones = UnipotentChange(tuple(tuple(1 if j >= i else 0 for j in range(4)) for i in range(4)))
    F = R.ideal(R.EX2_F)
    assert apply_change(ones, F) == F


def test_certify_votes():
    assert certify(lambda draw: 7) == (7, [7, 7])
    assert certify(lambda draw: [1, 2, 2][draw])[0] == 2
    assert certify(lambda draw: [1, 2, 3, 1][draw])[0] == 1
    with pytest.raises(CertificateMismatch) as err:
        certify(lambda draw: draw, retries=2)
    assert err.value.candidates
    with pytest.raises(CertificateMismatch):
        certify(lambda draw: 5, valid=lambda v: False)


def test_weight_degeneration_examples():
    f = p("y^2 - x*z")
    fam = weight_degeneration(Ideal(4, [f]), "rlex", t_samples=(0, 1, 2))
    assert all(fam.verify(8).values())
    assert fam.fiber(0) == Ideal(4, [p("y^2")])
    mono = Ideal.from_monomial(R.monomial_ideal(R.EX1_LQ))
    fam = weight_degeneration(mono, "rlex", t_samples=(0, 1, 3))
    assert all(fam.fiber(u) == mono for u in (0, 1, 3))
    c = R.ideal(R.EX1_C)
    fam = weight_degeneration(c, "rlex", t_samples=(0, 1, 2))
    assert fam.fiber(0) == Ideal.from_monomial(R.monomial_ideal(R.EX1_B))
    assert all(fam.verify(10).values())
    hc = hilbert_function_ideal(c, 10).values
    assert hilbert_function_ideal(fam.fiber(2), 10).values == hc


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("order", ["rlex", "hlex"])
def test_weight_degeneration_random(seed, order):
    fam = weight_degeneration(random_ideal(seed), order, t_samples=(0, 1, 2))
    assert all(fam.verify(8).values())


def test_parse_and_print_names():
    f = p("3/2*x^2*y - z + 1")
    assert f.to_str(default_names(4)) == "3/2*x^2*y - z + 1"


polys4 = st.lists(st.tuples(st.tuples(*[st.integers(0, 2)] * 3), st.integers(-3, 3)),
                  max_size=4).map(lambda ts: Polynomial(3, {a: c for a, c in ts if c}))


@settings(max_examples=60, deadline=None)
@given(polys4, polys4, polys4)
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)


@settings(max_examples=30, deadline=None)
@given(st.lists(polys4.filter(lambda f: not f.is_zero()), min_size=1, max_size=3))
def test_groebner_generates_same_ideal(gens):
    G = groebner_basis(gens, "rlex", n=3)
    assert is_groebner(G, "rlex")
    for g in gens:
        assert normal_form(g, G, "rlex").is_zero()
    back = Ideal(3, gens)
    for g in G:
        assert g in back
