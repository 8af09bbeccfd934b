from itertools import product

import pytest

from borel_forge import reference as R
from borel_forge.combinat import borel_ge, enumerate_U, monomials_of_degree
from borel_forge.errors import HypothesisViolated
from borel_forge.generic import (alpha, check_shift_hypothesis, coefficient, gin, gin_certified,
                                 mu, p_rho, phi_expand, shift_matrix, verify_alpha_shift,
                                 y_count, y_index, y_names)
from borel_forge.monomial import (MonomialIdeal, hilbert_function, is_borel_ideal,
                                  saturate_monomial)
from borel_forge.polyalg import Ideal, Polynomial, hilbert_function_ideal, saturate
from borel_forge.sampling import random_borel_ideal, random_ideal


def y(n, i, j):
    """Y_ij (1-based) as a polynomial in T[X]."""
    return Polynomial.variable(y_count(n) + n, y_index(n, i - 1, j - 1))


def x(n, i):
    return Polynomial.variable(y_count(n) + n, y_count(n) + i - 1)


def test_y_block_layout():
    assert y_count(3) == 6
    assert y_names(3) == ["Y11", "Y12", "Y13", "Y22", "Y23", "Y33"]
    assert [y_index(3, i, j) for i, j in ((0, 0), (0, 2), (1, 1), (2, 2))] == [0, 2, 3, 5]


def test_phi_expand_examples():
    n = 2
    assert phi_expand((0, 1)) == y(n, 1, 2) * x(n, 1) + y(n, 2, 2) * x(n, 2)
    want = (y(n, 1, 2) * x(n, 1) + y(n, 2, 2) * x(n, 2)) ** 2
    assert phi_expand((0, 2)) == want
    got = coefficient(phi_expand((0, 2)), (1, 1))
    assert got == (y(n, 1, 2) * y(n, 2, 2) * 2).project(range(y_count(n)))


def test_diagonal_coefficient_is_y_power():
    for b in monomials_of_degree(3, 3):
        want = Polynomial.constant(y_count(3), 1)
        for i, e in enumerate(b, start=1):
            want = want * Polynomial.variable(y_count(3), y_index(3, i - 1, i - 1)) ** e
        assert coefficient(phi_expand(b), b) == want
        assert alpha(b, b) == want


def test_alpha_vanishes_off_borel_order():
    for a, b in product(list(monomials_of_degree(3, 2)), repeat=2):
        assert bool(alpha(a, b)) == borel_ge(a, b)


def test_alpha_counterexample_pair():
    n = 5
    want = y(n, 2, 2) ** 2 * y(n, 4, 4) ** 2 * y(n, 4, 5)
    got = alpha(R.CE_B, R.CE_C)
    assert got == coefficient(phi_expand(R.CE_C), R.CE_B)
    assert got == want.project(range(y_count(n)))


def test_mu_values():
    assert mu(((2, 0, 0), (0, 1, 0), (0, 0, 3))) == 1
    M = enumerate_U(R.CE_B, R.CE_C)[0]
    assert mu(M) == 1
    assert mu(shift_matrix(M, R.CE_RHO)) == 2
    # column (1, 1) contributes the multinomial 2!/(1!1!)
    assert mu(((1, 1), (0, 1))) == 2


def test_p_rho_examples():
    assert p_rho((0, 1, 2), (0, 2, 1), (1, -1, 0)).is_zero()
    # the prefix condition covers every index below m(rho), here both 1 and 2
    with pytest.raises(HypothesisViolated):
        p_rho((0, 2, 1), (0, 1, 2), (1, 0, -1))
    with pytest.raises(HypothesisViolated):
        p_rho((1, 1, 1), (1, 0, 2), (0, 1, -1))
    b, c, rho = (0, 2, 1), (0, 1, 2), (1, -1, 0)
    P = p_rho(b, c, rho)
    assert not P.is_zero()
    rep = verify_alpha_shift(b, c, rho)
    assert rep["p"] == P and rep["equal_low"] and rep["equal_high"]
    # b = c gives the single diagonal matrix, shifted down by rho^- on the diagonal
    P = p_rho((1, 1, 1), (1, 1, 1), (0, 1, -1))
    assert P == y(3, 1, 1).project(range(6)) * y(3, 2, 2).project(range(6))


def test_p_rho_oracle_by_enumeration():
    b, c, rho = (0, 2, 1), (0, 1, 2), (1, -1, 0)
    k = y_count(3)
    total = Polynomial(k)
    for M in enumerate_U(b, c):
        term = Polynomial.constant(k, mu(M))
        for i in range(3):
            for j in range(i, 3):
                e = M[i][j] - (max(-rho[i], 0) if i == j else 0)
                term = term * Polynomial.variable(k, y_index(3, i, j)) ** e
        total = total + term
    assert p_rho(b, c, rho) == total


def test_shift_trivial_and_counterexample():
    rep = verify_alpha_shift((1, 1, 1), (1, 1, 1), (0, 0, 0))
    assert rep["equal_low"] and rep["equal_high"]
    assert check_shift_hypothesis(R.CE_B, R.CE_C, R.CE_RHO)
    with pytest.raises(HypothesisViolated):
        verify_alpha_shift(R.CE_B, R.CE_C, R.CE_RHO)
    rep = verify_alpha_shift(R.CE_B, R.CE_C, R.CE_RHO, force=True)
    assert rep["equal_low"] and not rep["equal_high"]
    assert rep["lhs_high"] == rep["rhs_high"] * 2


def test_shift_maps_matrix_sets_bijectively():
    # M in U(b,c) iff M + rho in U(b+rho, c+rho), by enumeration
    pool = list(monomials_of_degree(3, 3))
    for rho in ((1, -1, 0), (0, 1, -1), (1, 0, -1), (-1, 2, -1)):
        for b, c in product(pool, repeat=2):
            if check_shift_hypothesis(b, c, rho):
                continue
            br = tuple(u + r for u, r in zip(b, rho))
            cr = tuple(u + r for u, r in zip(c, rho))
            shifted = {shift_matrix(M, rho) for M in enumerate_U(b, c)}
            assert shifted == {tuple(map(tuple, M)) for M in enumerate_U(br, cr)}


def test_gin_examples():
    c = R.ideal(R.EX1_C)
    assert gin(c, "rlex", 3) == R.monomial_ideal(R.EX1_B)
    B = random_borel_ideal(2)
    assert gin(Ideal.from_monomial(B), "rlex") == B
    res = gin_certified(c, "rlex", seed=5)
    assert res.seed == 5 and res.draws >= 2


def test_gin_of_non_borel_monomial_ideal_moves():
    I = Ideal.from_monomial(MonomialIdeal(4, [(0, 0, 0, 1)]))
    assert gin(I, "rlex") == MonomialIdeal(4, [(1, 0, 0, 0)])


@pytest.mark.parametrize("seed", range(10))
def test_gin_properties(seed):
    I = random_ideal(seed)
    for order in ("rlex", "hlex"):
        G = gin(I, order, seed)
        assert is_borel_ideal(G)
        assert hilbert_function(G, 10).values == hilbert_function_ideal(I, 10).values
    assert gin(saturate(I, seed), "rlex", seed) == saturate_monomial(gin(I, "rlex", seed))


def test_gin_is_seed_independent():
    I = random_ideal(4)
    assert len({gin(I, "rlex", s) for s in range(4)}) == 1
