"""Bundled verification suites for the three worked examples and random properties."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import reference as R
from .binomial import (ChainEdge, check_filtration, ideal_of, is_good, random_system,
                       validate_system, verify_chain)
from .combinat import (borel_ge, borel_witness, enumerate_U, in_U,
                       monomials_of_degree)
from .config import WorkspaceConfig
from .errors import NotBorelComparable
from .generic import (alpha, coefficient, gin, gin_certified, mu, phi_expand, shift_matrix,
                      verify_alpha_shift, y_names)
from .io import format_monomial
from .monomial import (MonomialIdeal, hilbert_function, hilbert_polynomial, is_borel_ideal,
                       saturate_monomial)
from .polyalg import (Ideal, apply_change, colon_var_power, default_names, is_groebner,
                      hilbert_function_ideal, random_unipotent, saturate)
from .sampling import random_borel_ideal, random_ideal


@dataclass
class VerificationReport:
    suite: str
    checks: list = field(default_factory=list)  # (id, status, expected, actual)

    def add(self, check_id: str, passed: bool, expected="", actual=""):
        self.checks.append((check_id, "PASS" if passed else "FAIL", str(expected), str(actual)))

    @property
    def exit_status(self) -> int:
        return 0 if all(s == "PASS" for _, s, _, _ in self.checks) else 1

    def lines(self) -> list[str]:
        out = []
        for cid, status, expected, actual in self.checks:
            if status == "PASS":
                out.append(f"PASS {cid}")
            else:
                out.append(f"FAIL {cid}: expected {expected}; got {actual}")
        passed = sum(1 for c in self.checks if c[1] == "PASS")
        out.append(f"{self.suite}: {passed}/{len(self.checks)} checks passed")
        return out


def _mono_str(I: MonomialIdeal, names=None) -> str:
    names = names or default_names(I.n)
    return "(" + ", ".join(format_monomial(a, names) for a in I.sorted_gens()) + ")"


def example1(cfg: WorkspaceConfig = WorkspaceConfig()) -> VerificationReport:
    rep = VerificationReport("example1")
    c, d = R.ideal(R.EX1_C), R.ideal(R.EX1_D)
    b, lf, lq = (R.monomial_ideal(s) for s in (R.EX1_B, R.EX1_LF, R.EX1_LQ))
    got = c.initial_ideal("rlex")
    rep.add("init_rlex(c) = b", got == b, _mono_str(b), _mono_str(got))
    got = c.initial_ideal("hlex")
    rep.add("init_hlex(c) = l^f", got == lf, _mono_str(lf), _mono_str(got))
    got = gin(c, "rlex", cfg.seed, cfg.entropy_bound, cfg.retries, cfg.spair_budget)
    rep.add("gin_rlex(c) = init_rlex(c)", got == b, _mono_str(b), _mono_str(got))
    got = d.initial_ideal("rlex")
    rep.add("init_rlex(d) = l^f", got == lf, _mono_str(lf), _mono_str(got))
    got = saturate_monomial(d.initial_ideal("hlex"))
    rep.add("sat(init_hlex(d)) = l^q", got == lq, _mono_str(lq), _mono_str(got))
    got = saturate(Ideal.from_monomial(d.initial_ideal("hlex")), cfg.seed).to_monomial()
    rep.add("engine sat(init_hlex(d)) = l^q", got == lq, _mono_str(lq), _mono_str(got))
    for name, I in (("l^q", lq), ("l^f", lf)):
        p = str(hilbert_polynomial(I))
        rep.add(f"Hilbert polynomial of {name}", p == R.EX1_HILBERT_POLY, R.EX1_HILBERT_POLY, p)
    hf, hq = hilbert_function(lf, 10).values, hilbert_function(lq, 10).values
    strict = all(hf[k] <= hq[k] for k in hf) and any(hf[k] < hq[k] for k in hf)
    rep.add("h(l^f) < h(l^q) up to degree 10", strict, "pointwise <= and < somewhere",
            f"{hf} vs {hq}")
    ideals = {"c": c, "d": d, "b": Ideal.from_monomial(b), "lf": Ideal.from_monomial(lf),
              "lq": Ideal.from_monomial(lq)}
    edges = [ChainEdge("init_rlex", "c", "b", "="), ChainEdge("init_hlex", "c", "lf", "="),
             ChainEdge("init_rlex", "d", "lf", "="), ChainEdge("sat∘init_hlex", "d", "lq", "<"),
             ChainEdge("sat∘init_hlex", "d", "lq", "≤"), ChainEdge("gin_rlex", "c", "b", "=")]
    chain = verify_chain(edges, ideals, 10, cfg.seed)
    for r in chain.results:
        e = r.edge
        rep.add(f"chain {e.relation} {e.source}->{e.target} [{e.annotation}]", r.ok,
                f"ideal match, hilbert {e.annotation}", f"observed {r.observed}")
    return rep


def example2(cfg: WorkspaceConfig = WorkspaceConfig()) -> VerificationReport:
    rep = VerificationReport("example2")
    sys = R.example2_system()
    rep.add("system is valid", validate_system(sys).valid)
    rep.add("system is good", is_good(sys))
    F = ideal_of(sys)
    printed = R.polys(R.EX2_F, 4)
    rep.add("ideal_of gives the 11 printed generators",
            len(F.generators) == 11 and set(F.generators) == set(printed),
            R.EX2_F, ", ".join(str(f) for f in F.generators))
    rep.add("printed generators form an rlex Groebner basis", is_groebner(printed, "rlex"))
    c = R.ideal(R.EX2_SAT)
    sat = saturate(F, cfg.seed)
    rep.add("saturation = (y^2 - x*z, x^2, x*y, x*z^2)", sat == c, R.EX2_SAT,
            ", ".join(str(g) for g in sat.groebner("rlex")))
    col = colon_var_power(F, 3, method="colon")
    rep.add("(F : t^infinity) by iterated colons = c", col == c)
    filt = check_filtration(sys, 12)
    for claim, passed, detail in filt.checks:
        rep.add(f"filtration {claim}", passed, "pass", detail)
    return rep


def counterexample(cfg: WorkspaceConfig = WorkspaceConfig()) -> VerificationReport:
    rep = VerificationReport("counterexample")
    n = 5
    names = default_names(n)
    sys = R.counterexample_system()
    rep.add("system is valid", validate_system(sys).valid)
    rep.add("|A| = 69", len(sys.A) == 69, 69, len(sys.A))
    rep.add("system is not good", not is_good(sys))
    F = ideal_of(sys)
    init_ref = R.monomial_ideal(R.CE_INIT, n)
    gin_ref = R.monomial_ideal(R.CE_GIN, n)
    got_init = F.initial_ideal("rlex")
    rep.add("init_rlex F = printed list", got_init == init_ref,
            _mono_str(init_ref, names), _mono_str(got_init, names))
    res = gin_certified(F, "rlex", cfg.seed, cfg.entropy_bound, cfg.retries, cfg.spair_budget)
    rep.add("gin_rlex F = printed list (certified)", res.ideal == gin_ref,
            _mono_str(gin_ref, names), _mono_str(res.ideal, names))
    only_gin = res.ideal.gens - got_init.gens
    only_init = got_init.gens - res.ideal.gens
    want_gin = {R.monomial_list(R.CE_ONLY_GIN, n)[0]}
    want_init = {R.monomial_list(R.CE_ONLY_INIT, n)[0]}
    rep.add("symmetric difference", only_gin == want_gin and only_init == want_init,
            f"{R.CE_ONLY_GIN} / {R.CE_ONLY_INIT}",
            f"{sorted(only_gin)} / {sorted(only_init)}")
    Us = enumerate_U(R.CE_B, R.CE_C, cfg.enum_budget)
    rep.add("U(b,c) has exactly one element", len(Us) == 1, 1, len(Us))
    if len(Us) == 1:
        M = Us[0]
        rep.add("mu_M = 1", mu(M) == 1, 1, mu(M))
        shifted = mu(shift_matrix(M, R.CE_RHO))
        rep.add("mu_(M+rho) = 2", shifted == 2, 2, shifted)
    shift = verify_alpha_shift(R.CE_B, R.CE_C, R.CE_RHO, force=True, budget=cfg.enum_budget)
    yn = y_names(n)
    rep.add("alpha^c_b = p Y^(rho^-)", shift["equal_low"], shift["rhs_low"].to_str(yn),
            shift["lhs_low"].to_str(yn))
    rep.add("alpha^(c+rho)_(b+rho) = 2 p Y^(rho^+)",
            shift["lhs_high"] == shift["rhs_high"] * 2,
            (shift["rhs_high"] * 2).to_str(yn), shift["lhs_high"].to_str(yn))
    return rep


def properties(cfg: WorkspaceConfig = WorkspaceConfig(), rounds: int = 3) -> VerificationReport:
    """Seed-parameterized random checks; every one must pass for every seed."""
    seed = cfg.seed
    rep = VerificationReport(f"properties (seed {seed})")
    rng = random.Random(f"properties/{seed}")

    # Borel order: prefix sums, U(a,b) and the witness agree
    pool = list(monomials_of_degree(4, 4))
    ok = True
    for _ in range(60):
        a, b = rng.choice(pool), rng.choice(pool)
        ge = borel_ge(a, b)
        nonempty = bool(enumerate_U(a, b, cfg.enum_budget))
        try:
            W = borel_witness(a, b)
            built = in_U(W, a, b)
        except NotBorelComparable:
            built = False
        ok = ok and ge == nonempty == built
    rep.add("borel order: prefix sums, U(a,b) and witness agree", ok)

    # alpha against brute-force expansion
    pool3 = list(monomials_of_degree(3, 3))
    ok = True
    for _ in range(20):
        a, b = rng.choice(pool3), rng.choice(pool3)
        A = alpha(a, b)
        ok = ok and A == coefficient(phi_expand(b), a) and bool(A) == borel_ge(a, b)
    rep.add("alpha equals the coefficient in phi(X^b)", ok)

    for k in range(rounds):
        s = rng.randrange(1 << 30)
        I = random_ideal(s)
        h = hilbert_function_ideal(I, 10).values
        for order in ("rlex", "hlex"):
            hi = hilbert_function(I.initial_ideal(order), 10).values
            rep.add(f"ideal {s}: h_I = h_init_{order}", hi == h)
        S = saturate(I, seed)
        rep.add(f"ideal {s}: saturation contains I and is idempotent",
                S.contains_ideal(I) and saturate(S, seed) == S)
        G = gin(I, "rlex", seed, cfg.entropy_bound, cfg.retries, cfg.spair_budget)
        rep.add(f"ideal {s}: gin is Borel with h_gin = h_I",
                is_borel_ideal(G) and hilbert_function(G, 10).values == h)
        rep.add(f"ideal {s}: gin(sat) = sat(gin)",
                gin(S, "rlex", seed, cfg.entropy_bound, cfg.retries, cfg.spair_budget)
                == saturate_monomial(G))
        B = random_borel_ideal(s)
        rep.add(f"borel ideal {s}: gin is the identity",
                gin(Ideal.from_monomial(B), "rlex", seed) == B)
        sys = random_system(s, good=True)
        F = ideal_of(sys)
        g = random_unipotent(4, seed, k, cfg.entropy_bound)
        rep.add(f"good system {s}: unipotent change fixes F", apply_change(g, F) == F)
        rep.add(f"good system {s}: gin = init (rlex, hlex)",
                all(gin(F, o, seed) == F.initial_ideal(o) for o in ("rlex", "hlex")))
        rep.add(f"good system {s}: filtration checks", check_filtration(sys, 10).ok)
    return rep


SUITES: dict[str, Callable[[WorkspaceConfig], VerificationReport]] = {
    "example1": example1,
    "example2": example2,
    "counterexample": counterexample,
    "properties": properties,
}
