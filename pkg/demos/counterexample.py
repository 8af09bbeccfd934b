"""A valid binomial system that is not good, where gin and init differ.

Run with ``python3 demos/counterexample.py``.  Takes well under a minute.
"""

from borel_forge import reference as R
from borel_forge.binomial import ideal_of, is_good, validate_system
from borel_forge.combinat import enumerate_U
from borel_forge.generic import gin_certified, mu, shift_matrix, verify_alpha_shift, y_names
from borel_forge.io import format_monomial

NAMES = ["x", "y", "z", "t", "u"]

sys = R.counterexample_system()
print(f"|A| = {len(sys.A)}, C = {sorted(sys.C)}, rho = {sys.rho}")
print("valid:", validate_system(sys).valid, " good:", is_good(sys))

F = ideal_of(sys)
init = F.initial_ideal("rlex")
res = gin_certified(F, "rlex", seed=42)
print(f"init_rlex F has {len(init.gens)} generators, gin_rlex F has {len(res.ideal.gens)}")
print("only in gin: ", [format_monomial(a, NAMES) for a in res.ideal.gens - init.gens])
print("only in init:", [format_monomial(a, NAMES) for a in init.gens - res.ideal.gens])

# why: the unique matrix in U(b,c) changes its multinomial weight under the shift
(M,) = enumerate_U(R.CE_B, R.CE_C)
print("\nM =")
for row in M:
    print("  ", row)
print("mu_M =", mu(M), " mu_(M+rho) =", mu(shift_matrix(M, R.CE_RHO)))

rep = verify_alpha_shift(R.CE_B, R.CE_C, R.CE_RHO, force=True)
yn = y_names(5)
print("p =", rep["p"].to_str(yn))
print("low identity holds: ", rep["equal_low"])
print("high identity holds:", rep["equal_high"], "(off by the factor",
      "2)" if rep["lhs_high"] == rep["rhs_high"] * 2 else "?)")
