"""Walk through the four ideals c, d, b, l^f, l^q and the maps between them.

Run with ``python3 demos/degenerations.py``.
"""

from borel_forge import reference as R
from borel_forge.generic import gin_certified
from borel_forge.io import emit_ideal, emit_monomial_ideal
from borel_forge.monomial import hilbert_function, hilbert_polynomial, saturate_monomial
from borel_forge.polyalg import weight_degeneration

NAMES = ["x", "y", "z", "t"]

c, d = R.ideal(R.EX1_C), R.ideal(R.EX1_D)
print("c =")
print(emit_ideal(c, NAMES))

# c is its own rlex basis; under hlex the basis picks up y^3 and y^2*z
for order in ("rlex", "hlex"):
    print(f"init_{order}(c):")
    print(emit_monomial_ideal(c.initial_ideal(order), NAMES))

res = gin_certified(c, "rlex", seed=42)
print(f"gin_rlex(c), certified with {res.draws} draws:")
print(emit_monomial_ideal(res.ideal, NAMES))

lf = d.initial_ideal("rlex")
lq = saturate_monomial(d.initial_ideal("hlex"))
print("init_rlex(d) = l^f:")
print(emit_monomial_ideal(lf, NAMES))
print("saturated init_hlex(d) = l^q:")
print(emit_monomial_ideal(lq, NAMES))

print("Hilbert polynomial of l^f:", hilbert_polynomial(lf))
print("Hilbert polynomial of l^q:", hilbert_polynomial(lq))
hf, hq = hilbert_function(lf, 10).values, hilbert_function(lq, 10).values
print("degree  h(l^f)  h(l^q)")
for k in range(11):
    mark = "  <" if hf[k] < hq[k] else ""
    print(f"{k:6d}  {hf[k]:6d}  {hq[k]:6d}{mark}")

# a one-parameter family joining c (z = 1) to its rlex initial ideal (z = 0)
fam = weight_degeneration(c, "rlex", t_samples=(0, 1, 2))
print("\nweight vector:", fam.weight)
print("family generators in K[x,y,z,t,s]:")
for g in fam.generators:
    print("  ", g.to_str(NAMES + ["s"]))
print("fiber checks:", fam.verify(10))
