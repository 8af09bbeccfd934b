"""The filtration F_0 in F_1 in ... in F_n of a binomial ideal, with its checks.

Run with ``python3 demos/filtration.py [seed]``; without a seed the
four-variable reference system is used.
"""

import sys

from borel_forge import reference as R
from borel_forge.binomial import check_filtration, filtration, random_system
from borel_forge.io import emit_system

system = random_system(int(sys.argv[1])) if len(sys.argv) > 1 else R.example2_system()
print(emit_system(system))
for line in filtration(system).lines():
    print(line)
print()
report = check_filtration(system)
for line in report.lines():
    print(line)
print("\nall checks pass" if report.ok else "\nsome checks FAIL")
