# Small spaces where expected laws break. Each is checked independently by
# the brute-force oracles in tests/.

from acrough import (ACAlgebra, GranularOperatorSpace, check_admissibility,
                     check_modal_theorem, is_distributive)
from acrough import fixtures

# 1. The AC lattice of E1 is not distributive.
print("E1 distributive:", is_distributive(ACAlgebra.from_space(fixtures.e1()).lattice).witness)

# 2. Diamond is not monotone on this cover of five points.
cover = GranularOperatorSpace.from_granules(
    "12345", [["2"], ["3"], ["1", "4"], ["2", "4"], ["5"]])
adm = check_admissibility(cover)
print("admissibility:", {c.name: c.ok for c in adm.checks})
A = ACAlgebra.from_space(cover)
print(len(A), "antichains")
for c in check_modal_theorem(A).checks:
    if not c.ok:
        a, b = c.witness[:2]
        print(c.name, "fails at", A.label(a), "<=", A.label(b))
