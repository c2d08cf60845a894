# Congruences versus compatible deductive systems on small algebras, then the
# ternary-term checks on the AC-algebra of E0.

from acrough import ACAlgebra, check_correspondence, check_ternary_term_theorems, congruences
from acrough import fixtures
from acrough.deduction import (BOOLEAN_DIFFERENCE, GROUP_DIFFERENCE, boolean_algebra,
                               cyclic_group, identity_term)

for name, alg, tau in (("Z3", cyclic_group(3), GROUP_DIFFERENCE),
                       ("B4", boolean_algebra(2), BOOLEAN_DIFFERENCE)):
    print(name, "difference term", tau)
    for c in congruences(alg):
        print("  congruence", c.labels())
    rep = check_correspondence(alg, identity_term(), [tau])
    print("  ", {c.name: c.ok for c in rep.checks}, rep["converse"].detail)

# A term table is just a numpy array indexed by the parameters.
z3 = cyclic_group(3)
print(GROUP_DIFFERENCE.table(z3)[:, :, 0])

# On E0 the meet term passes and the box term fails with a concrete witness.
rep = check_ternary_term_theorems(ACAlgebra.from_space(fixtures.e0()))
for c in rep.checks:
    print("ok  " if c.ok else "FAIL", c.name, "" if c.ok else c.witness)
