# The AC-algebra of E1: maximal antichains of rough objects, with the two
# groupoid operations and the modal pair.

import numpy as np

from acrough import (ACAlgebra, COMPLEMENT_KINDS, check_groupoid_theorem,
                     check_modal_theorem, find_delta_nonimplication, is_distributive)
from acrough import fixtures

A = ACAlgebra.from_space(fixtures.e1())
print(len(A.quotient.objects), "rough objects,", len(A), "maximal antichains")
print("bottom", A.label(A.zero), " top", A.label(A.one))

# Not distributive: the report carries a witness triple.
d = is_distributive(A.lattice)
print("distributive:", d.ok, d.witness)

# delta and rho are full tables over the carrier.
print("delta\n", np.asarray(A.delta_table))
print("rho\n", np.asarray(A.rho_table))
print(check_groupoid_theorem(A).ok, [c.name for c in check_groupoid_theorem(A).checks])

# delta need not be implicative in the lattice sense.
print("a <= b, a <= c, a not <= delta(b, c):", find_delta_nonimplication(A))

# box sits below the identity and diamond above it.
print("box    ", list(A.box_table))
print("diamond", list(A.diamond_table))
print({c.name: c.ok for c in check_modal_theorem(A).checks})

# Complements of the bottom antichain, partial and totalised.
for kind in COMPLEMENT_KINDS:
    total = A.complement_total(A.carrier[A.zero], kind)
    print(kind, "partial", A.complement_partial(A.zero, kind), "total", A.label(total))
