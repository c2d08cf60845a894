# Rough objects of a small cover, step by step.
#
# Run from the repository root:  python3 demos/quotient_walkthrough.py

import numpy as np

from acrough import (GranularOperatorSpace, build_quotient, check_admissibility,
                     check_space_axioms)

# A cover of four points. Granules overlap on 2.
space = GranularOperatorSpace.from_granules("1234", [["1", "2"], ["2", "3"], ["4"]])

# Approximations of a few subsets.
for names in (["1"], ["1", "2"], ["1", "2", "3"], ["2", "4"]):
    a = space.subset(names)
    print(space.fmt(a), "lower", space.fmt(space.lower(a)), "upper", space.fmt(space.upper(a)))

for rep in (check_space_axioms(space), check_admissibility(space)):
    print(rep.title, {c.name: c.ok for c in rep.checks})

# Subsets with the same (lower, upper) pair collapse into one rough object.
q = build_quotient(space)
print(len(q.objects), "rough objects from", 1 << space.n, "subsets")
for i, o in enumerate(q.objects):
    print(i, q.label(i), "members:", [space.fmt(m) for m in o.members])

# The order is componentwise inclusion; row i marks everything above object i.
print(np.asarray(q.leq, dtype=int))
