"""Finite bounded lattices given by an order matrix.

Joins and meets are found by least-upper-bound / greatest-lower-bound
search, so a non-lattice order is reported with the offending pair.
"""

from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import product

import numpy as np

from .poset import Poset, hasse, order_violation
from .report import CheckResult


class NotALattice(ValueError):
    def __init__(self, message, pair=None, bounds=None):
        super().__init__(message)
        self.pair = pair
        self.bounds = bounds


class BoundViolation(NotALattice):
    pass


class ReconstructionMismatch(AssertionError):
    pass


class BoundedLattice:
    """Carrier ``elements`` with order ``leq`` and join/meet index tables."""

    def __init__(self, leq, elements=None, join=None, meet=None, check=True):
        self.leq = np.asarray(leq, dtype=bool)
        self.n = self.leq.shape[0]
        self.elements = list(elements) if elements is not None else list(range(self.n))
        if len(self.elements) != self.n:
            raise ValueError("carrier and order matrix disagree in size")
        if check:
            bad = order_violation(self.leq)
            if bad is not None:
                raise NotALattice(f"not a partial order: {bad}")
        if self.n == 0:
            raise BoundViolation("empty carrier has no bounds")
        self.join = _bound_table(self.leq, upper=True) if join is None else np.asarray(join)
        self.meet = _bound_table(self.leq, upper=False) if meet is None else np.asarray(meet)
        bottoms = np.flatnonzero(self.leq.all(axis=1))
        tops = np.flatnonzero(self.leq.all(axis=0))
        if len(bottoms) != 1 or len(tops) != 1:
            raise BoundViolation("missing 0 or 1")
        self.zero = int(bottoms[0])
        self.one = int(tops[0])

    @classmethod
    def from_poset(cls, poset):
        return cls(poset.leq, poset.labels)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"BoundedLattice(n={self.n})"

    def index(self, element):
        return self.elements.index(element)

    def join_all(self, xs):
        return reduce(lambda a, b: int(self.join[a, b]), xs, self.zero)

    def meet_all(self, xs):
        return reduce(lambda a, b: int(self.meet[a, b]), xs, self.one)

    @cached_property
    def covers(self):
        return hasse(self.leq)

    @cached_property
    def poset(self):
        return Poset(self.leq, self.elements, check=False)

    def up_set(self, x):
        return np.flatnonzero(self.leq[x]).tolist()

    def down_set(self, x):
        return np.flatnonzero(self.leq[:, x]).tolist()

    def sublattice(self, idx):
        """Induced order on ``idx``; joins/meets are recomputed inside it."""
        idx = list(idx)
        return BoundedLattice(self.leq[np.ix_(idx, idx)],
                              [self.elements[i] for i in idx], check=False)


def _bound_table(leq, upper):
    n = leq.shape[0]
    rel = leq if upper else leq.T
    # a least element of a set of bounds has the smallest opposite cone
    cone = rel.sum(axis=0)
    table = np.empty((n, n), dtype=np.int64)
    big = n + 1
    for i in range(n):
        bounds = rel[i][None, :] & rel  # bounds[j]: common bounds of i and j
        has = bounds.any(axis=1)
        best = np.where(bounds, cone[None, :], big).argmin(axis=1)
        ok = has & ~(bounds & ~rel[best]).any(axis=1)
        if not ok.all():
            j = int(np.flatnonzero(~ok)[0])
            kind = "least upper" if upper else "greatest lower"
            found = np.flatnonzero(bounds[j])
            raise NotALattice(f"no {kind} bound for {i}, {j}", pair=(i, j),
                              bounds=_extremal(rel, found) if found.size else [])
        table[i] = best
    return table


def _extremal(rel, bounds):
    sub = rel[np.ix_(bounds, bounds)]
    strict = sub & ~np.eye(len(bounds), dtype=bool)
    return [int(b) for k, b in enumerate(bounds) if not strict[:, k].any()]


def is_distributive(lat):
    """Exhaustive check of ``x & (y | z) == (x & y) | (x & z)``."""
    j, m = lat.join, lat.meet
    n = lat.n
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    lhs = m[x, j[y, z]]
    rhs = j[m[x, y], m[x, z]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        w = tuple(lat.elements[int(i)] for i in bad[0])
        return CheckResult("distributive", False, w)
    return CheckResult("distributive", True)


def check_lattice_laws(lat):
    """Commutativity, associativity, absorption and idempotence of the tables,
    and agreement with the order."""
    j, m, n = lat.join, lat.meet, lat.n
    a = np.arange(n)
    x, y = a[:, None], a[None, :]
    laws = {
        "join-commutative": (j == j.T).all(),
        "meet-commutative": (m == m.T).all(),
        "join-idempotent": (j[a, a] == a).all(),
        "meet-idempotent": (m[a, a] == a).all(),
        "absorption-1": (j[x, m[x, y]] == x).all(),
        "absorption-2": (m[x, j[x, y]] == x).all(),
        "order-join": ((j == y) == lat.leq).all(),
    }
    X, Y, Z = a[:, None, None], a[None, :, None], a[None, None, :]
    laws["join-associative"] = (j[j[X, Y], Z] == j[X, j[Y, Z]]).all()
    laws["meet-associative"] = (m[m[X, Y], Z] == m[X, m[Y, Z]]).all()
    failed = [k for k, v in laws.items() if not v]
    return CheckResult("lattice-laws", not failed, failed or None)


def join_irreducibles(lat):
    """Elements with exactly one lower cover (so 0 is excluded)."""
    lower_covers = lat.covers.sum(axis=0)
    return [i for i in range(lat.n) if lower_covers[i] == 1]


def meet_irreducibles(lat):
    """Elements with exactly one upper cover (so 1 is excluded)."""
    upper_covers = lat.covers.sum(axis=1)
    return [i for i in range(lat.n) if upper_covers[i] == 1]


def irreducible_poset(lat, meet=False):
    idx = meet_irreducibles(lat) if meet else join_irreducibles(lat)
    return lat.poset.subposet(idx)


def lattice_length(lat):
    """Number of edges in a longest chain."""
    order = np.argsort(lat.leq.sum(axis=0), kind="stable")  # by down-set size
    depth = np.zeros(lat.n, dtype=np.int64)
    cov = lat.covers
    for v in order:
        below = np.flatnonzero(cov[:, v])
        if below.size:
            depth[v] = depth[below].max() + 1
    return int(depth.max())


def down_sets(poset):
    """All down-closed subsets of a poset, as bitmasks."""
    n = poset.n
    below = [0] * n
    for i in range(n):
        for k in np.flatnonzero(poset.leq[:, i]):
            below[i] |= 1 << int(k)
    out = []
    for mask in range(1 << n):
        ok = True
        m = mask
        while m:
            low = m & -m
            i = low.bit_length() - 1
            if below[i] & ~mask:
                ok = False
                break
            m &= ~low
        if ok:
            out.append(mask)
    return out


def set_family_lattice(family, labels=None):
    """Lattice of bitmask sets ordered by inclusion."""
    family = sorted(set(family), key=lambda s: (s.bit_count(), s))
    n = len(family)
    leq = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(family):
        for k, b in enumerate(family):
            leq[i, k] = a & ~b == 0
    if labels is None:
        labels = family
    return BoundedLattice(leq, labels, check=False)


def birkhoff_reconstruct(jposet):
    """Lattice of down-sets of a poset ordered by inclusion."""
    return set_family_lattice(down_sets(jposet))


@dataclass(frozen=True)
class IrreducibleData:
    """Join- and meet-irreducibles of a lattice with the relation ``j !<= m``.

    ``relation[a][b]`` is True iff join-irreducible ``a`` is not below
    meet-irreducible ``b``.
    """

    join_irr: tuple
    meet_irr: tuple
    relation: tuple


def irreducible_data(lat):
    J = join_irreducibles(lat)
    W = meet_irreducibles(lat)
    rel = tuple(tuple(not lat.leq[j, m] for m in W) for j in J)
    return IrreducibleData(tuple(J), tuple(W), rel)


def irreducible_reconstruct(z):
    """Rebuild a lattice from its irreducibles.

    For each join-irreducible collect the meet-irreducibles it is not below;
    close the family under union, add the empty set and order by inclusion.
    """
    gens = []
    for row in z.relation:
        mask = 0
        for k, flag in enumerate(row):
            if flag:
                mask |= 1 << k
        gens.append(mask)
    family = {0}
    frontier = [0]
    while frontier:
        new = []
        for s in frontier:
            for g in gens:
                t = s | g
                if t not in family:
                    family.add(t)
                    new.append(t)
        frontier = new
    return set_family_lattice(family)


def lattice_isomorphic(a, b):
    """Exact order-isomorphism test by backtracking.

    Candidates are pruned by (down-set size, up-set size) signatures and by
    consistency of the order with every previously placed pair.
    """
    if a.n != b.n:
        return False
    sa = list(zip(a.leq.sum(axis=0), a.leq.sum(axis=1)))
    sb = list(zip(b.leq.sum(axis=0), b.leq.sum(axis=1)))
    if sorted(sa) != sorted(sb):
        return False
    order = sorted(range(a.n), key=lambda i: sa[i])
    cand = {i: [k for k in range(b.n) if sb[k] == sa[i]] for i in range(a.n)}
    image = {}
    used = set()

    def place(pos):
        if pos == len(order):
            return True
        i = order[pos]
        for k in cand[i]:
            if k in used:
                continue
            if all(a.leq[i, p] == b.leq[k, q] and a.leq[p, i] == b.leq[q, k]
                   for p, q in image.items()):
                image[i] = k
                used.add(k)
                if place(pos + 1):
                    return True
                del image[i]
                used.discard(k)
        return False

    return place(0)


def pseudo_complement(lat, x):
    """Greatest ``a`` with ``a & x == 0``, or None if there is none."""
    ann = np.flatnonzero(lat.meet[:, x] == lat.zero)
    top = lat.join_all(ann.tolist())
    if lat.meet[top, x] == lat.zero:
        return int(top)
    return None


def pseudo_complement_table(lat):
    return [pseudo_complement(lat, x) for x in range(lat.n)]


def is_pseudocomplemented(lat):
    for x in range(lat.n):
        if pseudo_complement(lat, x) is None:
            return CheckResult("pseudocomplemented", False, lat.elements[x])
    return CheckResult("pseudocomplemented", True)


def xor_term(lat, x, y):
    """``((x & y*)* & (x* & y)*)*``; None if a needed pseudo complement is missing."""

    def star(v):
        return None if v is None else pseudo_complement(lat, v)

    def meet(p, q):
        return None if p is None or q is None else int(lat.meet[p, q])

    return star(meet(star(meet(x, star(y))), star(meet(star(x), y))))


def principal_filter(lat, a):
    return frozenset(np.flatnonzero(lat.leq[a]).tolist())


def principal_ideal(lat, a):
    return frozenset(np.flatnonzero(lat.leq[:, a]).tolist())


def is_filter(lat, K):
    """Nonempty, upward closed, closed under meets."""
    K = set(K)
    if not K:
        return CheckResult("filter", False, "empty")
    for k in K:
        up = set(np.flatnonzero(lat.leq[k]).tolist())
        if not up <= K:
            return CheckResult("filter", False, ("not upward closed", k, min(up - K)))
    for p, q in product(sorted(K), repeat=2):
        if int(lat.meet[p, q]) not in K:
            return CheckResult("filter", False, ("meet", p, q))
    return CheckResult("filter", True)


def is_ideal(lat, K):
    K = set(K)
    if not K:
        return CheckResult("ideal", False, "empty")
    for k in K:
        down = set(np.flatnonzero(lat.leq[:, k]).tolist())
        if not down <= K:
            return CheckResult("ideal", False, ("not downward closed", k, min(down - K)))
    for p, q in product(sorted(K), repeat=2):
        if int(lat.join[p, q]) not in K:
            return CheckResult("ideal", False, ("join", p, q))
    return CheckResult("ideal", True)


# -- small fixture lattices ------------------------------------------------

def chain(k):
    """The k-element chain 0 < 1 < ... < k-1."""
    leq = np.triu(np.ones((k, k), dtype=bool))
    return BoundedLattice(leq, list(range(k)))


def boolean_lattice(atoms):
    """Subsets of an ``atoms``-element set, as bitmasks."""
    return set_family_lattice(range(1 << atoms))


def m3():
    """The diamond: 0 < a, b, c < 1 with a, b, c pairwise incomparable."""
    leq = np.eye(5, dtype=bool)
    leq[0, :] = True
    leq[:, 4] = True
    return BoundedLattice(leq, ["0", "a", "b", "c", "1"])


def n5():
    """The pentagon 0 < a < b < 1, 0 < c < 1."""
    p = Poset.from_relation(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
                            ["0", "a", "b", "c", "1"])
    return BoundedLattice.from_poset(p)
