"""Finite posets as boolean order matrices, and antichain enumeration."""

from functools import cached_property

import numpy as np

from ._bits import bits


class OrderError(ValueError):
    pass


class Poset:
    """A finite partial order on ``range(n)``.

    ``leq[i, j]`` is True iff ``i <= j``. ``labels`` are only used for
    display and export.
    """

    def __init__(self, leq, labels=None, check=True):
        leq = np.asarray(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise OrderError("order matrix must be square")
        self.leq = leq
        self.leq.setflags(write=False)
        self.n = leq.shape[0]
        self.labels = list(labels) if labels is not None else list(range(self.n))
        if check:
            witness = order_violation(leq)
            if witness is not None:
                raise OrderError(f"not a partial order: {witness}")

    @classmethod
    def from_relation(cls, n, pairs, labels=None):
        """Reflexive-transitive closure of ``pairs`` (must be acyclic)."""
        m = np.eye(n, dtype=bool)
        for a, b in pairs:
            m[a, b] = True
        return cls(transitive_closure(m), labels)

    @classmethod
    def from_covers(cls, children, labels=None):
        """``children[j]`` lists the elements covered by ``j``."""
        pairs = [(i, j) for j, cs in enumerate(children) for i in cs]
        return cls.from_relation(len(children), pairs, labels)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Poset(n={self.n})"

    def comparable(self, i, j):
        return bool(self.leq[i, j] or self.leq[j, i])

    @cached_property
    def comparability(self):
        return self.leq | self.leq.T

    @cached_property
    def covers(self):
        """``covers[i, j]`` iff ``j`` covers ``i`` (transitive reduction)."""
        return hasse(self.leq)

    def is_antichain(self, elems):
        elems = list(elems)
        if len(set(elems)) != len(elems):
            return False
        sub = self.comparability[np.ix_(elems, elems)]
        return not (sub & ~np.eye(len(elems), dtype=bool)).any()

    def is_maximal_antichain(self, elems):
        elems = list(elems)
        if not self.is_antichain(elems):
            return False
        if not elems:
            return self.n == 0
        return bool(self.comparability[:, elems].any(axis=1).all())

    def subposet(self, elems):
        elems = list(elems)
        return Poset(self.leq[np.ix_(elems, elems)],
                     [self.labels[i] for i in elems], check=False)

    def minimal(self):
        strict = self.leq & ~np.eye(self.n, dtype=bool)
        return [i for i in range(self.n) if not strict[:, i].any()]

    def maximal(self):
        strict = self.leq & ~np.eye(self.n, dtype=bool)
        return [i for i in range(self.n) if not strict[i].any()]

    def maximal_antichains(self):
        return maximal_antichains(self)

    def down_set(self, elems):
        elems = list(elems)
        if not elems:
            return set()
        return set(np.flatnonzero(self.leq[:, elems].any(axis=1)).tolist())


def order_violation(leq):
    """None if ``leq`` is reflexive, antisymmetric and transitive."""
    n = leq.shape[0]
    diag = np.flatnonzero(~np.diag(leq))
    if diag.size:
        return ("reflexivity", int(diag[0]))
    both = leq & leq.T & ~np.eye(n, dtype=bool)
    if both.any():
        i, j = np.argwhere(both)[0]
        return ("antisymmetry", int(i), int(j))
    two = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    bad = two & ~leq
    if bad.any():
        i, j = np.argwhere(bad)[0]
        return ("transitivity", int(i), int(j))
    return None


def transitive_closure(m):
    m = np.array(m, dtype=bool)
    for k in range(m.shape[0]):
        m |= np.outer(m[:, k], m[k, :])
    return m


def hasse(leq):
    leq = np.asarray(leq, dtype=bool)
    strict = leq & ~np.eye(leq.shape[0], dtype=bool)
    s = strict.astype(np.int64)
    return strict & ~((s @ s) > 0)


def maximal_antichains(poset):
    """All maximal antichains, canonically sorted.

    Maximal antichains are maximal cliques of the incomparability graph;
    enumerated by Bron-Kerbosch with pivoting over bitmasks. Each antichain
    is a sorted tuple of element indices; the list is sorted
    lexicographically.
    """
    n = poset.n
    if n == 0:
        return [()]
    comp = poset.comparability
    nbr = []
    for i in range(n):
        row = ~comp[i]
        mask = 0
        for j in np.flatnonzero(row):
            mask |= 1 << int(j)
        nbr.append(mask)

    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(tuple(bits(r)))
            return
        px = p | x
        pivot = max(bits(px), key=lambda u: (p & nbr[u]).bit_count())
        cand = p & ~nbr[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, p & nbr[v], x & nbr[v])
            p &= ~low
            x |= low
            cand &= ~low

    expand(0, (1 << n) - 1, 0)
    out.sort()
    return out


def maximum_antichains(poset):
    """The maximal antichains of largest cardinality (the width)."""
    mas = maximal_antichains(poset)
    width = max(len(a) for a in mas)
    return [a for a in mas if len(a) == width]


def antichain_leq(leq, alpha, beta):
    """Every member of ``alpha`` lies below some member of ``beta``."""
    if not alpha:
        return True
    if not beta:
        return False
    return bool(leq[np.ix_(list(alpha), list(beta))].any(axis=1).all())
