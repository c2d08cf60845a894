"""The quotient of the powerset by rough equality, ordered by the basic rough order."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ._bits import is_subset
from .poset import Poset, maximal_antichains, order_violation
from .report import CheckResult


class QuotientError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class RoughObject:
    """A maximal class of subsets sharing ``(lower, upper)``.

    Identity is the approximation pair; ``members`` are bitmasks.
    """

    lower: int
    upper: int
    members: tuple
    definite: bool
    stable: bool

    @property
    def pair(self):
        return (self.lower, self.upper)

    def __le__(self, other):
        return is_subset(self.lower, other.lower) and is_subset(self.upper, other.upper)


class QuotientPoset(Poset):
    """Rough objects of a space with the basic rough order.

    ``bottom`` is the class of the empty set and ``top`` the greatest class;
    both are None only when built with ``check_bounds=False`` and absent.
    """

    def __init__(self, space, objects, leq, bottom, top):
        super().__init__(leq, [o.pair for o in objects], check=False)
        self.space = space
        self.objects = list(objects)
        self.bottom = bottom
        self.top = top

    def __repr__(self):
        return f"QuotientPoset({len(self.objects)} objects)"

    @cached_property
    def _by_pair(self):
        return {o.pair: i for i, o in enumerate(self.objects)}

    def index_of_pair(self, lower, upper):
        return self._by_pair.get((lower, upper))

    def class_of(self, subset):
        """Index of the rough object containing ``subset``."""
        return self._by_pair[self.space.approx(subset)]

    def label(self, i):
        o = self.objects[i]
        return f"({self.space.fmt(o.lower)},{self.space.fmt(o.upper)})"

    @cached_property
    def antichains(self):
        return maximal_antichains(self)


def build_quotient(space, check_bounds=True):
    """Scan the powerset and group subsets by their approximation pair.

    Objects are sorted by ``(|l| + |u|, l, u)``, which is a linear extension
    of the order, so the bottom comes first.
    """
    lo, up = space._approx
    groups = {}
    for a in range(1 << space.n):
        groups.setdefault((lo[a], up[a]), []).append(a)
    pairs = sorted(groups, key=lambda p: (p[0].bit_count() + p[1].bit_count(), p))
    objects = []
    for l, u in pairs:
        members = tuple(groups[(l, u)])
        definite = l == u and l in members
        stable = lo[l] == l and up[u] == u
        objects.append(RoughObject(l, u, members, definite, stable))
    k = len(objects)
    leq = np.zeros((k, k), dtype=bool)
    for i, p in enumerate(objects):
        for j, q in enumerate(objects):
            leq[i, j] = p <= q
    bad = order_violation(leq)
    if bad is not None:
        raise QuotientError("basic rough order is not a partial order", bad)
    bottom = _extreme(leq, axis=1)
    top = _extreme(leq, axis=0)
    if check_bounds:
        empty_class = pairs.index((lo[0], up[0]))
        if bottom is None or bottom != empty_class:
            raise QuotientError("class of the empty set is not the least object",
                                [space.fmt(m) for m in (lo[0], up[0])])
        if top is None:
            maxes = [i for i in range(k) if not (leq[i] & ~np.eye(k, dtype=bool)[i]).any()]
            raise QuotientError("no greatest rough object",
                                [objects[i].pair for i in maxes])
    return QuotientPoset(space, objects, leq, bottom, top)


def _extreme(leq, axis):
    hits = np.flatnonzero(leq.all(axis=axis))
    return int(hits[0]) if hits.size == 1 else None


def check_bounded_order(q):
    """Reflexive, antisymmetric, transitive, with bottom and top."""
    bad = order_violation(q.leq)
    if bad is not None:
        return CheckResult("bounded-partial-order", False, bad)
    if q.bottom is None or q.top is None:
        return CheckResult("bounded-partial-order", False,
                           {"bottom": q.bottom, "top": q.top})
    return CheckResult("bounded-partial-order", True)


def definite_rough_objects(q):
    return [o for o in q.objects if o.definite]


def rough_interpretation(antichain, space):
    """``(lower, upper)`` of each subset, in input order."""
    return [space.approx(a) for a in antichain]


def is_fluent(v, q):
    """Every rough object occurs in some antichain of ``v``."""
    covered = set()
    for alpha in v:
        covered.update(alpha)
    return covered >= set(range(len(q.objects)))


def is_well_fluent(v, q):
    """Fluent, and no proper subfamily is fluent.

    Fluency is monotone in ``v``, so it is enough to drop one antichain at a
    time.
    """
    v = list(dict.fromkeys(tuple(a) for a in v))
    if not is_fluent(v, q):
        return False
    return not any(is_fluent(v[:i] + v[i + 1:], q) for i in range(len(v)))


def single_antichain_cover(q):
    """A maximal antichain that alone is fluent, or None."""
    k = len(q.objects)
    for alpha in q.antichains:
        if len(alpha) == k:
            return alpha
    return None
