"""Finite granular operator spaces.

A space is a finite universe, a granulation and a pair of approximation
operators. Subsets of the universe are bitmasks: bit ``i`` is element
``universe[i]``.
"""

import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from ._bits import bits, from_indices, is_subset
from .report import CheckResult, Report

DEFAULT_CAP = 12

GRANULE_UNION = "granule-union"
RELATION = "relation"
TABLE = "table"
MODES = (GRANULE_UNION, RELATION, TABLE)
RELATION_KINDS = ("equivalence", "tolerance", "quasi-equivalence")


class SpaceError(ValueError):
    pass


class CapExceeded(SpaceError):
    pass


def _check_cap(n, cap):
    if cap is None:
        cap = DEFAULT_CAP
    if cap > DEFAULT_CAP:
        warnings.warn(f"universe cap raised to {cap}; powerset scans cost 2**|S|",
                      stacklevel=3)
    if n > cap:
        raise CapExceeded(f"universe has {n} elements, cap is {cap}")


@dataclass(frozen=True, eq=False)
class GranularOperatorSpace:
    """A finite granular operator space ``<S, G, l, u>``.

    Use :meth:`from_granules`, :meth:`from_relation` or :meth:`from_table`
    rather than the raw constructor.
    """

    universe: tuple
    granules: tuple
    mode: str = GRANULE_UNION
    relation_kind: Optional[str] = None
    pairs: frozenset = frozenset()
    table: Optional[dict] = field(default=None, repr=False)
    cap: Optional[int] = field(default=None, repr=False)

    def __post_init__(self):
        n = len(self.universe)
        if len(set(self.universe)) != n:
            raise SpaceError("duplicate universe element")
        _check_cap(n, self.cap)
        if self.mode not in MODES:
            raise SpaceError(f"unknown mode {self.mode!r}")
        full = (1 << n) - 1
        seen = set()
        for g in self.granules:
            if g == 0:
                raise SpaceError("empty granule")
            if g & ~full:
                raise SpaceError("granule is not a subset of the universe")
            if g in seen:
                raise SpaceError(f"duplicate granule {self.names(g)}")
            seen.add(g)
        if self.mode == TABLE:
            if self.table is None or len(self.table) != 1 << n:
                have = 0 if self.table is None else len(self.table)
                raise SpaceError(f"table covers {have} of {1 << n} subsets")
            for a, (lo, up) in self.table.items():
                if not (0 <= a <= full and 0 <= lo <= full and 0 <= up <= full):
                    raise SpaceError("table entry outside the universe")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_granules(cls, universe, granules, cap=None):
        """Granule-union approximations: l(A) joins the granules inside A,
        u(A) the granules meeting A."""
        universe = tuple(str(x) for x in universe)
        index = {x: i for i, x in enumerate(universe)}
        masks = tuple(_mask_of(g, index) for g in granules)
        return cls(universe, masks, GRANULE_UNION, cap=cap)

    @classmethod
    def from_relation(cls, universe, pairs, kind="equivalence", cap=None):
        """Granules are the neighbourhoods ``R(x) = {y : x R y}``.

        Approximations are granule unions over the neighbourhoods, which
        for an equivalence gives the classical Pawlak operators.
        """
        if kind not in RELATION_KINDS:
            raise SpaceError(f"unknown relation kind {kind!r}")
        universe = tuple(str(x) for x in universe)
        index = {x: i for i, x in enumerate(universe)}
        try:
            rel = frozenset((index[str(a)], index[str(b)]) for a, b in pairs)
        except KeyError as e:
            raise SpaceError(f"unknown element {e.args[0]!r} in relation") from None
        _validate_relation(rel, len(universe), kind)
        neigh = []
        for i in range(len(universe)):
            m = from_indices(j for (x, j) in rel if x == i)
            if m not in neigh:
                neigh.append(m)
        return cls(universe, tuple(neigh), RELATION, relation_kind=kind,
                   pairs=rel, cap=cap)

    @classmethod
    def from_table(cls, universe, table, granules=(), cap=None):
        """Explicit approximations: ``table`` maps every subset (an iterable
        of element names, or a bitmask) to its ``(lower, upper)`` pair."""
        universe = tuple(str(x) for x in universe)
        index = {x: i for i, x in enumerate(universe)}
        tab = {}
        for a, (lo, up) in table.items():
            tab[_mask_of(a, index)] = (_mask_of(lo, index), _mask_of(up, index))
        masks = tuple(_mask_of(g, index) for g in granules)
        return cls(universe, masks, TABLE, table=tab, cap=cap)

    # -- element naming ---------------------------------------------------

    @property
    def n(self):
        return len(self.universe)

    @property
    def full(self):
        return (1 << self.n) - 1

    def subset(self, names):
        index = {x: i for i, x in enumerate(self.universe)}
        return _mask_of(names, index)

    def names(self, mask):
        return [self.universe[i] for i in bits(mask)]

    def fmt(self, mask):
        return "{" + ",".join(self.names(mask)) + "}"

    # -- approximations ---------------------------------------------------

    @cached_property
    def _approx(self):
        size = 1 << self.n
        if self.mode == TABLE:
            lo = [self.table[a][0] for a in range(size)]
            up = [self.table[a][1] for a in range(size)]
            return lo, up
        lo = [0] * size
        up = [0] * size
        for a in range(size):
            l = u = 0
            for g in self.granules:
                if g & ~a == 0:
                    l |= g
                if g & a:
                    u |= g
            lo[a] = l
            up[a] = u
        return lo, up

    def _check(self, a):
        if not 0 <= a <= self.full:
            raise SpaceError(f"subset {a:#b} does not fit a universe of size {self.n}")

    def lower(self, a):
        self._check(a)
        return self._approx[0][a]

    def upper(self, a):
        self._check(a)
        return self._approx[1][a]

    def approx(self, a):
        self._check(a)
        return self._approx[0][a], self._approx[1][a]

    def rough_leq(self, a, b):
        la, ua = self.approx(a)
        lb, ub = self.approx(b)
        return is_subset(la, lb) and is_subset(ua, ub)

    def rough_equal(self, a, b):
        return self.approx(a) == self.approx(b)

    def is_definite(self, a):
        return self.lower(a) == a == self.upper(a)


def lower(space, a):
    return space.lower(a)


def upper(space, a):
    return space.upper(a)


def rough_leq(space, a, b):
    return space.rough_leq(a, b)


def rough_equal(space, a, b):
    return space.rough_equal(a, b)


def _mask_of(x, index):
    if isinstance(x, int):
        return x
    mask = 0
    for name in x:
        try:
            mask |= 1 << index[str(name)]
        except KeyError:
            raise SpaceError(f"unknown element {name!r}") from None
    return mask


def _validate_relation(rel, n, kind):
    for i in range(n):
        if (i, i) not in rel:
            raise SpaceError(f"{kind} relation is not reflexive at element {i}")
    if kind in ("equivalence", "tolerance"):
        for a, b in rel:
            if (b, a) not in rel:
                raise SpaceError(f"{kind} relation is not symmetric at {(a, b)}")
    if kind == "equivalence":
        for a, b in rel:
            for c, d in rel:
                if b == c and (a, d) not in rel:
                    raise SpaceError(f"equivalence is not transitive at {(a, b, d)}")


# -- axiom and admissibility checks -------------------------------------------

def _monotone_witness(space, f):
    for a in range(1 << space.n):
        fa = f[a]
        for i in range(space.n):
            b = a | (1 << i)
            if b != a and fa & ~f[b]:
                return (space.names(a), space.names(b))
    return None


def _first(space, pred):
    for a in range(1 << space.n):
        if not pred(a):
            return space.names(a)
    return None


def check_space_axioms(space):
    """Check the operator axioms exhaustively over the powerset.

    ``u(A) <= u(u(A))`` is checked as a non-strict inclusion.
    """
    lo, up = space._approx
    full = space.full
    rep = Report("space axioms")

    def add(name, witness):
        rep.add(CheckResult(name, witness is None, witness))

    add("l-contraction", _first(space, lambda a: lo[a] & ~a == 0))
    add("l-idempotence", _first(space, lambda a: lo[lo[a]] == lo[a]))
    add("u-in-uu", _first(space, lambda a: up[a] & ~up[up[a]] == 0))
    add("l-monotone", _monotone_witness(space, lo))
    add("u-monotone", _monotone_witness(space, up))
    add("empty-l", None if lo[0] == 0 else [])
    add("empty-u", None if up[0] == 0 else [])
    add("universe-l", None if lo[full] & ~full == 0 else space.names(full))
    add("universe-u", None if up[full] & ~full == 0 else space.names(full))
    return rep


def granule_closure(granules):
    """Closure of the granules under binary union and intersection.

    The empty set is included as the empty union.
    """
    closed = set(granules) | {0}
    frontier = list(closed)
    while frontier:
        new = []
        items = list(closed)
        for a in frontier:
            for b in items:
                for c in (a | b, a & b):
                    if c not in closed:
                        closed.add(c)
                        new.append(c)
        frontier = new
    return closed


def check_admissibility(space):
    """Weak RA, lower stability and full underlap, each with a witness."""
    lo, up = space._approx
    rep = Report("admissibility")
    closure = granule_closure(space.granules)

    wra = None
    for a in range(1 << space.n):
        if lo[a] not in closure:
            wra = {"subset": space.names(a), "lower": space.names(lo[a])}
            break
        if up[a] not in closure:
            wra = {"subset": space.names(a), "upper": space.names(up[a])}
            break
    rep.add(CheckResult("WRA", wra is None, wra))

    ls = None
    for g in space.granules:
        for x in range(1 << space.n):
            if g & ~x == 0 and g & ~lo[x]:
                ls = {"granule": space.names(g), "subset": space.names(x)}
                break
        if ls:
            break
    rep.add(CheckResult("LS", ls is None, ls))

    definite = [z for z in range(1 << space.n) if lo[z] == z == up[z]]
    fu = None
    gs = space.granules
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            x, y = gs[i], gs[j]
            if not any(x & ~z == 0 and y & ~z == 0 and z != x and z != y
                       for z in definite):
                fu = (space.names(x), space.names(y))
                break
        if fu:
            break
    rep.add(CheckResult("FU", fu is None, fu))
    return rep


def is_absolutely_crisp(space):
    """Every granule is definite."""
    return all(space.is_definite(g) for g in space.granules)


def is_mereologically_atomic(space):
    """No granule has a nonempty definite proper part."""
    for g in space.granules:
        sub = (g - 1) & g
        while sub:
            if space.is_definite(sub):
                return False
            sub = (sub - 1) & g
    return True
