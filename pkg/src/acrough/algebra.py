"""AC-algebras: maximal antichains of rough objects with rho, delta, box, diamond."""

from functools import cached_property
from itertools import product

import numpy as np

from .antichains import build_ac_lattice, lower_shift
from .lattice import (BoundedLattice, NotALattice, ReconstructionMismatch,
                      irreducible_data, irreducible_reconstruct, is_filter,
                      is_ideal, lattice_isomorphic, xor_term)
from .poset import maximal_antichains
from .quotient import build_quotient
from .report import CheckResult, Report

CLASS_A = "class-a"
LIGHT = "light"
UU = "uu"
COMPLEMENT_KINDS = (CLASS_A, LIGHT, UU)

FILTER_KINDS = ("filter", "ideal", "ld-filter", "ld-ideal", "ve-filter", "ve-ideal")

TRANSLATIONS = ("join_a", "meet_a", "rho_a", "delta_a", "box", "diamond",
                "t_ab", "tplus_ab")


class UndefinedXor(ValueError):
    pass


class EmptyGamma(AssertionError):
    pass


class ACAlgebra:
    """The maximal antichains of a quotient with their lattice and operations.

    Elements are addressed by their index in ``carrier``; each carrier entry
    is a sorted tuple of rough-object indices.
    """

    def __init__(self, quotient):
        self.quotient = quotient
        self.space = quotient.space
        self.carrier = maximal_antichains(quotient)
        self.lattice = build_ac_lattice(quotient, self.carrier)
        k = len(quotient.objects)
        self.membership = np.zeros((len(self.carrier), k), dtype=bool)
        for i, a in enumerate(self.carrier):
            self.membership[i, list(a)] = True
        m = self.membership.astype(np.int64)
        self._overlap = m @ m.T
        self._index = {a: i for i, a in enumerate(self.carrier)}

    @classmethod
    def from_space(cls, space, check_bounds=True):
        return cls(build_quotient(space, check_bounds=check_bounds))

    def __len__(self):
        return len(self.carrier)

    def __repr__(self):
        return f"ACAlgebra({len(self.carrier)} maximal antichains)"

    @property
    def zero(self):
        return self.lattice.zero

    @property
    def one(self):
        return self.lattice.one

    def index(self, antichain):
        return self._index[tuple(sorted(antichain))]

    def leq(self, a, b):
        return bool(self.lattice.leq[a, b])

    def join(self, a, b):
        return int(self.lattice.join[a, b])

    def meet(self, a, b):
        return int(self.lattice.meet[a, b])

    def label(self, a):
        return "{" + ", ".join(self.quotient.label(i) for i in self.carrier[a]) + "}"

    # -- extensions -------------------------------------------------------

    def containing(self, objects):
        """Carrier indices of the maximal antichains that include ``objects``."""
        objects = list(objects)
        if not objects:
            return list(range(len(self.carrier)))
        return np.flatnonzero(self.membership[:, objects].all(axis=1)).tolist()

    def chi(self, a, b):
        """All maximal antichains extending the common part of ``a`` and ``b``."""
        common = np.flatnonzero(self.membership[a] & self.membership[b])
        return self.containing(common)

    def delta(self, a, b):
        """Extension under cognitive dissonance.

        Among extensions of the common part other than ``b``, take the one
        sharing most with ``b``; ties go to the one sharing most with ``a``;
        a remaining tie, or no candidate at all, gives ``b``.
        """
        cands = [x for x in self.chi(a, b) if x != b]
        if not cands:
            return b
        shared = self._overlap[cands, b]
        best = [x for x, s in zip(cands, shared) if s == shared.max()]
        if len(best) == 1:
            return best[0]
        shared = self._overlap[best, a]
        best = [x for x, s in zip(best, shared) if s == shared.max()]
        return best[0] if len(best) == 1 else b

    def rho(self, a, b):
        """Radical extension.

        Among extensions of the common part other than ``b``, take the one
        sharing least with ``b``; ties are broken among those other than
        ``a`` by sharing least with ``a``; anything unresolved gives ``a``.
        """
        cands = [x for x in self.chi(a, b) if x != b]
        if not cands:
            return a
        shared = self._overlap[cands, b]
        best = [x for x, s in zip(cands, shared) if s == shared.min()]
        if len(best) == 1:
            return best[0]
        best = [x for x in best if x != a]
        shared = self._overlap[best, a]
        best = [x for x, s in zip(best, shared) if s == shared.min()]
        return best[0] if len(best) == 1 else a

    def _tables(self):
        # column-at-a-time evaluation of the same rules as delta() and rho()
        n = len(self.carrier)
        mem = self.membership.astype(np.float64)
        miss = (~self.membership).astype(np.float64)
        ov = self._overlap
        idx = np.arange(n)
        dt = np.empty((n, n), dtype=np.int64)
        rt = np.empty((n, n), dtype=np.int64)
        for b in range(n):
            common = mem * mem[b]
            cands = (common @ miss.T) == 0  # cands[a, x]: x extends a & b
            cands[:, b] = False
            none = ~cands.any(axis=1)
            to_b = np.broadcast_to(ov[:, b], (n, n))
            to_a = ov  # to_a[a, x] = |x & a|
            dt[:, b] = _pick(cands, to_b, to_a, idx, b, maximise=True, exclude_a=False)
            rt[:, b] = _pick(cands, to_b, to_a, idx, b, maximise=False, exclude_a=True)
            dt[none, b] = b
            rt[none, b] = idx[none]
        return dt, rt

    @cached_property
    def _op_tables(self):
        return self._tables()

    @property
    def delta_table(self):
        return self._op_tables[0]

    @property
    def rho_table(self):
        return self._op_tables[1]

    # -- box and diamond --------------------------------------------------

    def gamma(self, a):
        """Rough objects of the lower approximations of the members of ``a``."""
        q = self.quotient
        return sorted({q.class_of(q.objects[i].lower) for i in self.carrier[a]})

    def pi(self, a):
        q = self.quotient
        return sorted({q.class_of(q.objects[i].upper) for i in self.carrier[a]})

    def _modal(self, objs, use_join):
        if not objs:
            raise EmptyGamma("empty image set")
        sub = self.quotient.subposet(objs)
        tops = [tuple(objs[i] for i in c) for c in maximal_antichains(sub)]
        star = sorted({x for c in tops for x in self.containing(c)})
        if use_join:
            return self.lattice.join_all(star)
        return self.lattice.meet_all(star)

    def box(self, a):
        return self._modal(self.gamma(a), use_join=False)

    def diamond(self, a):
        return self._modal(self.pi(a), use_join=True)

    @cached_property
    def box_table(self):
        return [self.box(a) for a in range(len(self.carrier))]

    @cached_property
    def diamond_table(self):
        return [self.diamond(a) for a in range(len(self.carrier))]

    def is_lower_pure(self, a):
        return self.quotient.is_antichain(self.gamma(a))

    def is_upper_pure(self, a):
        return self.quotient.is_antichain(self.pi(a))

    def is_pure(self, a):
        return self.is_lower_pure(a) and self.is_upper_pure(a)

    def lower_shift(self, a):
        """Partial shift of ``a`` to the classes of its lower approximations."""
        out = lower_shift(self.carrier[a], self.quotient)
        return None if out is None else self._index[out]

    # -- complements ------------------------------------------------------

    def complement_of_object(self, i, kind):
        """Rough objects in the general complement of object ``i``."""
        q = self.quotient
        objs = q.objects
        if kind == CLASS_A:
            return [w for w in range(len(objs)) if not q.comparable(i, w)]
        if kind == LIGHT:
            return [w for w in range(len(objs)) if objs[w].pair != objs[i].pair]
        if kind == UU:
            up = self.space.upper
            x = objs[i]
            return [w for w, o in enumerate(objs)
                    if o.lower != x.lower or up(o.upper) != up(x.upper)]
        raise ValueError(f"unknown complement kind {kind!r}")

    def pooled_complement(self, objects, kind):
        pooled = []
        for i in objects:
            for w in self.complement_of_object(i, kind):
                if w not in pooled:
                    pooled.append(w)
        return pooled

    def complement_partial(self, a, kind):
        """The unique maximal antichain holding the pooled complement, or None."""
        pooled = self.pooled_complement(self.carrier[a], kind)
        if not self.quotient.is_antichain(pooled):
            return None
        exts = self.containing(pooled)
        return exts[0] if len(exts) == 1 else None

    def complement_total(self, sequence, kind, rng=None):
        """Totalised complement of a sequence of rough objects.

        The pooled complement is cut greedily into longest antichain runs,
        every maximal antichain containing a run is collected and the lot is
        joined. An empty pool gives 0. ``rng`` only shuffles the internal
        exploration order; the result does not depend on it.
        """
        pooled = self.pooled_complement(sequence, kind)
        runs = split_runs(pooled, self.quotient)
        if rng is not None:
            runs = [runs[i] for i in rng.permutation(len(runs))]
        exts = []
        for run in runs:
            found = self.containing(run)
            if rng is not None:
                found = [found[i] for i in rng.permutation(len(found))]
            exts.extend(found)
        return self.lattice.join_all(exts)

    # -- translations -----------------------------------------------------

    def xor(self, x, y):
        v = xor_term(self.lattice, x, y)
        if v is None:
            raise UndefinedXor(f"x (+) y undefined at {(x, y)}")
        return v

    def translate(self, form, a=None, b=None):
        """Graph of a translation as a list indexed by the carrier."""
        n = len(self.carrier)
        if form in ("join_a", "meet_a", "rho_a", "delta_a", "t_ab", "tplus_ab") and a is None:
            raise ValueError(f"{form} needs a")
        if form in ("t_ab", "tplus_ab") and b is None:
            raise ValueError(f"{form} needs b")
        if form == "join_a":
            return [self.join(a, x) for x in range(n)]
        if form == "meet_a":
            return [self.meet(a, x) for x in range(n)]
        if form == "rho_a":
            return [int(self.rho_table[a, x]) for x in range(n)]
        if form == "delta_a":
            return [int(self.delta_table[a, x]) for x in range(n)]
        if form == "box":
            return list(self.box_table)
        if form == "diamond":
            return list(self.diamond_table)
        if form == "t_ab":
            return [self.xor(self.xor(x, a), b) for x in range(n)]
        if form == "tplus_ab":
            ab = self.xor(a, b)
            return [self.xor(ab, x) for x in range(n)]
        raise ValueError(f"unknown translation {form!r}")

    # -- filters and ideals -----------------------------------------------

    def classify(self, K, kind):
        """Check that ``K`` is a filter/ideal of the given kind."""
        if kind not in FILTER_KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        K = set(K)
        base = is_filter if kind.endswith("filter") else is_ideal
        res = base(self.lattice, K)
        if not res:
            return CheckResult(kind, False, res.witness)
        if kind.startswith("ld"):
            for x in sorted(K):
                if self.box_table[x] not in K:
                    return CheckResult(kind, False, ("box", x, self.box_table[x]))
                if self.diamond_table[x] not in K:
                    return CheckResult(kind, False, ("diamond", x, self.diamond_table[x]))
        if kind.startswith("ve"):
            for xi, x in product(range(len(self.carrier)), sorted(K)):
                if int(self.rho_table[xi, x]) not in K:
                    return CheckResult(kind, False, ("rho", xi, x))
                if int(self.delta_table[xi, x]) not in K:
                    return CheckResult(kind, False, ("delta", xi, x))
        return CheckResult(kind, True)

    def principal_filters(self):
        return [frozenset(self.lattice.up_set(a)) for a in range(len(self.carrier))]

    def principal_ideals(self):
        return [frozenset(self.lattice.down_set(a)) for a in range(len(self.carrier))]

    # -- ranges -----------------------------------------------------------

    def range_lattices(self):
        """Ranges of box and diamond with the induced order."""
        rb = sorted(set(self.box_table))
        rd = sorted(set(self.diamond_table))
        return self.lattice.sublattice(rb), self.lattice.sublattice(rd)

    def as_finite_algebra(self):
        from .deduction import FiniteAlgebra
        lat = self.lattice
        n = len(self.carrier)
        return FiniteAlgebra(
            list(range(n)),
            {
                "or": lat.join, "and": lat.meet,
                "box": np.asarray(self.box_table), "dia": np.asarray(self.diamond_table),
                "rho": self.rho_table, "delta": self.delta_table,
                "0": np.array(lat.zero), "1": np.array(lat.one),
            },
            labels=[self.label(a) for a in range(n)],
        )


def _pick(cands, first, second, idx, b, maximise, exclude_a):
    """Vectorised two-stage selection shared by delta and rho tables."""
    n = len(idx)
    sign = 1 if maximise else -1
    bad = np.iinfo(np.int64).min
    s1 = np.where(cands, sign * first, bad)
    best = cands & (s1 == s1.max(axis=1, keepdims=True))
    out = np.where(best.sum(axis=1) == 1, best.argmax(axis=1), -1)
    tie = out < 0
    if exclude_a:
        best = best & (idx[:, None] != idx[None, :])
    s2 = np.where(best, sign * second, bad)
    best2 = best & (s2 == s2.max(axis=1, keepdims=True))
    unique2 = best2.sum(axis=1) == 1
    fallback = np.full(n, b) if maximise else idx
    second_choice = np.where(unique2, best2.argmax(axis=1), fallback)
    return np.where(tie, second_choice, out)


def split_runs(seq, poset):
    """Cut ``seq`` greedily into maximal consecutive antichains."""
    runs = []
    cur = []
    for w in seq:
        if cur and any(poset.comparable(w, c) for c in cur):
            runs.append(cur)
            cur = []
        cur.append(w)
    if cur:
        runs.append(cur)
    return runs


# -- theorem verifiers ---------------------------------------------------------

def check_groupoid_theorem(A):
    """The six identities for rho and delta, exhaustively."""
    d, r = A.delta_table, A.rho_table
    n = len(A.carrier)
    mem = A.membership
    rep = Report("groupoid theorem")

    def first(pred):
        for a, b in product(range(n), repeat=2):
            if not pred(a, b):
                return (a, b)
        return None

    def inter(x, y):
        return mem[x] & mem[y]

    def sub(p, q):
        return not (p & ~q).any()

    total = d.shape == (n, n) and r.shape == (n, n) and \
        ((0 <= d) & (d < n)).all() and ((0 <= r) & (r < n)).all()
    rep.add(CheckResult("total", bool(total)))
    w = next((a for a in range(n) if r[a, a] != a), None)
    rep.add(CheckResult("rho-idempotent", w is None, w))
    w = next((a for a in range(n) if d[a, a] != a), None)
    rep.add(CheckResult("delta-idempotent", w is None, w))
    w = first(lambda a, b: sub(inter(d[a, b], b), inter(d[d[a, b], b], b)))
    rep.add(CheckResult("delta-intersection-grows", w is None, w))
    w = first(lambda a, b: d[d[a, b], b] == d[a, b])
    rep.add(CheckResult("delta-right-stable", w is None, w))
    w = first(lambda a, b: sub(inter(r[r[a, b], b], b), inter(r[a, b], b)))
    rep.add(CheckResult("rho-intersection-shrinks", w is None, w))
    return rep


def check_modal_theorem(A):
    """Monotonicity and sandwich for box and diamond; box(0) = 0, dia(1) = 1."""
    n = len(A.carrier)
    bx, dm, leq = A.box_table, A.diamond_table, A.lattice.leq
    rep = Report("box/diamond theorem")
    pairs = [(a, b) for a, b in product(range(n), repeat=2) if leq[a, b]]
    w = next(((a, b) for a, b in pairs if not leq[bx[a], bx[b]]), None)
    rep.add(CheckResult("box-monotone", w is None, w))
    w = next(((a, b) for a, b in pairs if not leq[dm[a], dm[b]]), None)
    rep.add(CheckResult("diamond-monotone", w is None, w))
    w = next((a for a in range(n) if not (leq[bx[a], a] and leq[a, dm[a]])), None)
    rep.add(CheckResult("sandwich", w is None, w))
    rep.add(CheckResult("box-zero", bx[A.zero] == A.zero, bx[A.zero]))
    rep.add(CheckResult("diamond-one", dm[A.one] == A.one, dm[A.one]))
    return rep


def find_delta_nonimplication(A):
    """Search for a <= b, a <= c with a not <= delta(b, c)."""
    n = len(A.carrier)
    leq, d = A.lattice.leq, A.delta_table
    for a, b, c in product(range(n), repeat=3):
        if leq[a, b] and leq[a, c] and not leq[a, d[b, c]]:
            return (a, b, c)
    return None


def enumerate_filters(A, kind):
    """All subsets of the carrier of the given kind among principal
    filters/ideals (every filter/ideal of a finite lattice is principal)."""
    pool = A.principal_filters() if kind.endswith("filter") else A.principal_ideals()
    return [K for K in pool if A.classify(K, kind)]


def check_ve_diamond(A):
    """Every VE-filter is closed under diamond."""
    for K in enumerate_filters(A, "ve-filter"):
        for x in K:
            if A.diamond_table[x] not in K:
                return CheckResult("ve-filter-diamond", False, (sorted(K), x))
    return CheckResult("ve-filter-diamond", True)


def check_range_reconstruction(A):
    rep = Report("range lattices")
    try:
        rb, rd = A.range_lattices()
    except NotALattice as e:
        rep.add(CheckResult("ranges-are-lattices", False, e.pair, str(e)))
        return rep
    rep.add(CheckResult("ranges-are-lattices", True))
    for name, lat in (("box-range", rb), ("diamond-range", rd)):
        rebuilt = irreducible_reconstruct(irreducible_data(lat))
        ok = lattice_isomorphic(lat, rebuilt)
        rep.add(CheckResult(f"{name}-reconstructs", ok,
                            None if ok else (lat.n, rebuilt.n)))
    return rep


def check_reconstruction(lat):
    """Raise unless the irreducible reconstruction is isomorphic to ``lat``."""
    rebuilt = irreducible_reconstruct(irreducible_data(lat))
    if not lattice_isomorphic(lat, rebuilt):
        raise ReconstructionMismatch((lat, rebuilt))
    return rebuilt


__all__ = [
    "ACAlgebra", "BoundedLattice", "COMPLEMENT_KINDS", "CLASS_A", "LIGHT", "UU",
    "EmptyGamma", "UndefinedXor", "check_groupoid_theorem", "check_modal_theorem",
    "check_range_reconstruction", "check_ve_diamond", "enumerate_filters",
    "find_delta_nonimplication", "split_runs",
]
