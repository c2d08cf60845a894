"""Theorem-verification suites over a single space."""

import time
from dataclasses import dataclass, field

import numpy as np

from .algebra import (COMPLEMENT_KINDS, ACAlgebra, check_groupoid_theorem,
                      check_modal_theorem, check_range_reconstruction,
                      check_ve_diamond)
from .antichains import ac_m_lattice
from .deduction import check_ternary_term_theorems
from .lattice import (NotALattice, birkhoff_reconstruct, check_lattice_laws,
                      irreducible_data, irreducible_poset, irreducible_reconstruct,
                      is_distributive, is_pseudocomplemented, join_irreducibles,
                      lattice_isomorphic, lattice_length, meet_irreducibles)
from .quotient import QuotientError, build_quotient, check_bounded_order
from .report import _jsonable
from .space import (check_admissibility, check_space_axioms, is_absolutely_crisp,
                    is_mereologically_atomic)

SUITES = ("space", "quotient", "lattice", "ac", "deduction")
PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Entry:
    suite: str
    name: str
    status: str
    witness: object = None
    reason: str = ""
    seconds: float = 0.0

    def as_dict(self):
        return {"suite": self.suite, "name": self.name, "status": self.status,
                "witness": _jsonable(self.witness), "reason": self.reason}


@dataclass
class VerificationReport:
    entries: list = field(default_factory=list)

    @property
    def ok(self):
        return all(e.status != FAIL for e in self.entries)

    def counts(self):
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    def failures(self):
        return [e for e in self.entries if e.status == FAIL]

    def __getitem__(self, key):
        for e in self.entries:
            if f"{e.suite}/{e.name}" == key:
                return e
        raise KeyError(key)

    def as_dict(self, timing=False):
        rows = []
        for e in self.entries:
            d = e.as_dict()
            if timing:
                d["seconds"] = round(e.seconds, 4)
            rows.append(d)
        return {"ok": self.ok, "counts": self.counts(), "checks": rows}

    def render(self, timing=False):
        lines = []
        for e in self.entries:
            tail = ""
            if e.status == FAIL:
                tail = f"  witness={_jsonable(e.witness)}"
            elif e.status == SKIPPED:
                tail = f"  ({e.reason})"
            t = f" [{e.seconds:.3f}s]" if timing else ""
            lines.append(f"{e.status.upper():7} {e.suite}/{e.name}{t}{tail}")
        c = self.counts()
        lines.append(f"{c[PASS]} passed, {c[FAIL]} failed, {c[SKIPPED]} skipped")
        return "\n".join(lines) + "\n"


class _Run:
    def __init__(self, report, suite):
        self.report = report
        self.suite = suite
        self.t0 = time.perf_counter()

    def _push(self, name, status, witness=None, reason=""):
        now = time.perf_counter()
        self.report.entries.append(
            Entry(self.suite, name, status, witness, reason, now - self.t0))
        self.t0 = now

    def check(self, res, name=None):
        self._push(name or res.name, PASS if res.ok else FAIL,
                   None if res.ok else res.witness)

    def checks(self, rep, prefix=""):
        for c in rep.checks:
            self.check(c, prefix + c.name)

    def skip(self, name, reason):
        self._push(name, SKIPPED, reason=reason)


class _Context:
    """Lazily built quotient and algebra shared by the suites."""

    def __init__(self, space):
        self.space = space
        self._q = self._A = None
        self.q_error = self.A_error = None

    @property
    def quotient(self):
        if self._q is None and self.q_error is None:
            try:
                self._q = build_quotient(self.space)
            except QuotientError as e:
                self.q_error = e
        return self._q

    @property
    def algebra(self):
        if self._A is None and self.A_error is None and self.quotient is not None:
            try:
                self._A = ACAlgebra(self.quotient)
            except NotALattice as e:
                self.A_error = e
        return self._A


def _space_suite(ctx, run):
    run.checks(check_space_axioms(ctx.space), "axioms/")
    run.checks(check_admissibility(ctx.space), "admissibility/")


def _quotient_suite(ctx, run):
    q = ctx.quotient
    if q is None:
        run._push("bounded-partial-order", FAIL, ctx.q_error.witness, str(ctx.q_error))
        return
    run.check(check_bounded_order(q))


_NO_QUOTIENT = "quotient is not a bounded partial order"


def _lattice_suite(ctx, run):
    A = ctx.algebra
    if A is None:
        for name in ("lattice-laws", "distributive", "ac-m-distributive", "irreducibles",
                     "pseudocomplemented"):
            run.skip(name, _NO_QUOTIENT if ctx.quotient is None else str(ctx.A_error))
        return
    lat = A.lattice
    run.check(check_lattice_laws(lat))
    dist = is_distributive(lat)
    run.check(dist)
    try:
        run.check(is_distributive(ac_m_lattice(ctx.quotient)), "ac-m-distributive")
    except NotALattice as e:
        run._push("ac-m-distributive", FAIL, e.pair, str(e))
    if dist.ok:
        J, W = join_irreducibles(lat), meet_irreducibles(lat)
        n = lattice_length(lat)
        ok = (n == len(J) == len(W)
              and lattice_isomorphic(lat, birkhoff_reconstruct(irreducible_poset(lat)))
              and lattice_isomorphic(lat, irreducible_reconstruct(irreducible_data(lat))))
        run._push("irreducibles", PASS if ok else FAIL,
                  None if ok else {"length": n, "J": len(J), "W": len(W)})
    else:
        run.skip("irreducibles", "AC lattice is not distributive")
    if is_absolutely_crisp(ctx.space) and is_mereologically_atomic(ctx.space):
        run.check(is_pseudocomplemented(lat))
    else:
        run.skip("pseudocomplemented", "granulation is not crisp and atomic")


def _ac_suite(ctx, run, seed):
    A = ctx.algebra
    if A is None:
        for name in ("groupoid", "modal", "complements", "ve-diamond", "ranges"):
            run.skip(name, _NO_QUOTIENT if ctx.quotient is None else str(ctx.A_error))
        return
    run.checks(check_groupoid_theorem(A), "groupoid/")
    run.checks(check_modal_theorem(A), "modal/")
    rng = np.random.default_rng(seed)
    bad = None
    for a in range(len(A)):
        seq = A.carrier[a]
        for kind in COMPLEMENT_KINDS:
            base = A.complement_total(seq, kind)
            if base is None or any(A.complement_total(seq, kind, rng=rng) != base
                                   for _ in range(3)):
                bad = (a, kind)
                break
        if bad:
            break
    run._push("complement-total", PASS if bad is None else FAIL, bad)
    run.check(check_ve_diamond(A), "ve-diamond")
    run.checks(check_range_reconstruction(A), "ranges/")


def _deduction_suite(ctx, run):
    A = ctx.algebra
    if A is None:
        for name in ("filter/meet-term", "ld-filter/box-term"):
            run.skip(name, _NO_QUOTIENT if ctx.quotient is None else str(ctx.A_error))
        return
    run.checks(check_ternary_term_theorems(A))


def verify(space, suite="all", seed=0):
    """Run one suite (or ``"all"``) and return a :class:`VerificationReport`."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    names = SUITES if suite == "all" else (suite,)
    ctx = _Context(space)
    report = VerificationReport()
    for name in names:
        run = _Run(report, name)
        if name == "space":
            _space_suite(ctx, run)
        elif name == "quotient":
            _quotient_suite(ctx, run)
        elif name == "lattice":
            _lattice_suite(ctx, run)
        elif name == "ac":
            _ac_suite(ctx, run, seed)
        else:
            _deduction_suite(ctx, run)
    return report
