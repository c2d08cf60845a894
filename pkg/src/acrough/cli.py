"""Command line front end: ``acrough <command> SPACE_FILE [options]``.

Exit codes: 0 success, 1 property violation, 2 input error, 3 cap exceeded.
"""

import argparse
import sys

from .algebra import COMPLEMENT_KINDS, ACAlgebra
from .deduction import DeductionConfig, Term, TermError, is_compatible, is_deductive_system
from .io import (LatticeData, ParseError, QuotientData, algebra_to_json, dumps,
                 lattice_dot, load_space, quotient_dot)
from .lattice import NotALattice
from .quotient import QuotientError, build_quotient
from .space import CapExceeded, SpaceError, check_admissibility, check_space_axioms
from .verify import SUITES, verify

OK, VIOLATION, INPUT_ERROR, CAP_EXCEEDED = 0, 1, 2, 3


class InputError(ValueError):
    pass


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("space", help="space file")
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("--dot", metavar="PATH", help="write a DOT Hasse diagram")
    common.add_argument("--cap", type=int, default=None, help="universe size cap")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    p = argparse.ArgumentParser(prog="acrough", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common], help="operator axioms and admissibility")
    sub.add_parser("quotient", parents=[common], help="rough objects and their order")
    sub.add_parser("lattice", parents=[common], help="lattice of maximal antichains")
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--timing", action="store_true")
    d = sub.add_parser("deduce", parents=[common], help="deductive-system check on the AC-algebra")
    d.add_argument("--term", action="append", required=True,
                   help="ternary term over a, b, z (repeatable)")
    d.add_argument("--z", required=True, help="carrier index of z")
    d.add_argument("--delta", required=True,
                   help="comma-separated carrier indices, or up:I for the filter above I")
    d.add_argument("--g", default="x", help="unary term over x (default identity)")
    c = sub.add_parser("complement", parents=[common], help="totalised complement")
    c.add_argument("--kind", choices=COMPLEMENT_KINDS, required=True)
    c.add_argument("--antichain", required=True,
                   help="comma-separated rough-object indices, in order")
    return p


def _ints(text, what):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"{what}: expected comma-separated integers, got {text!r}") from None


def _index(text, n, what):
    vals = _ints(text, what)
    if len(vals) != 1 or not 0 <= vals[0] < n:
        raise InputError(f"{what}: expected an index below {n}, got {text!r}")
    return vals[0]


def _write_dot(args, text):
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(text)


def _report_text(rep):
    lines = [f"{'ok  ' if c.ok else 'FAIL'} {c.name}"
             + ("" if c.ok else f"  witness={c.as_dict()['witness']}") for c in rep.checks]
    return "\n".join(lines) + "\n"


def _cmd_check(args, space, out):
    reps = [check_space_axioms(space), check_admissibility(space)]
    if args.json:
        out.write(dumps([r.as_dict() for r in reps]))
    else:
        for r in reps:
            out.write(f"# {r.title}\n" + _report_text(r))
    return OK if all(r.ok for r in reps) else VIOLATION


def _cmd_quotient(args, space, out):
    q = build_quotient(space)
    _write_dot(args, quotient_dot(q))
    if args.json:
        out.write(dumps(QuotientData.of(q).to_json()))
        return OK
    for i, o in enumerate(q.objects):
        mark = " definite" if o.definite else ""
        out.write(f"{i}: {q.label(i)}  {len(o.members)} subsets{mark}\n")
    return OK


def _cmd_lattice(args, space, out):
    A = ACAlgebra.from_space(space)
    _write_dot(args, lattice_dot(A))
    if args.json:
        out.write(dumps(LatticeData.of(A.lattice, [A.label(a) for a in range(len(A))]).to_json()))
        return OK
    for a in range(len(A)):
        ups = [int(b) for b in A.lattice.covers[a].nonzero()[0]]
        out.write(f"{a}: {A.label(a)}  covered by {ups}\n")
    return OK


def _cmd_verify(args, space, out):
    rep = verify(space, args.suite, seed=args.seed)
    if args.json:
        out.write(dumps(rep.as_dict(timing=args.timing)))
    else:
        out.write(rep.render(timing=args.timing))
    return OK if rep.ok else VIOLATION


def _cmd_deduce(args, space, out):
    A = ACAlgebra.from_space(space)
    alg = A.as_finite_algebra()
    n = len(A)
    z = _index(args.z, n, "--z")
    if args.delta.startswith("up:"):
        delta = frozenset(A.lattice.up_set(_index(args.delta[3:], n, "--delta")))
    else:
        delta = frozenset(_ints(args.delta, "--delta"))
        if any(not 0 <= x < n for x in delta):
            raise InputError(f"--delta: indices must be below {n}")
    tau = tuple(Term.parse(t, ("a", "b", "z")) for t in args.term)
    g = Term.parse(args.g, ("x",))
    for t in tau + (g,):
        t.table(alg)  # surface unknown symbols as input errors
    cfg = DeductionConfig(g, z, tau, delta)
    rep = is_deductive_system(alg, cfg)
    rep.add(is_compatible(alg, cfg))
    if args.json:
        d = rep.as_dict()
        d["delta"] = sorted(delta)
        out.write(dumps(d))
    else:
        out.write(f"delta = {sorted(delta)}\n" + _report_text(rep))
    return OK if rep.ok else VIOLATION


def _cmd_complement(args, space, out):
    A = ACAlgebra.from_space(space)
    seq = _ints(args.antichain, "--antichain")
    k = len(A.quotient.objects)
    if not seq or any(not 0 <= i < k for i in seq):
        raise InputError(f"--antichain: need rough-object indices below {k}")
    total = A.complement_total(seq, args.kind)
    partial = None
    if A.quotient.is_maximal_antichain(seq):
        partial = A.complement_partial(A.index(seq), args.kind)
    if args.json:
        out.write(dumps({"kind": args.kind, "sequence": seq,
                         "total": total, "total_label": A.label(total),
                         "partial": partial,
                         "partial_label": None if partial is None else A.label(partial)}))
    else:
        out.write(f"total:   {total} {A.label(total)}\n")
        out.write("partial: undefined\n" if partial is None
                  else f"partial: {partial} {A.label(partial)}\n")
    return OK


COMMANDS = {
    "check": _cmd_check, "quotient": _cmd_quotient, "lattice": _cmd_lattice,
    "verify": _cmd_verify, "deduce": _cmd_deduce, "complement": _cmd_complement,
}


def run_command(argv, out=None, err=None):
    """Run one command and return its exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return OK if e.code == 0 else INPUT_ERROR
    try:
        space = load_space(args.space, cap=args.cap)
        return COMMANDS[args.command](args, space, out)
    except CapExceeded as e:
        err.write(f"acrough: {e}\n")
        return CAP_EXCEEDED
    except (QuotientError, NotALattice) as e:
        err.write(f"acrough: {e}\n")
        return VIOLATION
    except (OSError, ParseError, SpaceError, TermError, InputError, ValueError) as e:
        err.write(f"acrough: {e}\n")
        return INPUT_ERROR


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
