"""Finite algebras, terms, and ternary deductive systems.

Everything works on operation tables indexed by carrier position, so terms
are evaluated for all arguments at once by numpy broadcasting.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from .report import CheckResult, Report
from .space import CapExceeded

CONGRUENCE_CAP = 6


class TermError(ValueError):
    pass


class NotDifferenceSystem(ValueError):
    pass


class FiniteAlgebra:
    """A carrier with named operation tables.

    ``ops`` maps a name to an integer array of shape ``(n,) * arity`` whose
    entries are carrier indices; a 0-d array is a constant.
    """

    def __init__(self, carrier, ops, labels=None):
        self.carrier = list(carrier)
        self.n = len(self.carrier)
        self.labels = list(labels) if labels is not None else [str(x) for x in self.carrier]
        self.ops = {}
        for name, table in ops.items():
            table = np.asarray(table, dtype=np.int64)
            if any(d != self.n for d in table.shape):
                raise ValueError(f"operation {name!r} has shape {table.shape}")
            if table.size and (table.min() < 0 or table.max() >= self.n):
                raise ValueError(f"operation {name!r} leaves the carrier")
            self.ops[name] = table

    @classmethod
    def from_functions(cls, carrier, funcs, labels=None):
        """Tabulate ``funcs``: name -> (arity, python function on elements)."""
        carrier = list(carrier)
        index = {x: i for i, x in enumerate(carrier)}
        n = len(carrier)
        ops = {}
        for name, (arity, f) in funcs.items():
            table = np.empty((n,) * arity, dtype=np.int64)
            for args in product(range(n), repeat=arity):
                table[args] = index[f(*(carrier[i] for i in args))]
            ops[name] = table
        return cls(carrier, ops, labels)

    def arity(self, name):
        return self.ops[name].ndim

    def index(self, element):
        return self.carrier.index(element)

    def __repr__(self):
        return f"FiniteAlgebra(n={self.n}, ops={sorted(self.ops)})"


# -- terms ---------------------------------------------------------------------

@dataclass(frozen=True)
class Term:
    """A term over named variables.

    ``expr`` is a variable name, a constant name, or a tuple
    ``(op, arg, ...)``. ``params`` fixes the argument order.
    """

    expr: object
    params: tuple

    @classmethod
    def parse(cls, text, params=("a", "b", "z")):
        """Parse a prefix s-expression such as ``(and (or a (box b)) z)``."""
        tokens = text.replace("(", " ( ").replace(")", " ) ").split()
        if not tokens:
            raise TermError("empty term")
        expr, rest = _read(tokens)
        if rest:
            raise TermError(f"trailing input: {' '.join(rest)}")
        return cls(expr, tuple(params))

    @property
    def arity(self):
        return len(self.params)

    def __str__(self):
        return _show(self.expr)

    def table(self, alg):
        """Values for every assignment, shape ``(n,) * arity``."""
        k = self.arity
        axes = {}
        for i, p in enumerate(self.params):
            shape = [1] * k
            shape[i] = alg.n
            axes[p] = np.arange(alg.n).reshape(shape)
        out = _eval(self.expr, alg, axes)
        return np.broadcast_to(out, (alg.n,) * k)

    def __call__(self, alg, *args):
        if len(args) != self.arity:
            raise TermError(f"term takes {self.arity} arguments, got {len(args)}")
        return eval_term(alg, self, dict(zip(self.params, args)))


def _read(tokens):
    tok, rest = tokens[0], tokens[1:]
    if tok == ")":
        raise TermError("unexpected ')'")
    if tok != "(":
        return tok, rest
    if not rest:
        raise TermError("unclosed '('")
    op, rest = rest[0], rest[1:]
    if op in "()":
        raise TermError("operation name expected after '('")
    args = []
    while rest and rest[0] != ")":
        arg, rest = _read(rest)
        args.append(arg)
    if not rest:
        raise TermError("unclosed '('")
    return (op, *args), rest[1:]


def _show(expr):
    if isinstance(expr, tuple):
        return "(" + " ".join(_show(e) for e in expr) + ")"
    return str(expr)


def _eval(expr, alg, env):
    if isinstance(expr, tuple):
        op, *args = expr
        if op not in alg.ops:
            raise TermError(f"unknown operation {op!r}")
        if alg.arity(op) != len(args):
            raise TermError(f"{op!r} takes {alg.arity(op)} arguments, got {len(args)}")
        vals = [_eval(a, alg, env) for a in args]
        return alg.ops[op][tuple(vals)] if vals else alg.ops[op]
    if expr in env:
        return env[expr]
    if expr in alg.ops and alg.arity(expr) == 0:
        return alg.ops[expr]
    raise TermError(f"unbound symbol {expr!r}")


def eval_term(alg, t, assignment):
    """Evaluate ``t`` at an assignment of carrier indices to its variables."""
    missing = [p for p in t.params if p not in assignment]
    if missing:
        raise TermError(f"no value for {missing}")
    env = {}
    for p in t.params:
        v = int(assignment[p])
        if not 0 <= v < alg.n:
            raise TermError(f"value {v} for {p!r} is outside the carrier")
        env[p] = np.int64(v)
    return int(_eval(t.expr, alg, env))


def identity_term(var="x"):
    return Term(var, (var,))


def xor_expr(x, y, meet="and", star="not"):
    """``((x & y*)* & (x* & y)*)*`` as an expression tree."""
    return (star, (meet, (star, (meet, x, (star, y))), (star, (meet, (star, x), y))))


# -- deductive systems ---------------------------------------------------------

@dataclass(frozen=True)
class DeductionConfig:
    g: Term
    z: int
    tau: tuple
    delta: frozenset

    def __post_init__(self):
        if not self.tau:
            raise ValueError("tau must be nonempty")
        if self.g.arity != 1 or any(t.arity != 3 for t in self.tau):
            raise ValueError("g must be unary and every term in tau ternary")


def _tables(alg, cfg):
    return cfg.g.table(alg), [t.table(alg) for t in cfg.tau]


def is_deductive_system(alg, cfg):
    """Conditions (1)-(3) and the derived detachment at g(z), exhaustively."""
    G, Ts = _tables(alg, cfg)
    z = cfg.z
    inD = np.zeros(alg.n, dtype=bool)
    inD[list(cfg.delta)] = True
    gz = int(G[z])
    rep = Report("deductive system")
    rep.add(CheckResult("g(z) in delta", bool(inD[gz]), None if inD[gz] else gz))

    w = None
    for k, T in enumerate(Ts):
        Tz = T[:, :, z]
        bad = inD[:, None] & inD[Tz] & ~inD[None, :]
        if bad.any():
            a, b = np.argwhere(bad)[0]
            w = {"term": k, "a": int(a), "b": int(b)}
            break
    rep.add(CheckResult("detachment", w is None, w))

    w = None
    for k, T in enumerate(Ts):
        bad = inD & ~inD[T[gz, :, z]]
        if bad.any():
            w = {"term": k, "b": int(np.flatnonzero(bad)[0])}
            break
    rep.add(CheckResult("reattachment", w is None, w))

    first_three = all(c.ok for c in rep.checks)
    w = None
    for k, T in enumerate(Ts):
        bad = inD[T[gz, :, z]] & ~inD
        if bad.any():
            w = {"term": k, "b": int(np.flatnonzero(bad)[0])}
            break
    # the derived statement follows from (1)-(3); failing it while they hold
    # means the checker itself is broken
    detail = "soundness alarm" if (w is not None and first_three) else ""
    rep.add(CheckResult("derived detachment at g(z)", w is None, w, detail))
    return rep


def theta_relation(alg, delta, z, tau):
    """``R[a, b]`` iff every ``t(a, b, z)`` lies in ``delta``."""
    inD = np.zeros(alg.n, dtype=bool)
    inD[list(delta)] = True
    R = np.ones((alg.n, alg.n), dtype=bool)
    for t in tau:
        R &= inD[t.table(alg)[:, :, z]]
    return R


def relation_class(R, x):
    return frozenset(np.flatnonzero(R[x]).tolist())


def preserves(alg, R):
    """Every operation maps componentwise R-related tuples to related values.

    Returns None or a witness ``(op, args_a, args_b)``.
    """
    pairs = np.argwhere(R)
    for name, T in alg.ops.items():
        k = T.ndim
        if k == 0:
            c = int(T)
            if not R[c, c]:
                return (name, (), ())
            continue
        m = len(pairs)
        grids = np.meshgrid(*([np.arange(m)] * k), indexing="ij")
        left = tuple(pairs[g.ravel(), 0] for g in grids)
        right = tuple(pairs[g.ravel(), 1] for g in grids)
        ok = R[T[left], T[right]]
        if not ok.all():
            i = int(np.flatnonzero(~ok)[0])
            return (name, tuple(int(a[i]) for a in left), tuple(int(b[i]) for b in right))
    return None


def is_compatible(alg, cfg):
    R = theta_relation(alg, cfg.delta, cfg.z, cfg.tau)
    w = preserves(alg, R)
    return CheckResult("compatible", w is None, w)


def is_g_difference_system(alg, g, tau):
    """``t(a, b, c) == g(c)`` for all t in tau exactly when ``a == b``."""
    G = g.table(alg)
    same = np.ones((alg.n,) * 3, dtype=bool)
    for t in tau:
        same &= t.table(alg) == G[None, None, :]
    eq = np.eye(alg.n, dtype=bool)[:, :, None]
    bad = same != eq
    if bad.any():
        a, b, c = (int(v) for v in np.argwhere(bad)[0])
        return CheckResult("g-difference", False, (a, b, c))
    return CheckResult("g-difference", True)


# -- congruences ---------------------------------------------------------------

@dataclass(frozen=True)
class CongruenceRelation:
    """A partition of ``range(n)`` into sorted blocks."""

    blocks: tuple

    @property
    def n(self):
        return sum(len(b) for b in self.blocks)

    def labels(self):
        lab = np.empty(self.n, dtype=np.int64)
        for k, b in enumerate(self.blocks):
            lab[list(b)] = k
        return lab

    def matrix(self):
        lab = self.labels()
        return lab[:, None] == lab[None, :]

    def class_of(self, x):
        for b in self.blocks:
            if x in b:
                return frozenset(b)
        raise KeyError(x)


def set_partitions(n):
    """All partitions of ``range(n)`` via restricted growth strings."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def rec(i, m):
        if i == n:
            blocks = [[] for _ in range(m + 1)]
            for x, b in enumerate(rgs):
                blocks[b].append(x)
            yield tuple(tuple(b) for b in blocks)
            return
        for v in range(m + 2):
            rgs[i] = v
            yield from rec(i + 1, max(m, v))

    rgs[0] = 0
    yield from rec(1, 0)


def _compatible_partition(alg, lab):
    for T in alg.ops.values():
        for axis in range(T.ndim):
            for x, y in product(range(alg.n), repeat=2):
                if x < y and lab[x] == lab[y]:
                    if not (lab[T.take(x, axis=axis)] == lab[T.take(y, axis=axis)]).all():
                        return False
    return True


def congruences(alg, cap=CONGRUENCE_CAP):
    """All congruences, by brute force over set partitions."""
    if alg.n > cap:
        raise CapExceeded(f"carrier has {alg.n} elements, congruence cap is {cap}")
    out = []
    for blocks in set_partitions(alg.n):
        c = CongruenceRelation(blocks)
        if _compatible_partition(alg, c.labels()):
            out.append(c)
    return out


def is_congruence(alg, R):
    R = np.asarray(R, dtype=bool)
    if not np.diag(R).all() or not (R == R.T).all():
        return False
    if ((R.astype(np.int64) @ R.astype(np.int64) > 0) & ~R).any():
        return False
    return preserves(alg, R) is None


def check_regularity(alg, g, cap=CONGRUENCE_CAP):
    """Distinct congruences differ at the class of every ``g(b)``."""
    G = g.table(alg)
    cons = congruences(alg, cap)
    for b in range(alg.n):
        gb = int(G[b])
        for s, r in product(range(len(cons)), repeat=2):
            if s < r and cons[s].class_of(gb) == cons[r].class_of(gb):
                return CheckResult("regular", False,
                                   {"b": b, "congruences": (cons[s].blocks, cons[r].blocks)})
    return CheckResult("regular", True)


def check_correspondence(alg, g, tau, z=None, cap=CONGRUENCE_CAP):
    """Congruences versus compatible deductive systems, both directions.

    Forward: every congruence's class at ``g(z)`` is a compatible deductive
    system inducing that congruence. Converse: every compatible deductive
    system induces a congruence whose class at ``g(z)`` is the system.
    """
    diff = is_g_difference_system(alg, g, tau)
    if not diff:
        raise NotDifferenceSystem(f"not a g-difference system: {diff.witness}")
    if alg.n > cap:
        raise CapExceeded(f"carrier has {alg.n} elements, cap is {cap}")
    G = g.table(alg)
    zs = range(alg.n) if z is None else [z]
    cons = congruences(alg, cap)
    rep = Report("correspondence")
    fwd = []
    for zz in zs:
        gz = int(G[zz])
        for c in cons:
            delta = c.class_of(gz)
            cfg = DeductionConfig(g, zz, tuple(tau), delta)
            R = theta_relation(alg, delta, zz, tau)
            if not (R == c.matrix()).all():
                fwd.append(("theta differs", zz, c.blocks))
            elif not is_deductive_system(alg, cfg):
                fwd.append(("not deductive", zz, c.blocks))
            elif not is_compatible(alg, cfg):
                fwd.append(("not compatible", zz, c.blocks))
    rep.add(CheckResult("forward", not fwd, fwd or None,
                        f"{len(cons)} congruences x {len(zs)} points"))

    conv = []
    systems = 0
    for zz in zs:
        gz = int(G[zz])
        for mask in range(1, 1 << alg.n):
            delta = frozenset(i for i in range(alg.n) if mask >> i & 1)
            cfg = DeductionConfig(g, zz, tuple(tau), delta)
            if not (is_deductive_system(alg, cfg) and is_compatible(alg, cfg)):
                continue
            systems += 1
            R = theta_relation(alg, delta, zz, tau)
            if not is_congruence(alg, R):
                conv.append(("theta not a congruence", zz, sorted(delta)))
            elif relation_class(R, gz) != delta:
                conv.append(("class mismatch", zz, sorted(delta)))
    rep.add(CheckResult("converse", not conv, conv or None,
                        f"{systems} compatible deductive systems"))
    rep.add(CheckResult("bijection", systems == len(cons) * len(zs),
                        None if systems == len(cons) * len(zs)
                        else (systems, len(cons) * len(zs))))
    return rep


def check_reconstruction_of_system(alg, v, tau, e, K):
    """If ``Theta_{K,e}`` is reflexive and transitive with ``K`` its class at
    ``v(e)``, then ``K`` must be a deductive system. Returns None when the
    hypothesis does not apply, else the deductive-system report."""
    R = theta_relation(alg, K, e, tau)
    if not np.diag(R).all():
        return None
    if ((R.astype(np.int64) @ R.astype(np.int64) > 0) & ~R).any():
        return None
    ve = int(v.table(alg)[e])
    if relation_class(R, ve) != frozenset(K):
        return None
    return is_deductive_system(alg, DeductionConfig(v, e, tuple(tau), frozenset(K)))


# -- ternary terms on AC-algebras ---------------------------------------------

MEET_TERM = "(and (and a b) z)"
BOX_TERM = "(and (or a (box b)) z)"


def _bullets(H, T, z, sigma):
    """The three conditions for ``H`` with ternary table ``T`` at ``z``."""
    inH = np.zeros(T.shape[0], dtype=bool)
    inH[list(H)] = True
    Tz = T[:, :, z]
    bad = inH & ~inH[Tz[z, :]]
    if bad.any():
        return ("t(z,a,z) in H", int(np.flatnonzero(bad)[0]))
    img = Tz[sigma[:, None], sigma[None, :]]
    bad = inH[Tz] & ~inH[img]
    if bad.any():
        a, b = np.argwhere(bad)[0]
        return ("t(sa,sb,z) in H", int(a), int(b))
    bad = inH[:, None] & inH[Tz] & ~inH[None, :]
    if bad.any():
        a, b = np.argwhere(bad)[0]
        return ("a, t(a,b,z) in H => b in H", int(a), int(b))
    return None


def check_ternary_term_theorems(A):
    """Filters with ``a & b & z`` and principal LD-filters with ``(a | box b) & z``."""
    alg = A.as_finite_algebra()
    lat = A.lattice
    rep = Report("ternary terms")
    T1 = Term.parse(MEET_TERM).table(alg)
    T2 = Term.parse(BOX_TERM).table(alg)

    fails = []
    checked = 0
    for H in A.principal_filters():
        for z in sorted(H):
            checked += 1
            w = _bullets(H, T1, z, lat.meet[:, z])
            if w:
                fails.append({"filter": min(H, key=lambda x: len(lat.up_set(x))),
                              "z": z, "violation": w})
    rep.add(CheckResult("filter/meet-term", not fails, fails or None,
                        f"{checked} (filter, z) pairs"))

    fails = []
    checked = 0
    for z in range(len(A)):
        H = frozenset(lat.up_set(z))
        if not A.classify(H, "ld-filter"):
            continue
        checked += 1
        w = _bullets(H, T2, z, lat.meet[:, z])
        if w:
            fails.append({"z": z, "violation": w})
    rep.add(CheckResult("ld-filter/box-term", not fails, fails or None,
                        f"{checked} principal LD-filters"))
    return rep


# -- example algebras ------------------------------------------------------------

def cyclic_group(n):
    return FiniteAlgebra.from_functions(
        range(n),
        {"add": (2, lambda x, y: (x + y) % n), "neg": (1, lambda x: (-x) % n),
         "0": (0, lambda: 0)})


def boolean_algebra(atoms):
    """Subsets of ``atoms`` points as bitmasks with and/or/not/0/1."""
    full = (1 << atoms) - 1
    return FiniteAlgebra.from_functions(
        range(1 << atoms),
        {"and": (2, lambda x, y: x & y), "or": (2, lambda x, y: x | y),
         "not": (1, lambda x: full & ~x), "0": (0, lambda: 0), "1": (0, lambda: full)})


def chain_p_semilattice(k):
    """The k-chain as a meet-semilattice with pseudo complement and 0."""
    top = k - 1
    return FiniteAlgebra.from_functions(
        range(k),
        {"and": (2, min), "star": (1, lambda x: top if x == 0 else 0),
         "0": (0, lambda: 0)})


GROUP_DIFFERENCE = Term(("add", ("add", "a", ("neg", "b")), "c"), ("a", "b", "c"))
BOOLEAN_DIFFERENCE = Term(xor_expr(xor_expr("a", "b"), "c"), ("a", "b", "c"))
P_SEMILATTICE_DIFFERENCE = Term(
    xor_expr(xor_expr("a", "b", star="star"), "c", star="star"), ("a", "b", "c"))
DOUBLE_STAR = Term(("star", ("star", "x")), ("x",))
