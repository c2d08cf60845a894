"""Space files, JSON export/import and DOT Hasse diagrams.

The text format is line oriented with ``#`` comments::

    universe: 1 2 3 4
    mode: granule-union
    granule: 1 2
    granule: 3

Relation mode takes ``relation-kind:`` and ``pair: x y`` lines; table mode
takes one ``approx: {..} l={..} u={..}`` line per subset.
"""

import json
import re
from dataclasses import dataclass

import numpy as np

from .poset import hasse
from .space import (GRANULE_UNION, MODES, RELATION, RELATION_KINDS, TABLE,
                    CapExceeded, GranularOperatorSpace, SpaceError)


class ParseError(SpaceError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


_APPROX = re.compile(r"^\{([^{}]*)\}\s+l\s*=\s*\{([^{}]*)\}\s+u\s*=\s*\{([^{}]*)\}$")


def _elements(body):
    return [x for x in re.split(r"[,\s]+", body.strip()) if x]


def parse_space(text, cap=None):
    """Parse a space file into a :class:`GranularOperatorSpace`.

    Raises :class:`ParseError` with the offending line number, or
    :class:`~acrough.space.CapExceeded`.
    """
    universe = None
    uline = None
    mode = None
    kind = None
    granules, pairs, approx = [], [], {}
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", no)
        key, value = key.strip(), value.strip()
        if key == "universe":
            if universe is not None:
                raise ParseError("universe declared twice", no)
            universe = value.split()
            uline = no
            if len(set(universe)) != len(universe):
                raise ParseError("duplicate universe element", no)
            GranularOperatorSpace.from_granules(universe, [], cap=cap)
            continue
        if universe is None:
            raise ParseError(f"{key!r} before universe", no)
        known = set(universe)
        if key == "mode":
            if value not in MODES:
                raise ParseError(f"unknown mode {value!r}", no)
            if mode is not None and mode != value:
                raise ParseError("conflicting mode", no)
            mode = value
        elif key == "granule":
            g = value.split()
            for x in g:
                if x not in known:
                    raise ParseError(f"unknown element {x!r}", no)
            if not g:
                raise ParseError("empty granule", no)
            if frozenset(g) in {frozenset(h) for h, _ in granules}:
                raise ParseError(f"duplicate granule {' '.join(g)}", no)
            granules.append((g, no))
        elif key == "relation-kind":
            if value not in RELATION_KINDS:
                raise ParseError(f"unknown relation kind {value!r}", no)
            kind = value
        elif key == "pair":
            p = value.split()
            if len(p) != 2:
                raise ParseError("pair needs two elements", no)
            for x in p:
                if x not in known:
                    raise ParseError(f"unknown element {x!r}", no)
            pairs.append(tuple(p))
        elif key == "approx":
            m = _APPROX.match(value)
            if not m:
                raise ParseError("expected '{..} l={..} u={..}'", no)
            a, lo, up = (_elements(s) for s in m.groups())
            for x in a + lo + up:
                if x not in known:
                    raise ParseError(f"unknown element {x!r}", no)
            k = frozenset(a)
            if k in approx:
                raise ParseError(f"subset {{{','.join(a)}}} listed twice", no)
            approx[k] = (lo, up)
        else:
            raise ParseError(f"unknown key {key!r}", no)

    if universe is None:
        raise ParseError("no universe declared")
    mode = mode or (RELATION if pairs else TABLE if approx else GRANULE_UNION)
    if mode != RELATION and (pairs or kind):
        raise ParseError(f"pair/relation-kind lines in {mode} mode")
    if mode == RELATION and granules:
        raise ParseError("granule lines in relation mode", granules[0][1])
    if mode != TABLE and approx:
        raise ParseError(f"approx lines in {mode} mode")
    try:
        if mode == GRANULE_UNION:
            return GranularOperatorSpace.from_granules(
                universe, [g for g, _ in granules], cap=cap)
        if mode == RELATION:
            return GranularOperatorSpace.from_relation(
                universe, pairs, kind or "equivalence", cap=cap)
        need = 1 << len(universe)
        if len(approx) != need:
            raise ParseError(f"incomplete table: {len(approx)} of {need} subsets", uline)
        return GranularOperatorSpace.from_table(
            universe, approx, [g for g, _ in granules], cap=cap)
    except (CapExceeded, ParseError):
        raise
    except SpaceError as e:
        raise ParseError(str(e)) from None


def load_space(path, cap=None):
    with open(path, encoding="utf-8") as fh:
        return parse_space(fh.read(), cap=cap)


def format_space(space):
    """Inverse of :func:`parse_space`."""
    out = [f"universe: {' '.join(space.universe)}", f"mode: {space.mode}"]
    if space.mode == RELATION:
        out.append(f"relation-kind: {space.relation_kind}")
        for a, b in sorted(space.pairs):
            out.append(f"pair: {space.universe[a]} {space.universe[b]}")
    else:
        for g in space.granules:
            out.append("granule: " + " ".join(space.names(g)))
    if space.mode == TABLE:
        for a in range(1 << space.n):
            lo, up = space.table[a]
            out.append(f"approx: {space.fmt(a)} l={space.fmt(lo)} u={space.fmt(up)}")
    return "\n".join(out) + "\n"


# -- JSON ------------------------------------------------------------------------

@dataclass(frozen=True)
class QuotientData:
    """Plain-data view of a quotient, comparable across export and import."""

    universe: tuple
    objects: tuple  # (lower names, upper names, members, definite)
    order: tuple

    @classmethod
    def of(cls, q):
        s = q.space
        objs = tuple((tuple(s.names(o.lower)), tuple(s.names(o.upper)),
                      tuple(tuple(s.names(m)) for m in o.members), o.definite)
                     for o in q.objects)
        return cls(tuple(s.universe), objs, _rows(q.leq))

    def to_json(self):
        return {
            "universe": list(self.universe),
            "objects": [{"lower": list(l), "upper": list(u),
                         "members": [list(m) for m in ms], "definite": d}
                        for l, u, ms, d in self.objects],
            "order": [list(r) for r in self.order],
        }

    @classmethod
    def from_json(cls, d):
        objs = tuple((tuple(o["lower"]), tuple(o["upper"]),
                      tuple(tuple(m) for m in o["members"]), bool(o["definite"]))
                     for o in d["objects"])
        return cls(tuple(d["universe"]), objs, tuple(tuple(int(x) for x in r) for r in d["order"]))


@dataclass(frozen=True)
class LatticeData:
    elements: tuple
    labels: tuple
    order: tuple
    join: tuple
    meet: tuple

    @classmethod
    def of(cls, lat, labels=None):
        elems = tuple(_freeze(e) for e in lat.elements)
        labels = tuple(labels) if labels is not None else tuple(str(e) for e in lat.elements)
        return cls(elems, labels, _rows(lat.leq), _rows(lat.join), _rows(lat.meet))

    def to_json(self):
        return {"elements": _thaw(self.elements), "labels": list(self.labels),
                "order": [list(r) for r in self.order],
                "join": [list(r) for r in self.join],
                "meet": [list(r) for r in self.meet]}

    @classmethod
    def from_json(cls, d):
        def rows(m):
            return tuple(tuple(int(x) for x in r) for r in m)
        return cls(tuple(_freeze(e) for e in d["elements"]), tuple(d["labels"]),
                   rows(d["order"]), rows(d["join"]), rows(d["meet"]))


def _rows(m):
    return tuple(tuple(int(x) for x in r) for r in np.asarray(m))


def _freeze(x):
    if isinstance(x, (list, tuple)):
        return tuple(_freeze(v) for v in x)
    if isinstance(x, np.integer):
        return int(x)
    return x


def _thaw(x):
    if isinstance(x, tuple):
        return [_thaw(v) for v in x]
    return x


def algebra_to_json(A):
    """Carrier, order and every operation table of an AC-algebra."""
    lat = LatticeData.of(A.lattice, [A.label(a) for a in range(len(A))])
    out = lat.to_json()
    out["objects"] = [A.quotient.label(i) for i in range(len(A.quotient.objects))]
    out["rho"] = _rows(A.rho_table)
    out["delta"] = _rows(A.delta_table)
    out["box"] = [int(x) for x in A.box_table]
    out["diamond"] = [int(x) for x in A.diamond_table]
    return out


def dumps(obj):
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2, sort_keys=True, default=_default) + "\n"


def _default(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, (np.ndarray, tuple, frozenset, set)):
        return sorted(x) if isinstance(x, (set, frozenset)) else list(x)
    raise TypeError(f"cannot serialise {type(x).__name__}")


# -- DOT -------------------------------------------------------------------------

def to_dot(leq, labels, name="hasse"):
    """Hasse diagram (transitive reduction), edges pointing upward."""
    cov = hasse(leq)
    out = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, lab in enumerate(labels):
        out.append(f'  n{i} [label="{_escape(lab)}"];')
    for i, j in np.argwhere(cov):
        out.append(f"  n{i} -> n{j};")
    out.append("}")
    return "\n".join(out) + "\n"


def _escape(s):
    return str(s).replace("\\", "\\\\").replace('"', '\\"')


def quotient_dot(q):
    return to_dot(q.leq, [q.label(i) for i in range(len(q.objects))], "quotient")


def lattice_dot(A):
    return to_dot(A.lattice.leq, [A.label(a) for a in range(len(A))], "ac_lattice")
