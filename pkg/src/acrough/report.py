"""Check results shared by the verifiers."""

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one property check.

    Truthy iff the property holds. ``witness`` carries a counterexample
    (or, for existence searches, the example found).
    """

    name: str
    ok: bool
    witness: Any = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def as_dict(self):
        return {
            "name": self.name,
            "ok": self.ok,
            "witness": _jsonable(self.witness),
            "detail": self.detail,
        }


@dataclass
class Report:
    """An ordered collection of named checks."""

    title: str
    checks: list = field(default_factory=list)

    def add(self, check):
        self.checks.append(check)
        return check

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def as_dict(self):
        return {"title": self.title, "ok": self.ok,
                "checks": [c.as_dict() for c in self.checks]}


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x, key=repr) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    if hasattr(x, "item"):  # numpy scalar
        return x.item()
    return repr(x)
