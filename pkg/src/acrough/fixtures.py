"""Named example spaces, posets and random generators."""

import numpy as np

from .poset import Poset, transitive_closure
from .space import GranularOperatorSpace


def e0():
    """Two points, one granule: quotient is the chain (0,0) < (0,S) < (S,S)."""
    return GranularOperatorSpace.from_granules(["1", "2"], [["1", "2"]])


def e1():
    """Partition {1,2},{3},{4} of four points."""
    return GranularOperatorSpace.from_granules(
        ["1", "2", "3", "4"], [["1", "2"], ["3"], ["4"]])


def discrete(n):
    names = [str(i + 1) for i in range(n)]
    return GranularOperatorSpace.from_granules(names, [[x] for x in names])


def v_space():
    """Table space whose quotient is the "V": (0,0) below two incomparable
    classes ({1},{1}) and ({2},{2}); the full set falls into the bottom class.

    Deliberately violates monotonicity, so build it with ``check_bounds=False``.
    """
    return GranularOperatorSpace.from_table(
        ["1", "2"],
        {(): ((), ()), ("1",): (("1",), ("1",)), ("2",): (("2",), ("2",)),
         ("1", "2"): ((), ())})


def incomparable_space():
    """Table space with two pairwise incomparable rough objects."""
    return GranularOperatorSpace.from_table(
        ["1", "2"],
        {(): (("1",), ()), ("1",): ((), ("1",)), ("2",): (("1",), ()),
         ("1", "2"): ((), ("1",))})


def v_poset():
    return Poset.from_relation(3, [(0, 1), (0, 2)], ["o", "a", "b"])


def chain_poset(k):
    return Poset(np.triu(np.ones((k, k), dtype=bool)), list(range(k)))


def antichain_poset(k):
    return Poset(np.eye(k, dtype=bool), list(range(k)))


def random_partition(rng, n):
    labels = rng.integers(0, rng.integers(1, n + 1), size=n)
    blocks = {}
    for i, b in enumerate(labels):
        blocks.setdefault(int(b), []).append(i)
    return list(blocks.values())


def random_space(rng, n, partition=True, max_granules=None):
    """Random granule-union space on ``n`` points.

    With ``partition`` the granules are the blocks of a random partition;
    otherwise a random cover by nonempty subsets.
    """
    names = [str(i + 1) for i in range(n)]
    if partition:
        blocks = random_partition(rng, n)
        return GranularOperatorSpace.from_granules(
            names, [[names[i] for i in b] for b in blocks])
    if max_granules is None:
        max_granules = n + 1
    k = min(int(rng.integers(1, max_granules + 1)), (1 << n) - 1)
    masks = set()
    while len(masks) < k:
        masks.add(int(rng.integers(1, 1 << n)))
    missing = (1 << n) - 1 - _union(masks)
    if missing:
        masks.add(missing)
    grans = [[names[i] for i in range(n) if m >> i & 1] for m in sorted(masks)]
    return GranularOperatorSpace.from_granules(names, grans)


def _union(masks):
    out = 0
    for m in masks:
        out |= m
    return out


def random_poset(rng, n, density=None):
    """Random poset: transitive closure of a random DAG on ``range(n)``."""
    if density is None:
        density = rng.uniform(0.1, 0.6)
    m = np.triu(rng.random((n, n)) < density, k=1)
    perm = rng.permutation(n)
    m = m[np.ix_(perm, perm)]
    m |= np.eye(n, dtype=bool)
    return Poset(transitive_closure(m))
