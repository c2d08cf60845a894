"""Bitmask helpers. A subset of an n-element universe is an int in [0, 2**n)."""

from itertools import combinations


def popcount(mask):
    return mask.bit_count()


def bits(mask):
    """Indices of the set bits, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def from_indices(indices):
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def is_subset(a, b):
    return a & ~b == 0


def submasks(mask):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def nonempty_subsets(items):
    items = list(items)
    for r in range(1, len(items) + 1):
        yield from combinations(items, r)
