"""Maximal antichains of rough objects and the lattice they form."""

import numpy as np

from .lattice import BoundedLattice
from .poset import antichain_leq, maximal_antichains, maximum_antichains


def enumerate_maximal_antichains(q):
    """Maximal antichains of a quotient (or any poset), canonically sorted."""
    return maximal_antichains(q)


def ac_leq(alpha, beta, q):
    """Every object of ``alpha`` lies below some object of ``beta``."""
    return antichain_leq(q.leq, alpha, beta)


def antichain_order(antichains, leq):
    """Order matrix of :func:`ac_leq` over a list of antichains."""
    k = len(antichains)
    mem = np.zeros((k, leq.shape[0]))
    for i, a in enumerate(antichains):
        mem[i, list(a)] = 1.0
    below = (mem @ leq.T.astype(np.float64)) > 0  # below[b, j]: j under some member of b
    return (mem @ (~below).astype(np.float64).T) == 0


def build_ac_lattice(q, antichains=None):
    """Lattice of maximal antichains ordered by :func:`ac_leq`.

    Raises :class:`~acrough.lattice.NotALattice` if some pair lacks a join
    or meet.
    """
    if antichains is None:
        antichains = maximal_antichains(q)
    return BoundedLattice(antichain_order(antichains, q.leq), antichains)


def maximum_sized_antichains(q):
    return maximum_antichains(q)


def ac_m_lattice(q):
    """Maximum-sized antichains with the induced antichain order."""
    return build_ac_lattice(q, maximum_antichains(q))


def lower_shift(alpha, q):
    """Replace each object by the class of its lower approximation.

    Returns None when two objects collapse to the same class or the image is
    not a maximal antichain.
    """
    image = [q.class_of(q.objects[i].lower) for i in alpha]
    if len(set(image)) != len(image):
        return None
    if not q.is_maximal_antichain(image):
        return None
    return tuple(sorted(image))
