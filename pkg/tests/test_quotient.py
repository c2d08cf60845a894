import numpy as np
import pytest

from acrough import fixtures as F
from acrough.quotient import (QuotientError, build_quotient, check_bounded_order,
                              definite_rough_objects, is_fluent, is_well_fluent,
                              rough_interpretation, single_antichain_cover)
from acrough.space import GranularOperatorSpace

import oracles


def pair_names(space, o):
    return (tuple(space.names(o.lower)), tuple(space.names(o.upper)))


def assert_matches_oracle(space):
    q = build_quotient(space)
    classes = oracles.quotient(space)
    got = {(frozenset(space.names(o.lower)), frozenset(space.names(o.upper))):
           sorted(sorted(space.names(m)) for m in o.members) for o in q.objects}
    want = {k: sorted(sorted(m) for m in v) for k, v in classes.items()}
    assert got == want
    for i, a in enumerate(q.objects):
        for j, b in enumerate(q.objects):
            pa, pb = pair_names(space, a), pair_names(space, b)
            assert q.leq[i, j] == (set(pa[0]) <= set(pb[0]) and set(pa[1]) <= set(pb[1]))
    return q


def test_e0_quotient_is_three_chain():
    e0 = F.e0()
    q = assert_matches_oracle(e0)
    assert [pair_names(e0, o) for o in q.objects] == [
        ((), ()), ((), ("1", "2")), (("1", "2"), ("1", "2"))]
    assert [len(o.members) for o in q.objects] == [1, 2, 1]
    assert q.leq.all() == False and np.array_equal(q.leq, np.triu(np.ones((3, 3), bool)))
    assert (q.bottom, q.top) == (0, 2)


def test_e1_quotient_has_twelve_objects():
    e1 = F.e1()
    q = assert_matches_oracle(e1)
    assert len(q.objects) == 12
    assert len(definite_rough_objects(q)) == 8


def test_random_quotients_match_oracle():
    rng = np.random.default_rng(5)
    for _ in range(30):
        s = F.random_space(rng, int(rng.integers(1, 6)), partition=bool(rng.integers(2)))
        q = assert_matches_oracle(s)
        assert check_bounded_order(q).ok
        members = sorted(m for o in q.objects for m in o.members)
        assert members == list(range(1 << s.n))


def test_discrete_space_quotient_is_powerset():
    s = F.discrete(3)
    q = build_quotient(s)
    assert len(q.objects) == 8
    assert all(o.definite for o in q.objects)
    assert len(definite_rough_objects(q)) == 8


def test_definite_objects_e0():
    e0 = F.e0()
    q = build_quotient(e0)
    assert [pair_names(e0, o) for o in definite_rough_objects(q)] == [
        ((), ()), (("1", "2"), ("1", "2"))]


def test_rough_interpretation():
    e0, e1 = F.e0(), F.e1()
    assert rough_interpretation([e0.subset(["1"])], e0) == [(0, 0b11)]
    assert rough_interpretation([], e0) == []
    got = rough_interpretation([e1.subset(["1", "3"]), e1.subset(["4"])], e1)
    assert [(e1.names(l), e1.names(u)) for l, u in got] == [
        (["3"], ["1", "2", "3"]), (["4"], ["4"])]


def test_fluency_on_e0():
    q = build_quotient(F.e0())
    assert is_fluent([(0,), (1,), (2,)], q)
    assert not is_fluent([(1,)], q)
    assert is_well_fluent([(0,), (1,), (2,)], q)
    assert not is_well_fluent([(0,), (1,)], q)


def test_well_fluent_detects_redundant_antichain():
    q = build_quotient(F.discrete(3))  # the cube: {} < atoms < coatoms < full
    atoms, coatoms = (1, 2, 3), (4, 5, 6)
    levels = [(0,), atoms, coatoms, (7,)]
    assert all(q.is_maximal_antichain(a) for a in levels)
    assert is_well_fluent(levels, q)
    everything = q.antichains
    assert is_fluent(everything, q) and not is_well_fluent(everything, q)
    assert not is_fluent(levels[:3], q)


def test_single_antichain_cover():
    assert single_antichain_cover(build_quotient(F.e0())) is None
    one = GranularOperatorSpace.from_granules("1", [["1"]])
    q1 = build_quotient(one)
    # {} and {1} are comparable, so no single antichain covers both
    assert single_antichain_cover(q1) is None
    q = build_quotient(F.incomparable_space(), check_bounds=False)
    assert single_antichain_cover(q) == (0, 1)


def test_single_cover_none_iff_comparable_pair():
    rng = np.random.default_rng(8)
    for _ in range(20):
        q = build_quotient(F.random_space(rng, int(rng.integers(1, 4))))
        has_pair = any(q.comparable(i, j) for i in range(len(q.objects))
                       for j in range(i + 1, len(q.objects)))
        assert (single_antichain_cover(q) is None) == has_pair


def test_unbounded_table_space_rejected():
    with pytest.raises(QuotientError) as exc:
        build_quotient(F.incomparable_space())
    assert exc.value.witness is not None
    q = build_quotient(F.v_space(), check_bounds=False)
    assert len(q.objects) == 3 and q.top is None
    assert not check_bounded_order(q).ok
