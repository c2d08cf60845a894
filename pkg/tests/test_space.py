from itertools import product

import numpy as np
import pytest

from acrough import fixtures as F
from acrough.space import (CapExceeded, GranularOperatorSpace, SpaceError,
                           check_admissibility, check_space_axioms, granule_closure,
                           is_absolutely_crisp, is_mereologically_atomic, lower,
                           rough_equal, rough_leq, upper)

import oracles


def S(space, *names):
    return space.subset(names)


def test_lower_upper_on_e1():
    e1 = F.e1()
    assert e1.names(lower(e1, S(e1, "1", "3"))) == ["3"]
    assert e1.names(lower(e1, S(e1, "1", "2"))) == ["1", "2"]
    assert e1.names(upper(e1, S(e1, "1", "3"))) == ["1", "2", "3"]
    assert e1.names(upper(e1, S(e1, "4"))) == ["4"]
    assert lower(e1, 0) == 0 and upper(e1, 0) == 0


def test_rough_order_and_equality_on_e1():
    e1 = F.e1()
    assert rough_leq(e1, S(e1, "1"), S(e1, "1", "3"))
    assert not rough_leq(e1, S(e1, "3"), S(e1, "4"))
    assert rough_equal(e1, S(e1, "1"), S(e1, "2"))
    assert not rough_equal(e1, S(e1, "1"), S(e1, "3"))
    for a in range(16):
        assert rough_leq(e1, a, a) and rough_equal(e1, a, a)


def test_out_of_range_subset_rejected():
    with pytest.raises(SpaceError):
        F.e1().lower(1 << 4)


def test_partition_spaces_match_pawlak():
    for blocks in oracles.partitions(["a", "b", "c", "d", "e"]):
        s = GranularOperatorSpace.from_granules("abcde", blocks)
        fb = [frozenset(b) for b in blocks]
        for a in range(32):
            lo, up = oracles.pawlak(fb, frozenset(s.names(a)))
            assert set(s.names(s.lower(a))) == lo
            assert set(s.names(s.upper(a))) == up


def test_cover_spaces_match_granule_union_oracle():
    rng = np.random.default_rng(3)
    for _ in range(40):
        s = F.random_space(rng, int(rng.integers(1, 6)), partition=False)
        gs = oracles.granule_sets(s)
        for a in range(1 << s.n):
            x = frozenset(s.names(a))
            assert set(s.names(s.lower(a))) == oracles.lower(gs, x)
            assert set(s.names(s.upper(a))) == oracles.upper(gs, x)


def test_relation_mode_equivalence_is_pawlak():
    pairs = [(x, x) for x in "123"] + [("1", "2"), ("2", "1")]
    s = GranularOperatorSpace.from_relation("123", pairs, "equivalence")
    t = GranularOperatorSpace.from_granules("123", [["1", "2"], ["3"]])
    assert s._approx == t._approx


def test_relation_kind_validation():
    with pytest.raises(SpaceError):
        GranularOperatorSpace.from_relation("12", [("1", "2")], "equivalence")
    with pytest.raises(SpaceError):
        GranularOperatorSpace.from_relation("12", [("1", "1"), ("2", "2"), ("1", "2")],
                                            "tolerance")
    s = GranularOperatorSpace.from_relation("12", [("1", "1"), ("2", "2"), ("1", "2")],
                                            "quasi-equivalence")
    assert s.mode == "relation"
    with pytest.raises(SpaceError):
        GranularOperatorSpace.from_relation("12", [], "preorder")


def test_tolerance_neighbourhoods():
    pairs = [(x, x) for x in "123"] + [("1", "2"), ("2", "1"), ("2", "3"), ("3", "2")]
    s = GranularOperatorSpace.from_relation("123", pairs, "tolerance")
    assert sorted(s.names(g) for g in s.granules) == [["1", "2"], ["1", "2", "3"], ["2", "3"]]


def test_axioms_pass_on_fixtures():
    for s in (F.e0(), F.e1(), F.discrete(3)):
        assert check_space_axioms(s).ok


def test_axiom_failure_has_witness():
    s = GranularOperatorSpace.from_table(
        "12", {(): ((), ()), ("1",): (("1", "2"), ("1", "2")),
               ("2",): ((), ("1", "2")), ("1", "2"): (("1", "2"), ("1", "2"))})
    rep = check_space_axioms(s)
    assert not rep["l-contraction"].ok
    assert rep["l-contraction"].witness == ["1"]


def test_monotone_table_passes_monotonicity():
    s = GranularOperatorSpace.from_table(
        "12", {(): ((), ()), ("1",): ((), ("1", "2")),
               ("2",): ((), ("1", "2")), ("1", "2"): ((), ("1", "2"))})
    rep = check_space_axioms(s)
    assert rep["l-monotone"].ok and rep["u-monotone"].ok


def test_admissibility_e1_and_singleton():
    assert check_admissibility(F.e1()).ok
    one = GranularOperatorSpace.from_granules("1", [["1"]])
    assert check_admissibility(one)["FU"].ok


def test_admissibility_overlapping_cover_is_computed():
    s = GranularOperatorSpace.from_granules("123", [["1", "2"], ["2", "3"]])
    rep = check_admissibility(s)
    # brute-force LS: every granule inside x stays inside l(x)
    gs = oracles.granule_sets(s)
    ls = all(g <= oracles.lower(gs, x) for g in gs
             for x in oracles.powerset("123") if g <= x)
    assert rep["LS"].ok == ls
    assert [c.name for c in rep.checks] == ["WRA", "LS", "FU"]


def test_full_underlap_failure_witness():
    # the only definite superset of both is {1,2}, which is not strict
    s = GranularOperatorSpace.from_granules("12", [["1"], ["1", "2"]])
    rep = check_admissibility(s)
    assert not rep["FU"].ok
    assert rep["FU"].witness == (["1"], ["1", "2"])


def test_granule_closure():
    assert granule_closure([0b011, 0b110]) == {0, 0b011, 0b110, 0b010, 0b111}


def test_crisp_and_atomic():
    assert is_absolutely_crisp(F.e1()) and is_mereologically_atomic(F.e1())
    s = GranularOperatorSpace.from_granules("123", [["1"], ["1", "2", "3"]])
    assert not is_absolutely_crisp(s)
    # every subset definite, one big granule: crisp but {1} is a definite part
    ident = {(): ((), ()), ("1",): (("1",), ("1",)), ("2",): (("2",), ("2",)),
             ("1", "2"): (("1", "2"), ("1", "2"))}
    t = GranularOperatorSpace.from_table("12", ident, granules=[["1", "2"]])
    assert is_absolutely_crisp(t) and not is_mereologically_atomic(t)


def test_validation_errors():
    with pytest.raises(SpaceError):
        GranularOperatorSpace.from_granules("12", [["1"], ["1"]])
    with pytest.raises(SpaceError):
        GranularOperatorSpace.from_granules("12", [[]])
    with pytest.raises(SpaceError):
        GranularOperatorSpace.from_table("12", {(): ((), ())})


def test_cap():
    with pytest.raises(CapExceeded):
        F.discrete(13)
    with pytest.warns(UserWarning):
        GranularOperatorSpace.from_granules("1", [["1"]], cap=13)


def test_rough_order_is_quasi_order_and_equality_is_equivalence():
    rng = np.random.default_rng(11)
    for _ in range(6):
        s = F.random_space(rng, 4, partition=bool(rng.integers(2)))
        N = 1 << s.n
        leq = np.array([[s.rough_leq(a, b) for b in range(N)] for a in range(N)])
        eq = np.array([[s.rough_equal(a, b) for b in range(N)] for a in range(N)])
        assert leq.diagonal().all()
        assert not (((leq.astype(int) @ leq.astype(int)) > 0) & ~leq).any()
        assert (eq == eq.T).all() and (eq == (leq & leq.T)).all()


def test_granule_union_lower_idempotent_and_monotone_exhaustive():
    for blocks in [[["1", "2"], ["2", "3"]], [["1"], ["2", "3"], ["1", "3"]]]:
        s = GranularOperatorSpace.from_granules("123", blocks)
        for a, b in product(range(8), repeat=2):
            assert s.lower(s.lower(a)) == s.lower(a)
            if a & ~b == 0:
                assert s.lower(a) & ~s.lower(b) == 0
                assert s.upper(a) & ~s.upper(b) == 0
