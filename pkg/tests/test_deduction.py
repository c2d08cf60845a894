from itertools import product

import numpy as np
import pytest

from acrough import fixtures as F
from acrough.algebra import ACAlgebra
from acrough.deduction import (BOOLEAN_DIFFERENCE, DOUBLE_STAR, GROUP_DIFFERENCE,
                               P_SEMILATTICE_DIFFERENCE, DeductionConfig,
                               FiniteAlgebra, NotDifferenceSystem, Term, TermError,
                               boolean_algebra, chain_p_semilattice,
                               check_correspondence, check_reconstruction_of_system,
                               check_regularity, check_ternary_term_theorems,
                               congruences, cyclic_group, eval_term, identity_term,
                               is_compatible, is_congruence, is_deductive_system,
                               is_g_difference_system, relation_class,
                               set_partitions, theta_relation)
from acrough.space import CapExceeded

import oracles

ID = identity_term()
B2 = boolean_algebra(1)
Z3 = cyclic_group(3)
AND3 = Term.parse("(and (and a b) c)", ("a", "b", "c"))


def cfg(g, z, tau, delta):
    return DeductionConfig(g, z, tuple(tau), frozenset(delta))


def test_term_evaluation():
    assert BOOLEAN_DIFFERENCE(B2, 1, 1, 0) == 0
    assert GROUP_DIFFERENCE(Z3, 1, 2, 0) == 2
    assert all(ID(Z3, x) == x for x in range(3))
    T = GROUP_DIFFERENCE.table(Z3)
    for a, b, c in product(range(3), repeat=3):
        assert T[a, b, c] == (a - b + c) % 3


def test_boolean_difference_is_symmetric_difference():
    B4 = boolean_algebra(2)
    for a, b, c in product(range(4), repeat=3):
        assert BOOLEAN_DIFFERENCE(B4, a, b, c) == a ^ b ^ c


def test_term_errors():
    with pytest.raises(TermError):
        Term.parse("(and a")
    with pytest.raises(TermError):
        Term.parse("and a b)")
    with pytest.raises(TermError):
        Term.parse("")
    with pytest.raises(TermError):
        Term.parse("(and a)").table(B2)
    with pytest.raises(TermError):
        Term.parse("(nand a b)").table(B2)
    with pytest.raises(TermError):
        Term.parse("(and a q)").table(B2)
    with pytest.raises(TermError):
        eval_term(B2, GROUP_DIFFERENCE, {"a": 0, "b": 0})
    with pytest.raises(TermError):
        eval_term(B2, BOOLEAN_DIFFERENCE, {"a": 0, "b": 0, "c": 5})


def test_constants_and_str():
    t = Term.parse("(or a (not 1))", ("a",))
    assert [t(B2, x) for x in range(2)] == [0, 1]
    assert str(t) == "(or a (not 1))"


def test_deductive_system_b2():
    assert is_deductive_system(B2, cfg(ID, 1, [BOOLEAN_DIFFERENCE], {1})).ok
    rep = is_deductive_system(B2, cfg(ID, 1, [BOOLEAN_DIFFERENCE], {0}))
    assert not rep.ok and not rep["g(z) in delta"].ok


def test_deductive_system_matches_definition():
    rng = np.random.default_rng(1)
    for alg, tau in ((B2, BOOLEAN_DIFFERENCE), (Z3, GROUP_DIFFERENCE),
                     (cyclic_group(4), GROUP_DIFFERENCE)):
        T = tau.table(alg)
        for z in range(alg.n):
            for mask in range(1 << alg.n):
                D = {x for x in range(alg.n) if mask >> x & 1}
                want = (z in D
                        and all(b in D for a, b in product(range(alg.n), repeat=2)
                                if a in D and T[a, b, z] in D)
                        and all(T[z, b, z] in D for b in D))
                assert is_deductive_system(alg, cfg(ID, z, [tau], D)).ok == want


def test_soundness_alarm_never_fires():
    for alg, tau in ((B2, BOOLEAN_DIFFERENCE), (Z3, GROUP_DIFFERENCE)):
        for z, mask in product(range(alg.n), range(1 << alg.n)):
            D = {x for x in range(alg.n) if mask >> x & 1}
            rep = is_deductive_system(alg, cfg(ID, z, [tau], D))
            assert all(c.detail != "soundness alarm" for c in rep.checks)


def test_deductive_system_on_e0_filter():
    A = ACAlgebra.from_space(F.e0())
    alg = A.as_finite_algebra()
    t = Term.parse("(and (and a b) z)")
    H = A.lattice.up_set(1)
    assert is_deductive_system(alg, cfg(ID, 1, [t], H)).ok


def test_compatibility():
    assert is_compatible(B2, cfg(ID, 1, [BOOLEAN_DIFFERENCE], {1})).ok
    assert is_compatible(B2, cfg(ID, 1, [BOOLEAN_DIFFERENCE], {0, 1})).ok


def test_compatibility_failure_on_broken_algebra():
    z4 = cyclic_group(4)
    ops = dict(z4.ops)
    ops["f"] = np.array([0, 1, 1, 0])  # does not respect x ~ x + 2
    broken = FiniteAlgebra(range(4), ops)
    res = is_compatible(broken, cfg(ID, 0, [GROUP_DIFFERENCE], {0, 2}))
    assert not res.ok
    op, left, right = res.witness
    R = theta_relation(broken, {0, 2}, 0, [GROUP_DIFFERENCE])
    assert op == "f"
    assert all(R[x, y] for x, y in zip(left, right))
    assert not R[broken.ops["f"][left], broken.ops["f"][right]]


def test_theta_relation():
    R = theta_relation(B2, {1}, 1, [BOOLEAN_DIFFERENCE])
    assert np.array_equal(R, np.eye(2, dtype=bool))
    assert relation_class(R, 1) == {1}
    assert theta_relation(B2, {0, 1}, 1, [BOOLEAN_DIFFERENCE]).all()
    R = theta_relation(Z3, {0}, 0, [GROUP_DIFFERENCE])
    assert np.array_equal(R, np.eye(3, dtype=bool))


def test_theta_class_equals_deductive_system():
    for alg, tau in ((B2, BOOLEAN_DIFFERENCE), (Z3, GROUP_DIFFERENCE),
                     (boolean_algebra(2), BOOLEAN_DIFFERENCE)):
        for z, mask in product(range(alg.n), range(1, 1 << alg.n)):
            D = frozenset(x for x in range(alg.n) if mask >> x & 1)
            if is_deductive_system(alg, cfg(ID, z, [tau], D)).ok:
                R = theta_relation(alg, D, z, [tau])
                assert relation_class(R, z) == D


def test_difference_systems():
    assert is_g_difference_system(B2, ID, [BOOLEAN_DIFFERENCE]).ok
    assert is_g_difference_system(Z3, ID, [GROUP_DIFFERENCE]).ok
    assert is_g_difference_system(boolean_algebra(2), ID, [BOOLEAN_DIFFERENCE]).ok
    for n in (2, 3, 4):
        assert is_g_difference_system(cyclic_group(n), ID, [GROUP_DIFFERENCE]).ok
    res = is_g_difference_system(B2, ID, [AND3])
    assert not res.ok
    a, b, c = res.witness
    assert (AND3(B2, a, b, c) == c) != (a == b)


def test_p_semilattice_term_is_not_a_difference_system():
    # the pseudo-complement xor on the 3-chain collapses m (+) 1 to 0, so
    # t(m, 1, c) = c** for every c although m != 1
    P = chain_p_semilattice(3)
    res = is_g_difference_system(P, DOUBLE_STAR, [P_SEMILATTICE_DIFFERENCE])
    assert not res.ok
    a, b, c = res.witness
    assert a != b
    assert P_SEMILATTICE_DIFFERENCE(P, a, b, c) == DOUBLE_STAR(P, c)


def test_set_partitions_count():
    assert [len(list(set_partitions(n))) for n in range(6)] == [1, 1, 2, 5, 15, 52]
    for n in range(5):
        got = sorted(sorted(map(sorted, p)) for p in set_partitions(n))
        want = sorted(sorted(map(sorted, p)) for p in oracles.partitions(range(n)))
        assert got == want


def test_congruences():
    assert len(congruences(B2)) == 2
    assert len(congruences(boolean_algebra(2))) == 4
    assert len(congruences(cyclic_group(1))) == 1
    assert len(congruences(cyclic_group(4))) == 3  # subgroups of Z4
    for c in congruences(cyclic_group(4)):
        assert is_congruence(cyclic_group(4), c.matrix())
    with pytest.raises(CapExceeded):
        congruences(boolean_algebra(3))


def test_regularity():
    assert check_regularity(B2, ID).ok
    assert check_regularity(cyclic_group(1), ID).ok
    semilattice = FiniteAlgebra.from_functions([0, 1], {"and": (2, min)})
    res = check_regularity(semilattice, ID)
    # both congruences are told apart at the class of 0
    assert res.ok
    chain3 = FiniteAlgebra.from_functions([0, 1, 2], {"and": (2, min)})
    res = check_regularity(chain3, ID)
    assert not res.ok
    assert 0 <= res.witness["b"] < 3
    s, r = res.witness["congruences"]
    assert s != r


@pytest.mark.parametrize("alg,tau", [
    (cyclic_group(2), GROUP_DIFFERENCE), (Z3, GROUP_DIFFERENCE),
    (cyclic_group(4), GROUP_DIFFERENCE), (B2, BOOLEAN_DIFFERENCE),
    (boolean_algebra(2), BOOLEAN_DIFFERENCE), (cyclic_group(1), GROUP_DIFFERENCE)])
def test_correspondence(alg, tau):
    rep = check_correspondence(alg, ID, [tau])
    assert rep.ok, rep.failures()


def test_correspondence_requires_difference_system():
    with pytest.raises(NotDifferenceSystem):
        check_correspondence(B2, ID, [AND3])


def test_reconstructed_system_is_deductive():
    for alg, tau in ((B2, BOOLEAN_DIFFERENCE), (Z3, GROUP_DIFFERENCE),
                     (B2, AND3), (chain_p_semilattice(3), P_SEMILATTICE_DIFFERENCE)):
        g = DOUBLE_STAR if "star" in alg.ops else ID
        for e, mask in product(range(alg.n), range(1, 1 << alg.n)):
            K = frozenset(x for x in range(alg.n) if mask >> x & 1)
            rep = check_reconstruction_of_system(alg, g, [tau], e, K)
            assert rep is None or rep.ok


def test_ternary_theorems_e0_meet_term():
    rep = check_ternary_term_theorems(ACAlgebra.from_space(F.e0()))
    assert rep["filter/meet-term"].ok


def test_ternary_theorems_e0_box_term_counterexample():
    # H = up-set of the top is a principal LD-filter; with a = 1, b = 0 the
    # term (1 | box 0) & 1 = 1 lies in H while 0 does not
    A = ACAlgebra.from_space(F.e0())
    rep = check_ternary_term_theorems(A)
    res = rep["ld-filter/box-term"]
    assert not res.ok
    (w,) = res.witness
    assert w["z"] == A.one
    assert w["violation"] == ("a, t(a,b,z) in H => b in H", A.one, A.zero)


def test_dataclass_validation():
    with pytest.raises(ValueError):
        DeductionConfig(ID, 0, (), frozenset())
    with pytest.raises(ValueError):
        DeductionConfig(GROUP_DIFFERENCE, 0, (GROUP_DIFFERENCE,), frozenset())
    with pytest.raises(ValueError):
        FiniteAlgebra([0, 1], {"f": np.array([0, 2])})
