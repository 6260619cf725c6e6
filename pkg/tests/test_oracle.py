import random
from fractions import Fraction

import pytest

from propclust import Instance, MetricSpace, Outcome
from propclust import fixtures
from propclust.fixtures import outcome_of
from propclust import oracle as orc
from propclust.generate import random_instance


def test_guard_rejects_large_instances():
    space = MetricSpace.from_points([[i, 0] for i in range(11)])
    inst = Instance(space, tuple(range(11)), "all", 2)
    with pytest.raises(ValueError, match="guard"):
        orc.oracle_pf(inst, Outcome(frozenset({0})))


def test_oracle_pf_fig2a():
    inst, L = fixtures.fig2a(5)
    W = outcome_of(L, ("1", "2", "3", "6", "9"))
    assert orc.oracle_pf(inst, W).value == 1


def test_oracle_qcore_fig2a():
    inst, L = fixtures.fig2a(5)
    W = outcome_of(L, ("1", "2", "3", "6", "9"))
    res = orc.oracle_qcore(inst, W, 3)
    assert res.value == Fraction(13, 3)
    members, csub, ell = res.witness
    assert ell == 3


def test_oracle_qcore_q1_equals_pf():
    rng = random.Random(23)
    for _ in range(50):
        inst = random_instance(rng, 7, 6, 4)
        size = rng.randint(1, min(inst.k, inst.num_candidates))
        W = Outcome(frozenset(rng.sample(range(inst.num_candidates), size)))
        assert orc.oracle_qcore(inst, W, 1).value == orc.oracle_pf(inst, W).value


def test_oracle_tc_fig2a():
    inst, L = fixtures.fig2a(4)
    W = outcome_of(L, ("1", "2", "6", "7"))
    assert orc.oracle_tc(inst, W, 1).value == 2


def test_oracle_rank_known_verdicts():
    inst, L = fixtures.path_uprf()
    W = outcome_of(L, ("c",))
    assert orc.oracle_rank("uprf", inst, W).value == "pass"
    assert orc.oracle_rank("rank-jr", inst, W).value == "violation"
    inst2, L2 = fixtures.fig2b(5)
    W2 = outcome_of(L2, ("1", "2", "3", "6", "9"))
    assert orc.oracle_rank("dprf", inst2, W2).value == "violation"
    assert orc.oracle_rank("uprf", inst2, W2).value == "pass"


def test_oracle_rank_unknown_axiom():
    inst, L = fixtures.path_uprf()
    with pytest.raises(ValueError):
        orc.oracle_rank("ejr", inst, outcome_of(L, ("c",)))
