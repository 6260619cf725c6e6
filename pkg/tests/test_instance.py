import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from propclust import Instance, MetricSpace, Outcome, quota, validate
from propclust import fixtures
from propclust.fixtures import outcome_of


def test_quota_examples():
    assert quota(10, 5, 1, 1) == 2
    assert quota(10, 4, 1, 1) == 3
    assert quota(7, 3, 0, 2) == 0


def test_quota_exact_halves():
    # the classic ceil(2.5) case must not round through floats
    assert quota(5, 2, 1, 1) == 3
    assert quota(10, 4, 1, Fraction(3, 2)) == 4
    assert quota(10, 4, 2, 1.5) == 8


def test_quota_errors():
    with pytest.raises(ValueError):
        quota(10, 0, 1, 1)
    with pytest.raises(ValueError):
        quota(10, 2, 1, Fraction(1, 2))


@given(
    st.integers(0, 200),
    st.integers(1, 20),
    st.integers(0, 6),
    st.fractions(min_value=1, max_value=8),
)
@settings(max_examples=200, deadline=None)
def test_quota_matches_rational_oracle(n, k, ell, gamma):
    assert quota(n, k, ell, gamma) == math.ceil(Fraction(gamma) * ell * n / k)


def test_quota_rational_oracle_bulk():
    rng = random.Random(99)
    for _ in range(10_000):
        n, k, ell = rng.randint(0, 400), rng.randint(1, 40), rng.randint(0, 8)
        assert quota(n, k, ell, 1) == math.ceil(Fraction(ell * n, k))


@given(
    st.integers(1, 50),
    st.integers(1, 10),
    st.integers(1, 4),
    st.fractions(min_value=1, max_value=4),
)
@settings(max_examples=120, deadline=None)
def test_quota_monotonicity(n, k, ell, gamma):
    assert quota(n + 1, k, ell, gamma) >= quota(n, k, ell, gamma)
    assert quota(n, k, ell + 1, gamma) >= quota(n, k, ell, gamma)
    assert quota(n, k, ell, gamma + 1) >= quota(n, k, ell, gamma)
    assert quota(n, k + 1, ell, gamma) <= quota(n, k, ell, gamma)


def test_validate_ok():
    inst, labels = fixtures.fig2a(5)
    assert validate(inst, outcome_of(labels, ("1", "2", "3", "6", "9"))) == []


def test_validate_size():
    inst, labels = fixtures.fig2a(5)
    bad = Outcome(frozenset(range(6)))
    kinds = [v["kind"] for v in validate(inst, bad)]
    assert "size" in kinds


def test_validate_membership():
    inst, labels = fixtures.fig2a(5)
    bad = Outcome(frozenset({0, 17}))
    kinds = [v["kind"] for v in validate(inst, bad)]
    assert "membership" in kinds


def test_instance_construction_errors():
    space = MetricSpace.from_matrix([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        Instance(space, (), "all", 1)
    with pytest.raises(ValueError):
        Instance(space, (0,), "all", 0)
    with pytest.raises(ValueError):
        Instance(space, (0, 5), "all", 1)
    with pytest.raises(ValueError):
        Instance(space, (0,), (0, 3), 1)


def test_duplicate_agents_allowed():
    space = MetricSpace.from_matrix([[0, 1], [1, 0]])
    inst = Instance(space, (0, 0, 1), "all", 2)
    assert inst.n == 3


def test_candidates_all_expansion():
    space = MetricSpace.from_matrix([[0, 2], [2, 0]])
    inst = Instance(space, (0,), "all", 1)
    assert inst.candidates == (0, 1)


def test_agent_candidate_relations():
    space = MetricSpace.from_matrix([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    inside = Instance(space, (0, 1), "all", 1)
    assert inside.agents_within_candidates()
    assert not inside.agents_equal_candidates()
    equal = Instance(space, (0, 1, 2), "all", 1)
    assert equal.agents_equal_candidates()
    outside = Instance(space, (0, 1), (2,), 1)
    assert not outside.agents_within_candidates()
