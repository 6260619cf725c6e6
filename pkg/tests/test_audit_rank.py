import random

from propclust import (
    Caps,
    Instance,
    MetricSpace,
    Outcome,
    dprf_check,
    expanding_approvals,
    rank_jr_check,
    rank_pjr_check,
    rank_pjr_plus_check,
    thresholds,
    uprf_check,
)
from propclust import fixtures
from propclust.fixtures import outcome_of
from propclust.generate import random_instance
from propclust.reports import CAP_EXHAUSTED
from propclust import oracle as orc


def test_thresholds_fig3b():
    inst, L = fixtures.fig3b(4)
    vals = thresholds(inst)
    assert vals == [0, 1, 2, 3, 4, 5, 6, 7]


def test_thresholds_single_point():
    space = MetricSpace.from_matrix([[0]])
    inst = Instance(space, (0,), "all", 1)
    assert thresholds(inst) == [0]


def test_thresholds_fig2a_contains_long_edge():
    inst, L = fixtures.fig2a(5)
    assert 10 in thresholds(inst)


def test_rank_jr_fig3a_pass():
    inst, L = fixtures.fig3a(4)
    assert rank_jr_check(inst, outcome_of(L, ("1", "2", "3", "6"))).passed


def test_rank_jr_path_violation():
    inst, L = fixtures.path_uprf()
    report = rank_jr_check(inst, outcome_of(L, ("c",)))
    assert not report.passed
    v = report.witness
    assert v.threshold_y == 1
    assert v.witness_candidates == (L["2"],)
    assert v.group == (L["1"], L["2"], L["3"])


def test_rank_jr_zero_distance_pass():
    space = MetricSpace.from_matrix([[0, 5], [5, 0]])
    inst = Instance(space, (0, 1), "all", 2)
    assert rank_jr_check(inst, Outcome(frozenset({0, 1}))).passed


def test_rank_pjr_fig3a_violation():
    inst, L = fixtures.fig3a(4)
    report = rank_pjr_check(inst, outcome_of(L, ("1", "2", "3", "6")))
    assert not report.passed
    v = report.witness
    assert v.threshold_y == 2
    assert v.ell == 2
    assert set(v.group) == {L[x] for x in ("5", "6", "8", "9", "10")}


def test_rank_pjr_fig3b_pass():
    inst, L = fixtures.fig3b(4)
    assert rank_pjr_check(inst, outcome_of(L, ("1", "2", "3", "9"))).passed


def test_rank_pjr_fig2b_violation():
    inst, L = fixtures.fig2b(5)
    report = rank_pjr_check(inst, outcome_of(L, ("1", "2", "3", "6", "9")))
    assert not report.passed
    assert report.witness.threshold_y == 4
    assert report.witness.ell == 3


def test_rank_pjr_plus_fig3b_violation():
    inst, L = fixtures.fig3b(4)
    report = rank_pjr_plus_check(inst, outcome_of(L, ("1", "2", "3", "9")))
    assert not report.passed
    v = report.witness
    assert v.threshold_y == 3
    assert v.witness_candidates == (L["6"],)
    assert set(v.group) == {L[str(i)] for i in range(5, 11)}
    assert v.ell == 2


def test_dprf_matches_recorded_verdicts():
    inst, L = fixtures.fig2b(5)
    assert not dprf_check(inst, outcome_of(L, ("1", "2", "3", "6", "9"))).passed
    inst3, L3 = fixtures.fig3b(4)
    assert dprf_check(inst3, outcome_of(L3, ("1", "2", "3", "9"))).passed


def test_uprf_fig2b_pass():
    inst, L = fixtures.fig2b(5)
    assert uprf_check(inst, outcome_of(L, ("1", "2", "3", "6", "9"))).passed


def test_uprf_path_pass_but_not_rank_jr():
    inst, L = fixtures.path_uprf()
    W = outcome_of(L, ("c",))
    assert uprf_check(inst, W).passed
    assert not rank_jr_check(inst, W).passed


def test_uprf_nonexistence_when_k_exceeds_colocated_candidates():
    # one agent, two centers wanted, only one candidate on the agent's point
    space = MetricSpace.from_matrix([[0, 3], [3, 0]])
    inst = Instance(space, (0,), "all", 2)
    for centers in ({0}, {1}, {0, 1}):
        assert not uprf_check(inst, Outcome(frozenset(centers))).passed


def test_implication_chain_random(small_corpus):
    for inst in small_corpus[:60]:
        W, _ = expanding_approvals(inst)
        plus = rank_pjr_plus_check(inst, W)
        pjr = rank_pjr_check(inst, W)
        jr = rank_jr_check(inst, W)
        if plus.passed:
            assert pjr.passed
        if pjr.passed:
            assert jr.passed


def test_rank_oracle_equivalence(small_corpus):
    rng = random.Random(17)
    for inst in small_corpus[:30]:
        cands = list(range(inst.num_candidates))
        size = rng.randint(1, min(inst.k, len(cands)))
        W = Outcome(frozenset(rng.sample(cands, size)))
        for notion, check in [
            ("rank-jr", rank_jr_check),
            ("rank-pjr", rank_pjr_check),
            ("rank-pjr+", rank_pjr_plus_check),
            ("dprf", dprf_check),
            ("uprf", uprf_check),
        ]:
            fast = check(inst, W).value
            slow = orc.oracle_rank(notion, inst, W).value
            assert fast == slow, (notion, inst, W)


def test_threshold_completeness_refined_grid():
    # auditing on a 10x refined y-grid finds nothing the threshold list missed
    rng = random.Random(3)
    for _ in range(10):
        inst = random_instance(rng, 6, 5, 3)
        W, _ = expanding_approvals(inst)
        base = rank_jr_check(inst, W).value
        vals = thresholds(inst)
        fine = []
        for a, b in zip(vals, vals[1:]):
            step = (b - a) / 10
            fine.extend(a + i * step for i in range(10))
        fine.append(vals[-1])
        n, k = inst.n, inst.k
        from propclust.instance import quota
        from propclust.metric import TAU

        m = quota(n, k, 1, 1)
        centers = W.sorted_centers()
        grid_violation = False
        for y in fine:
            for j in range(inst.num_candidates):
                group = [
                    i
                    for i in range(n)
                    if inst.d_ac(i, j) <= y + TAU
                    and min(inst.d_ac(i, c) for c in centers) > y + TAU
                ]
                if len(group) >= m:
                    grid_violation = True
        assert grid_violation == (base == "violation")


def test_cap_exhaustion_reports_status():
    inst, L = fixtures.fig2b(5)
    W = outcome_of(L, ("1", "2", "3", "6", "9"))
    tiny = Caps(node_budget=1)
    report = uprf_check(inst, W, tiny)
    assert report.status == CAP_EXHAUSTED
    assert report.value == "pass"  # pass-within-budget, flagged


def test_violation_found_before_cap_is_exact():
    inst, L = fixtures.fig2b(5)
    W = outcome_of(L, ("1", "2", "3", "6", "9"))
    report = dprf_check(inst, W, Caps(node_budget=10**9))
    assert not report.passed
    assert report.status == "exact"
