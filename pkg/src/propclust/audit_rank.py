"""Pass/fail auditors for distance-threshold representation axioms.

Each axiom quantifies over every distance threshold y: at threshold y an
agent approves the candidates within distance y, and the committee must
treat every large-and-cohesive group proportionally.  Approval sets change
only at realized agent-candidate distances, so auditing the finite sorted
threshold list is equivalent to auditing all real y.

The justified-representation check runs in polynomial time.  The stronger
checks enumerate (cohesive target set, cover set) pairs exactly: a violating
group always induces such a pair, and any found pair certifies a violation,
so verdicts are exact whenever the search completes within its node budget.
A "pass" returned after an exhausted budget is flagged, never silent.

The diameter-anchored axiom (no candidate reference) searches for a
violating group as a bounded-diameter clique over agents, via index-ordered
branch and bound under the same budget rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .metric import TAU
from .instance import quota
from .reports import CAP_EXHAUSTED, EXACT, PASS, VIOLATION, AuditReport, RankViolation


@dataclass(frozen=True)
class Caps:
    """Budget on enumerated search nodes across one audit call."""

    node_budget: int = 1_000_000


class _BudgetExceeded(Exception):
    pass


def thresholds(instance):
    """Sorted distinct agent-candidate distances; the only y values at
    which any approval set can change."""
    vals = {
        instance.d_ac(i, j)
        for i in range(instance.n)
        for j in range(instance.num_candidates)
    }
    return sorted(vals)


def _report(notion, value, witness, status):
    return AuditReport(notion, {}, value, witness, status)


def rank_jr_check(instance, outcome):
    """At every threshold, no quota of agents shares an approved candidate
    while none of them approves any center."""
    n, k = instance.n, instance.k
    m = quota(n, k, 1, 1)
    if m > n:
        return _report("rank-jr", PASS, None, EXACT)
    centers = outcome.sorted_centers()
    dW = [
        min((instance.d_ac(i, c) for c in centers), default=None)
        for i in range(n)
    ]
    for y in thresholds(instance):
        limit = y + TAU
        uncovered = [i for i in range(n) if dW[i] is None or dW[i] > limit]
        if len(uncovered) < m:
            continue
        for j in range(instance.num_candidates):
            group = tuple(i for i in uncovered if instance.d_ac(i, j) <= limit)
            if len(group) >= m:
                witness = RankViolation(
                    axiom="rank-jr",
                    threshold_y=y,
                    ell=1,
                    group=group,
                    witness_candidates=(j,),
                )
                return _report("rank-jr", VIOLATION, witness, EXACT)
    return _report("rank-jr", PASS, None, EXACT)


def _approval_columns(instance, y):
    """Per candidate, a bitmask of the agents approving it at threshold y."""
    limit = y + TAU
    cols = []
    for j in range(instance.num_candidates):
        mask = 0
        for i in range(instance.n):
            if instance.d_ac(i, j) <= limit:
                mask |= 1 << i
        cols.append(mask)
    return cols


def _winner_masks(instance, centers, y):
    """Per agent, a bitmask over positions of ``centers`` within y."""
    limit = y + TAU
    masks = []
    for i in range(instance.n):
        mask = 0
        for p, c in enumerate(centers):
            if instance.d_ac(i, c) <= limit:
                mask |= 1 << p
        masks.append(mask)
    return masks


def _bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _covered_winners(centers, wmasks, group):
    seen = 0
    for i in group:
        seen |= wmasks[i]
    return tuple(centers[p] for p in _bits(seen))


def _pjr_scan(instance, outcome, caps, notion):
    n, k = instance.n, instance.k
    centers = outcome.sorted_centers()
    budget = [caps.node_budget]
    try:
        for y in thresholds(instance):
            cols = _approval_columns(instance, y)
            wmasks = _winner_masks(instance, centers, y)
            hit = _pjr_at_threshold(
                instance, centers, cols, wmasks, y, budget, notion
            )
            if hit is not None:
                return _report(notion, VIOLATION, hit, EXACT)
    except _BudgetExceeded:
        return _report(notion, PASS, None, CAP_EXHAUSTED)
    return _report(notion, PASS, None, EXACT)


def _pjr_at_threshold(instance, centers, cols, wmasks, y, budget, notion):
    n, k = instance.n, instance.k
    nc = instance.num_candidates
    for ell in range(1, k + 1):
        m = quota(n, k, ell, 1)
        if m > n:
            break
        cover_size = min(ell - 1, len(centers))
        for ysub in combinations(range(len(centers)), cover_size):
            ymask = 0
            for p in ysub:
                ymask |= 1 << p
            umask = 0
            ucount = 0
            for i in range(n):
                if wmasks[i] & ~ymask == 0:
                    umask |= 1 << i
                    ucount += 1
            if ucount < m:
                continue
            frequent = [
                j for j in range(nc) if (cols[j] & umask).bit_count() >= m
            ]
            if len(frequent) < ell:
                continue
            for tsub in combinations(frequent, ell):
                budget[0] -= 1
                if budget[0] < 0:
                    raise _BudgetExceeded
                inter = umask
                for j in tsub:
                    inter &= cols[j]
                    if inter.bit_count() < m:
                        break
                if inter.bit_count() >= m:
                    group = tuple(_bits(inter))
                    return RankViolation(
                        axiom=notion,
                        threshold_y=y,
                        ell=ell,
                        group=group,
                        witness_candidates=tsub,
                        covered_winners=_covered_winners(centers, wmasks, group),
                    )
    return None


def rank_pjr_check(instance, outcome, caps=Caps()):
    """At every threshold, every ell-large group sharing ell approved
    candidates must collectively approve ell centers."""
    return _pjr_scan(instance, outcome, caps, "rank-pjr")


def dprf_check(instance, outcome, caps=Caps()):
    """Discrete proportionally-representative fairness; same condition as
    the ell-cohesive threshold axiom, reported under its own name."""
    return _pjr_scan(instance, outcome, caps, "dprf")


def rank_pjr_plus_check(instance, outcome, caps=Caps()):
    """Strengthening where a group sharing even one unselected candidate is
    already owed ell centers."""
    notion = "rank-pjr+"
    n, k = instance.n, instance.k
    centers = outcome.sorted_centers()
    center_set = set(centers)
    budget = [caps.node_budget]
    for y in thresholds(instance):
        cols = _approval_columns(instance, y)
        wmasks = _winner_masks(instance, centers, y)
        for ell in range(1, k + 1):
            m = quota(n, k, ell, 1)
            if m > n:
                break
            cover_size = min(ell - 1, len(centers))
            for ysub in combinations(range(len(centers)), cover_size):
                ymask = 0
                for p in ysub:
                    ymask |= 1 << p
                umask = 0
                ucount = 0
                for i in range(n):
                    if wmasks[i] & ~ymask == 0:
                        umask |= 1 << i
                        ucount += 1
                if ucount < m:
                    continue
                for j in range(instance.num_candidates):
                    if j in center_set:
                        continue
                    budget[0] -= 1
                    if budget[0] < 0:
                        return _report(notion, PASS, None, CAP_EXHAUSTED)
                    inter = cols[j] & umask
                    if inter.bit_count() >= m:
                        group = tuple(_bits(inter))
                        witness = RankViolation(
                            axiom=notion,
                            threshold_y=y,
                            ell=ell,
                            group=group,
                            witness_candidates=(j,),
                            covered_winners=_covered_winners(
                                centers, wmasks, group
                            ),
                        )
                        return _report(notion, VIOLATION, witness, EXACT)
    return _report(notion, PASS, None, EXACT)


def uprf_check(instance, outcome, caps=Caps()):
    """Diameter-anchored representation: any ell-large group must approve
    ell centers at the radius of its own diameter.

    The binding threshold for a group is exactly its diameter, so only
    agent-agent distances are enumerated.  Candidate locations play no role
    on the group side.
    """
    notion = "uprf"
    n, k = instance.n, instance.k
    centers = outcome.sorted_centers()
    yvals = {0}
    for i in range(n):
        for j in range(i + 1, n):
            yvals.add(instance.d_aa(i, j))
    budget = [caps.node_budget]
    try:
        for y in sorted(yvals):
            limit = y + TAU
            wmasks = _winner_masks(instance, centers, y)
            adj = [0] * n
            for i in range(n):
                for j in range(i + 1, n):
                    if instance.d_aa(i, j) <= limit:
                        adj[i] |= 1 << j
                        adj[j] |= 1 << i
            for ell in range(1, k + 1):
                m = quota(n, k, ell, 1)
                if m > n:
                    break
                cover_size = min(ell - 1, len(centers))
                for ysub in combinations(range(len(centers)), cover_size):
                    ymask = 0
                    for p in ysub:
                        ymask |= 1 << p
                    umask = 0
                    for i in range(n):
                        if wmasks[i] & ~ymask == 0:
                            umask |= 1 << i
                    if umask.bit_count() < m:
                        continue
                    group = _clique_at_least(adj, umask, m, budget)
                    if group is not None:
                        group = tuple(group)
                        witness = RankViolation(
                            axiom=notion,
                            threshold_y=y,
                            ell=ell,
                            group=group,
                            covered_winners=_covered_winners(
                                centers, wmasks, group
                            ),
                        )
                        return _report(notion, VIOLATION, witness, EXACT)
    except _BudgetExceeded:
        return _report(notion, PASS, None, CAP_EXHAUSTED)
    return _report(notion, PASS, None, EXACT)


def _clique_at_least(adj, allowed, m, budget):
    """First clique (by index order) of size >= m inside ``allowed``."""

    def rec(chosen, avail):
        budget[0] -= 1
        if budget[0] < 0:
            raise _BudgetExceeded
        if len(chosen) >= m:
            return chosen
        while avail:
            if len(chosen) + avail.bit_count() < m:
                return None
            v = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            if len(chosen) + 1 + (avail & adj[v]).bit_count() >= m:
                found = rec(chosen + [v], avail & adj[v])
                if found is not None:
                    return found
        return None

    if m == 0:
        return []
    return rec([], allowed)
