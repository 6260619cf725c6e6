"""Auditors for deviations to groups of q candidates.

These generalize the single-center notions by measuring every agent at its
q-th closest center.  Deviation targets are candidate subsets C' with
q <= |C'|; since the required group size grows with the entitlement while
the target stays fixed, the binding entitlement for a given C' is exactly
|C'|, which reduces the double enumeration to a single capped subset scan.
A hit cap is reported, never silently ignored: a capped value is a certified
lower bound on the exact one.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction
from itertools import combinations

from .audit_single import max_sum_ratio, ratio, top_group
from .instance import quota
from .reports import CAP_EXHAUSTED, EXACT, AuditReport, Witness


def default_size_cap(instance):
    return min(instance.k, instance.num_candidates, 6)


def _subset_status(instance, size_cap, gamma):
    """Exact unless target sets above the cap would still be feasible."""
    limit = min(instance.k, instance.num_candidates)
    if size_cap >= limit:
        return EXACT
    if quota(instance.n, instance.k, size_cap + 1, gamma) > instance.n:
        return EXACT
    return CAP_EXHAUSTED


def _dq_matrix(instance):
    """Per agent, the row of distances to every candidate index."""
    return [
        [instance.d_ac(i, j) for j in range(instance.num_candidates)]
        for i in range(instance.n)
    ]


def _dq_to_centers(instance, outcome, q):
    """Per agent, distance to the q-th closest center; inf when |W| < q."""
    centers = outcome.sorted_centers()
    if len(centers) < q:
        return [math.inf] * instance.n
    out = []
    for i in range(instance.n):
        dists = [instance.d_ac(i, c) for c in centers]
        out.append(heapq.nsmallest(q, dists)[-1])
    return out


def q_group_min_ratio(instance, outcome, q, agents, cands):
    """Re-evaluate a q-core witness: the worst improvement ratio of
    ``agents`` measured at their q-th closest point of ``cands``."""
    dqW = _dq_to_centers(instance, outcome, q)
    vals = []
    for i in agents:
        dqc = heapq.nsmallest(q, (instance.d_ac(i, j) for j in cands))[-1]
        vals.append(ratio(dqW[i], dqc))
    return min(vals)


def q_group_sum_ratio(instance, outcome, q, agents, cands):
    """Re-evaluate a q-transferable-core witness (ratio of summed q-th
    distances)."""
    dqW = _dq_to_centers(instance, outcome, q)
    sw = sum(dqW[i] for i in agents)
    sv = sum(
        heapq.nsmallest(q, (instance.d_ac(i, j) for j in cands))[-1] for i in agents
    )
    return ratio(sw, sv) if (sv != 0 or sw != 0) else 1


def q_core_min_alpha(instance, outcome, q, size_cap=None):
    """Smallest blocking factor against deviations to q-of-C' center sets."""
    if q < 1 or q > instance.k:
        raise ValueError("q must satisfy 1 <= q <= k")
    if size_cap is None:
        size_cap = max(q, default_size_cap(instance))
    if size_cap < q:
        raise ValueError("size_cap must be at least q")
    n, k = instance.n, instance.k
    dqW = _dq_to_centers(instance, outcome, q)
    rows = _dq_matrix(instance)
    cand_ids = range(instance.num_candidates)
    best = None
    top = min(size_cap, instance.num_candidates, k)
    for size in range(q, top + 1):
        m = quota(n, k, size, 1)
        if m > n:
            break
        for csub in combinations(cand_ids, size):
            ratios = [
                ratio(dqW[i], heapq.nsmallest(q, (rows[i][j] for j in csub))[-1])
                for i in range(n)
            ]
            value, group = top_group(ratios, m)
            if best is None or value > best[0]:
                best = (value, csub, group, size)
    status = _subset_status(instance, size_cap, 1)
    params = {"q": q, "size_cap": size_cap}
    if best is None or best[0] < 1:
        return AuditReport("qcore", params, 1, None, status)
    value, csub, group, size = best
    witness = Witness(agents=group, candidates=csub, ell=size)
    return AuditReport("qcore", params, value, witness, status)


def q_if_min_beta(instance, outcome, q):
    """Largest ratio of q-th-center distance to the q-scaled neighborhood
    radius; needs agents inside the candidate set and k <= n."""
    if not instance.agents_within_candidates():
        raise ValueError("q-IF undefined: agents are not a subset of candidates")
    if instance.k > instance.n:
        raise ValueError("q-IF undefined: k exceeds n")
    if q < 1 or q > len(outcome.centers):
        raise ValueError("q must satisfy 1 <= q <= |W|")
    n, k = instance.n, instance.k
    count = quota(n, k, q, 1)
    dqW = _dq_to_centers(instance, outcome, q)
    best = None
    for i in range(n):
        r = instance.space.neighborhood_radius(instance.agents[i], instance.agents, count)
        value = ratio(dqW[i], r)
        if best is None or value > best[0]:
            best = (value, i)
    value, i = best
    params = {"q": q}
    if value < 1:
        return AuditReport("qif", params, 1, None, EXACT)
    return AuditReport("qif", params, value, Witness(agents=(i,)), EXACT)


def q_tc_min_alpha(instance, outcome, q, gamma=1, size_cap=None):
    """Smallest transferable-core factor for q-of-C' deviations at scale
    gamma, maximizing the ratio of summed q-th-center distances."""
    g = Fraction(gamma)
    if g < 1:
        raise ValueError("gamma must be at least 1")
    if size_cap is None:
        size_cap = max(q, default_size_cap(instance))
    if q < 1 or q > size_cap:
        raise ValueError("q must satisfy 1 <= q <= size_cap")
    n, k = instance.n, instance.k
    dqW = _dq_to_centers(instance, outcome, q)
    rows = _dq_matrix(instance)
    cand_ids = range(instance.num_candidates)
    best = None
    top = min(size_cap, instance.num_candidates, k)
    for size in range(q, top + 1):
        m = quota(n, k, size, g)
        if m > n:
            break
        for csub in combinations(cand_ids, size):
            pairs = [
                (dqW[i], heapq.nsmallest(q, (rows[i][j] for j in csub))[-1])
                for i in range(n)
            ]
            value, group = max_sum_ratio(pairs, m)
            if group is not None and (best is None or value > best[0]):
                best = (value, csub, group, size)
    status = _subset_status(instance, size_cap, g)
    params = {"q": q, "gamma": g, "size_cap": size_cap}
    if best is None or best[0] < 1:
        return AuditReport("qtc", params, 1, None, status)
    value, csub, group, size = best
    witness = Witness(agents=group, candidates=csub, ell=size)
    return AuditReport("qtc", params, value, witness, status)
