"""Exact minimal-factor auditors for single-center deviations.

Three audits: the smallest blocking factor for proportional fairness (a
quota-sized group deviating to one unopened candidate), for individual
fairness (each agent against the radius of its nearest quota of agents), and
for the transferable core (summed distances of a scaled-quota group).

All three report a value together with a witness that reproduces it, and all
arithmetic stays exact whenever the metric is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .instance import quota
from .reports import EXACT, AuditReport, Witness


def ratio(num, den):
    """num/den with the audit conventions at zero.

    A zero denominator with positive numerator is an unbounded improvement
    (inf); zero over zero can never strictly improve and counts as 1.
    Exact inputs yield a Fraction, anything float yields a float.
    """
    if den == 0:
        return 1 if num == 0 else math.inf
    if num == 0:
        return 0
    if isinstance(num, float) or isinstance(den, float) or math.isinf(num):
        return num / den
    return Fraction(num) / Fraction(den)


def dists_to_centers(instance, outcome):
    """Per agent index, the distance to the nearest center (inf if none)."""
    centers = outcome.sorted_centers()
    out = []
    for i in range(instance.n):
        if centers:
            out.append(min(instance.d_ac(i, c) for c in centers))
        else:
            out.append(math.inf)
    return out


def top_group(ratios, m):
    """The m agents with the largest ratios (ties to lower index) and the
    group's minimum ratio, i.e. the m-th largest value overall."""
    order = sorted(range(len(ratios)), key=lambda i: (-ratios[i], i))
    group = tuple(sorted(order[:m]))
    return ratios[order[m - 1]], group


def group_min_ratio(instance, outcome, agents, cand):
    """Re-evaluate a proportional-fairness witness: the worst improvement
    ratio of ``agents`` deviating to candidate index ``cand``."""
    dW = dists_to_centers(instance, outcome)
    return min(ratio(dW[i], instance.d_ac(i, cand)) for i in agents)


def group_sum_ratio(instance, outcome, agents, cand):
    """Re-evaluate a transferable-core witness: ratio of summed center
    distances to summed distances to candidate index ``cand``."""
    dW = dists_to_centers(instance, outcome)
    sw = sum(dW[i] for i in agents)
    sv = sum(instance.d_ac(i, cand) for i in agents)
    return ratio(sw, sv) if (sv != 0 or sw != 0) else 1


def pf_min_alpha(instance, outcome):
    """Smallest factor at which no quota-sized group prefers one unopened
    candidate; 1 means fully proportional."""
    n, k = instance.n, instance.k
    m = quota(n, k, 1, 1)
    dW = dists_to_centers(instance, outcome)
    best = None
    if m <= n:
        for j in range(instance.num_candidates):
            if j in outcome.centers:
                continue
            ratios = [ratio(dW[i], instance.d_ac(i, j)) for i in range(n)]
            value, group = top_group(ratios, m)
            if best is None or value > best[0]:
                best = (value, j, group)
    if best is None or best[0] < 1:
        return AuditReport("pf", {}, 1, None, EXACT)
    value, j, group = best
    return AuditReport("pf", {}, value, Witness(agents=group, candidates=(j,)), EXACT)


def if_min_beta(instance, outcome):
    """Largest agent-wise ratio of center distance to neighborhood radius.

    Defined only when every agent point is also a candidate point.
    """
    if not instance.agents_within_candidates():
        raise ValueError("IF undefined: agents are not a subset of candidates")
    n, k = instance.n, instance.k
    m = quota(n, k, 1, 1)
    dW = dists_to_centers(instance, outcome)
    best = None
    for i in range(n):
        r = instance.space.neighborhood_radius(instance.agents[i], instance.agents, m)
        value = ratio(dW[i], r)
        if best is None or value > best[0]:
            best = (value, i)
    value, i = best
    if value < 1:
        return AuditReport("if", {}, 1, None, EXACT)
    return AuditReport("if", {}, value, Witness(agents=(i,)), EXACT)


def tc_min_alpha(instance, outcome, gamma=1):
    """Smallest factor for the transferable core at scale ``gamma``.

    Maximizes sum(d(i,W)) / sum(d(i,c)) over candidates c outside the
    outcome and groups of at least ceil(gamma * n / k) agents, exactly, via
    Dinkelbach iteration on the subset-ratio problem.
    """
    g = Fraction(gamma)
    if g < 1:
        raise ValueError("gamma must be at least 1")
    n, k = instance.n, instance.k
    m = quota(n, k, 1, g)
    dW = dists_to_centers(instance, outcome)
    params = {"gamma": g}
    best = None
    if m <= n:
        for j in range(instance.num_candidates):
            if j in outcome.centers:
                continue
            pairs = [(dW[i], instance.d_ac(i, j)) for i in range(n)]
            value, group = max_sum_ratio(pairs, m)
            if group is not None and (best is None or value > best[0]):
                best = (value, j, group)
    if best is None or best[0] < 1:
        return AuditReport("tc", params, 1, None, EXACT)
    value, j, group = best
    return AuditReport("tc", params, value, Witness(agents=group, candidates=(j,)), EXACT)


def max_sum_ratio(pairs, m):
    """Maximize sum(w)/sum(v) over index sets of size >= m.

    ``pairs`` is a list of (w, v) with v >= 0.  Returns (value, group) where
    group attains the value, or (0, None) when no group can have a positive
    numerator.  The value is inf when some feasible all-zero-denominator
    group has positive numerator.  Dinkelbach iteration: finitely many
    breakpoints, so exact data terminates at the exact optimum.
    """
    n = len(pairs)
    if m > n or m < 1:
        return 0, None
    zero_den = [i for i, (w, v) in enumerate(pairs) if v == 0]
    if len(zero_den) >= m and any(pairs[i][0] > 0 for i in zero_den):
        zero_den.sort(key=lambda i: (-pairs[i][0], i))
        return math.inf, tuple(sorted(zero_den[:m]))
    if any(w == math.inf for w, _ in pairs):
        group = tuple(sorted(range(n), key=lambda i: (-pairs[i][0], i))[:m])
        return math.inf, group

    exact = not any(isinstance(w, float) or isinstance(v, float) for w, v in pairs)

    def level_set(t):
        margins = [(pairs[i][0] - t * pairs[i][1], i) for i in range(n)]
        margins.sort(key=lambda mi: (-mi[0], mi[1]))
        chosen = [i for _, i in margins[:m]]
        chosen += [i for mg, i in margins[m:] if mg > 0]
        gain = sum(mg for mg, _ in margins[:m]) + sum(
            mg for mg, _ in margins[m:] if mg > 0
        )
        # ascending-index sums keep reported values bit-identical to a
        # re-evaluation of the witness
        return sorted(chosen), gain

    start, _ = level_set(0)
    sw = sum(pairs[i][0] for i in start)
    sv = sum(pairs[i][1] for i in start)
    if sw == 0:
        return 0, None
    t = ratio(sw, sv)
    group = tuple(sorted(start))
    for _ in range(100_000):
        chosen, gain = level_set(t)
        eps = 0 if exact else 1e-12 * max(1.0, abs(t))
        if gain <= eps:
            return t, group
        sw = sum(pairs[i][0] for i in chosen)
        sv = sum(pairs[i][1] for i in chosen)
        t_next = ratio(sw, sv)
        if t_next <= t:
            return t, group
        t = t_next
        group = tuple(sorted(chosen))
    raise RuntimeError("ratio maximization did not converge")
