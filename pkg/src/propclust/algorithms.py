"""Radius-sweep clustering rules with replayable traces.

All three rules conceptually grow a radius delta around candidates and act
when enough agents fall inside a ball.  Nothing changes between consecutive
realized distances, so the smooth sweep is discretized to the finite sorted
distance set without loss.  Tie-breaking is lowest-index-first everywhere
and is part of the contract: identical inputs (and seed, where one applies)
give bit-identical outcomes and traces.

* greedy capture: opens a candidate once a full quota of uncaptured agents
  is within delta, capturing them; captured-by-proximity agents are absorbed
  by open centers as the radius grows.  May open fewer than k centers.
* expanding approvals: every agent holds budget k/n; a candidate opens when
  the agents within delta jointly hold one unit, which is collected
  closest-first (the deduction order is a pluggable policy).
* fair greedy capture: randomized rule for instances whose agents are
  exactly the candidate set; each captured ball elects q of its members
  uniformly at random, and the committee is topped up with uniformly random
  unselected agents at the end.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from fractions import Fraction

from .instance import Instance, Outcome, quota
from .metric import TAU
from .reports import encode_value


@dataclass(frozen=True)
class TraceEvent:
    delta: object
    kind: str  # "open" | "absorb" | "deduct"
    candidate: int | None = None
    agent: int | None = None
    center: int | None = None
    amount: object = None
    captured: tuple = ()
    remaining: int = 0

    def to_json(self):
        data = {
            "delta": encode_value(self.delta),
            "kind": self.kind,
            "remaining": self.remaining,
        }
        if self.candidate is not None:
            data["candidate"] = self.candidate
        if self.agent is not None:
            data["agent"] = self.agent
        if self.center is not None:
            data["center"] = self.center
        if self.amount is not None:
            data["amount"] = encode_value(self.amount)
        if self.captured:
            data["captured"] = list(self.captured)
        return data


@dataclass(frozen=True)
class Trace:
    events: tuple

    def to_json(self):
        return [e.to_json() for e in self.events]


def _distance_table(instance):
    return [
        [instance.d_ac(i, j) for j in range(instance.num_candidates)]
        for i in range(instance.n)
    ]


def greedy_capture(instance):
    """Quota-ball sweep; returns (Outcome, Trace)."""
    if instance.num_candidates == 0:
        raise ValueError("empty candidate set")
    n, k = instance.n, instance.k
    m = quota(n, k, 1, 1)
    table = _distance_table(instance)
    remaining = list(range(n))
    opened = []
    opened_set = set()
    events = []
    while remaining:
        best = None
        if len(opened) < k and len(remaining) >= m:
            for j in range(instance.num_candidates):
                if j in opened_set:
                    continue
                delta = heapq.nsmallest(m, (table[i][j] for i in remaining))[-1]
                key = (delta, 0, j, -1)
                if best is None or key < best:
                    best = key
        for w in opened:
            delta, agent = min((table[i][w], i) for i in remaining)
            key = (delta, 1, agent, w)
            if best is None or key < best:
                best = key
        delta, kind, idx, center = best
        if kind == 0:
            captured = tuple(i for i in remaining if table[i][idx] <= delta + TAU)
            remaining = [i for i in remaining if i not in set(captured)]
            opened.append(idx)
            opened_set.add(idx)
            events.append(
                TraceEvent(
                    delta=delta,
                    kind="open",
                    candidate=idx,
                    captured=captured,
                    remaining=len(remaining),
                )
            )
        else:
            remaining.remove(idx)
            events.append(
                TraceEvent(
                    delta=delta,
                    kind="absorb",
                    agent=idx,
                    center=center,
                    captured=(idx,),
                    remaining=len(remaining),
                )
            )
    outcome = Outcome(frozenset(opened), origin="gc")
    return outcome, Trace(tuple(events))


def closest_first_order(ball, dists):
    """Default deduction policy: by distance, ties by agent index."""
    return sorted(ball, key=lambda i: (dists[i], i))


def expanding_approvals(instance, deduct_order=None):
    """Budgeted sweep; returns (Outcome, Trace).

    ``deduct_order`` maps (ball agents, distance row) to the order in which
    budgets are zeroed when a candidate opens.
    """
    if instance.num_candidates == 0:
        raise ValueError("empty candidate set")
    if deduct_order is None:
        deduct_order = closest_first_order
    n, k = instance.n, instance.k
    table = _distance_table(instance)
    budgets = [Fraction(k, n) for _ in range(n)]
    levels = sorted({table[i][j] for i in range(n) for j in range(instance.num_candidates)})
    opened = []
    opened_set = set()
    events = []

    def remaining_count():
        return sum(1 for b in budgets if b > 0)

    for delta in levels:
        if len(opened) == k or sum(budgets) < 1:
            break
        limit = delta + TAU
        while len(opened) < k:
            chosen = None
            for j in range(instance.num_candidates):
                if j in opened_set:
                    continue
                ball = [i for i in range(n) if table[i][j] <= limit]
                if sum(budgets[i] for i in ball) >= 1:
                    chosen = (j, ball)
                    break
            if chosen is None:
                break
            j, ball = chosen
            opened.append(j)
            opened_set.add(j)
            events.append(
                TraceEvent(delta=delta, kind="open", candidate=j, remaining=remaining_count())
            )
            dists = {i: table[i][j] for i in ball}
            need = Fraction(1)
            for i in deduct_order(ball, dists):
                if need == 0:
                    break
                take = min(budgets[i], need)
                if take > 0:
                    budgets[i] -= take
                    need -= take
                    events.append(
                        TraceEvent(
                            delta=delta,
                            kind="deduct",
                            agent=i,
                            center=j,
                            amount=take,
                            remaining=remaining_count(),
                        )
                    )
            assert need == 0, "ball budget checked before opening"
    outcome = Outcome(frozenset(opened), origin="ea")
    return outcome, Trace(tuple(events))


def fair_greedy_capture(instance, q, seed):
    """Randomized quota-ball sweep over agents; needs agents == candidates.

    Returns (Outcome, Trace); identical seeds give identical results.  Balls
    that can no longer reach the quota leave their agents uncaptured, and
    the final committee is filled up to k with uniformly random agents that
    were never selected.
    """
    if q < 1 or q > instance.k:
        raise ValueError("q must satisfy 1 <= q <= k")
    if not instance.agents_equal_candidates():
        raise ValueError("rule defined only when agents and candidates coincide")
    n, k = instance.n, instance.k
    m = quota(n, k, q, 1)
    rng = random.Random(seed)
    daa = [[instance.d_aa(i, j) for j in range(n)] for i in range(n)]
    cand_at_point = {}
    for idx, c in enumerate(instance.candidates):
        cand_at_point.setdefault(c, idx)
    remaining = set(range(n))
    selected = []
    events = []
    last_delta = 0
    while len(remaining) >= m:
        best = None
        for p in sorted(remaining):
            delta = heapq.nsmallest(m, (daa[p][i] for i in remaining))[-1]
            if best is None or (delta, p) < best:
                best = (delta, p)
        delta, p = best
        limit = delta + TAU
        ball = sorted(i for i in remaining if daa[p][i] <= limit)
        pick = sorted(rng.sample(ball, min(q, len(ball))))
        pick_set = set(pick)
        others = sorted(
            (i for i in ball if i not in pick_set), key=lambda i: (daa[p][i], i)
        )
        deleted = tuple(sorted(pick_set | set(others[: m - len(pick)])))
        remaining -= set(deleted)
        for pos, s in enumerate(pick):
            events.append(
                TraceEvent(
                    delta=delta,
                    kind="open",
                    candidate=cand_at_point[instance.agents[s]],
                    captured=deleted if pos == 0 else (),
                    remaining=len(remaining),
                )
            )
        selected.extend(pick)
        last_delta = delta
    if len(selected) < k:
        pool = sorted(set(range(n)) - set(selected))
        extra = sorted(rng.sample(pool, min(k - len(selected), len(pool))))
        for s in extra:
            events.append(
                TraceEvent(
                    delta=last_delta,
                    kind="open",
                    candidate=cand_at_point[instance.agents[s]],
                    remaining=len(remaining),
                )
            )
        selected.extend(extra)
    centers = frozenset(cand_at_point[instance.agents[s]] for s in selected)
    outcome = Outcome(centers, origin=f"fgc(q={q},seed={seed})")
    return outcome, Trace(tuple(events))


def restricted_solve(instance, rule):
    """Run a rule with the candidate set narrowed to the agents' points.

    The returned outcome refers to the original candidate indices and is
    tagged restricted.  Useful when the full candidate set is large: the
    narrowed run keeps constant-factor fairness on the full instance.
    """
    if rule not in ("gc", "ea"):
        raise ValueError(f"unknown rule {rule!r}")
    if not instance.agents_within_candidates():
        raise ValueError("restricted mode needs agents inside the candidate set")
    seen = {}
    agent_points = []
    for a in instance.agents:
        if a not in seen:
            seen[a] = len(agent_points)
            agent_points.append(a)
    sub = Instance(instance.space, instance.agents, tuple(agent_points), instance.k)
    if rule == "gc":
        out, trace = greedy_capture(sub)
    else:
        out, trace = expanding_approvals(sub)
    orig_at_point = {}
    for idx, c in enumerate(instance.candidates):
        orig_at_point.setdefault(c, idx)
    remap = {j: orig_at_point[agent_points[j]] for j in range(len(agent_points))}
    centers = frozenset(remap[j] for j in out.centers)
    events = tuple(
        TraceEvent(
            delta=e.delta,
            kind=e.kind,
            candidate=None if e.candidate is None else remap[e.candidate],
            agent=e.agent,
            center=None if e.center is None else remap[e.center],
            amount=e.amount,
            captured=e.captured,
            remaining=e.remaining,
        )
        for e in trace.events
    )
    outcome = Outcome(centers, origin=f"{rule}-restricted")
    return outcome, Trace(events)
