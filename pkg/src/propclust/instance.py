"""Problem instances, outcomes, and exact quota arithmetic.

An instance is a set of agents and a set of candidates (both lists of point
ids into one metric space, agents possibly repeated) together with a target
number of centers ``k``.  An outcome is a set of *candidate indices*, which
keeps co-located candidates distinguishable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .metric import MetricSpace


def quota(n, k, ell=1, gamma=1):
    """Smallest integer >= gamma * ell * n / k, computed exactly.

    This is the minimum size of a group entitled to ``ell`` centers, scaled
    by ``gamma``.  All arguments are integers except ``gamma``, which may be
    any rational (int, Fraction, or a float with an exact binary value such
    as 1.5).
    """
    if k <= 0:
        raise ValueError("k must be positive")
    if n < 0 or ell < 0:
        raise ValueError("n and ell must be non-negative")
    g = Fraction(gamma)
    if g < 1:
        raise ValueError("gamma must be at least 1")
    return math.ceil(g * ell * n / Fraction(k))


@dataclass(frozen=True)
class Instance:
    """Agents, candidates, and committee size over a shared metric space.

    ``agents`` and ``candidates`` are tuples of point ids.  Duplicate agent
    entries are allowed (co-located voters are distinct agents); candidate
    entries are distinct selectable slots even when co-located.
    """

    space: MetricSpace
    agents: tuple
    candidates: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "agents", tuple(int(a) for a in self.agents))
        if self.candidates == "all":
            cands = tuple(range(self.space.num_points))
        else:
            cands = tuple(int(c) for c in self.candidates)
        object.__setattr__(self, "candidates", cands)
        if len(self.agents) < 1:
            raise ValueError("need at least one agent")
        if self.k < 1:
            raise ValueError("k must be positive")
        npts = self.space.num_points
        for a in self.agents:
            if not 0 <= a < npts:
                raise ValueError(f"agent point id out of range: {a}")
        for c in self.candidates:
            if not 0 <= c < npts:
                raise ValueError(f"candidate point id out of range: {c}")

    @property
    def n(self):
        return len(self.agents)

    @property
    def num_candidates(self):
        return len(self.candidates)

    def d_ac(self, agent_idx, cand_idx):
        """Distance from an agent index to a candidate index."""
        return self.space.dist(self.agents[agent_idx], self.candidates[cand_idx])

    def d_aa(self, i, j):
        """Distance between two agent indices."""
        return self.space.dist(self.agents[i], self.agents[j])

    def agents_within_candidates(self):
        """True when every agent sits on some candidate point (N inside C)."""
        cand_points = set(self.candidates)
        return all(a in cand_points for a in self.agents)

    def agents_equal_candidates(self):
        """True when agents and candidates occupy the same point set (N = C)."""
        return set(self.agents) == set(self.candidates)


@dataclass(frozen=True)
class Outcome:
    """A chosen center set: a frozenset of candidate indices, at most k."""

    centers: frozenset
    origin: str = "external"

    def __post_init__(self):
        object.__setattr__(self, "centers", frozenset(int(c) for c in self.centers))

    def sorted_centers(self):
        return tuple(sorted(self.centers))


def validate(instance, outcome):
    """Check an outcome against an instance; violations returned as data.

    Returns an empty list when the outcome is well-formed, otherwise a list
    of ``{"kind": ..., "detail": ...}`` records.
    """
    violations = []
    if len(outcome.centers) > instance.k:
        violations.append(
            {"kind": "size", "detail": f"{len(outcome.centers)} centers exceed k={instance.k}"}
        )
    for c in sorted(outcome.centers):
        if not 0 <= c < instance.num_candidates:
            violations.append(
                {"kind": "membership", "detail": f"center {c} is not a candidate index"}
            )
    return violations
