"""Pareto-frontier selection over (time, energy) estimates plus validation
metrics.

A point dominates another when it is no worse on both axes and strictly
better on at least one. Exactly-equal (time, energy) pairs from different
configurations are all kept on the frontier: they are distinct actionable
choices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Optional, Sequence

import numpy as np

from .models import Estimate


class ParetoError(ValueError):
    pass


@dataclass(frozen=True)
class ParetoPoint:
    estimate: Estimate
    dominated_count: int


@dataclass(frozen=True)
class ReferenceComparison:
    """How the frontier fares against one externally measured reference run."""

    label: str
    # Best relative energy saving among frontier points at least as fast as
    # the reference; None when no frontier point is that fast.
    energy_saving: Optional[float]
    # Best relative speedup among frontier points using at most the
    # reference energy; None when no frontier point is that frugal.
    speedup: Optional[float]


def pareto_frontier(points: Sequence[Estimate]) -> list[Estimate]:
    """The non-dominated subset, sorted ascending by time.

    Sort by (time, energy), then sweep: a time group survives iff its
    minimum energy beats every faster point's energy strictly; ties at that
    minimum are all retained.
    """
    if not points:
        raise ParetoError("empty point set")
    ordered = sorted(points, key=lambda e: (e.time_s, e.energy_j))
    frontier: list[Estimate] = []
    best_energy = float("inf")
    for _, group in groupby(ordered, key=lambda e: e.time_s):
        members = list(group)
        e_min = members[0].energy_j
        if e_min < best_energy:
            frontier.extend(m for m in members if m.energy_j == e_min)
            best_energy = e_min
    return frontier


def dominance_counts(points: Sequence[Estimate]) -> list[ParetoPoint]:
    """Pairwise diagnostic: how many points dominate each point."""
    if not points:
        raise ParetoError("empty point set")
    t = np.array([p.time_s for p in points])
    e = np.array([p.energy_j for p in points])
    no_worse = (t[:, None] <= t[None, :]) & (e[:, None] <= e[None, :])
    better = (t[:, None] < t[None, :]) | (e[:, None] < e[None, :])
    counts = (no_worse & better).sum(axis=0)
    return [ParetoPoint(p, int(n)) for p, n in zip(points, counts)]


def mape(actual: Sequence[float], estimated: Sequence[float]) -> float:
    """Mean absolute percentage error (as a fraction, not percent)."""
    if len(actual) == 0 or len(actual) != len(estimated):
        raise ParetoError("mape needs two equal-length nonempty vectors")
    a = np.asarray(actual, dtype=float)
    e = np.asarray(estimated, dtype=float)
    if np.any(a == 0):
        raise ParetoError("mape undefined for zero actual values")
    return float(np.mean(np.abs((a - e) / a)))


def frontier_variation(frontier: Sequence[Estimate]) -> tuple[float, float]:
    """(energy variation, performance variation), each (max-min)/max over
    the frontier's energies and times respectively."""
    if not frontier:
        raise ParetoError("empty frontier")
    energies = [p.energy_j for p in frontier]
    times = [p.time_s for p in frontier]
    energy_var = (max(energies) - min(energies)) / max(energies)
    perf_var = (max(times) - min(times)) / max(times)
    return energy_var, perf_var


def compare_to_reference(frontier: Sequence[Estimate],
                         label: str, time_s: float, energy_j: float,
                         ) -> ReferenceComparison:
    """Signed fractions of energy saved / time saved versus a reference run
    (e.g. a governor), restricted to frontier points that do not lose on the
    other axis."""
    if not frontier:
        raise ParetoError("empty frontier")
    at_least_as_fast = [p.energy_j for p in frontier if p.time_s <= time_s]
    at_most_energy = [p.time_s for p in frontier if p.energy_j <= energy_j]
    saving = None
    if at_least_as_fast:
        saving = (energy_j - min(at_least_as_fast)) / energy_j
    speedup = None
    if at_most_energy:
        speedup = (time_s - min(at_most_energy)) / time_s
    return ReferenceComparison(label=label, energy_saving=saving, speedup=speedup)
