"""Cycle-norm and motion bounds for 2-distinguishability, and random search.

Logs are base 2. Comparisons that come out exactly equal count as
satisfied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import kernels
from .autgroup import GroupSummary, find_color_preserving_automorphism
from .graph import RootedGraph


@dataclass
class MotionVerdict:
    order: int
    d: int
    cycle_norm: Optional[int]
    motion: Optional[int]
    cycle_norm_holds: bool
    cycle_norm_margin: Optional[float]
    motion_holds: bool
    motion_margin: Optional[float]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "labels": self.d,
            "cycle_norm": self.cycle_norm,
            "motion": self.motion,
            "cycle_norm_bound_holds": self.cycle_norm_holds,
            "cycle_norm_margin": self.cycle_norm_margin,
            "motion_bound_holds": self.motion_holds,
            "motion_margin": self.motion_margin,
        }


def _require_exact(summary: GroupSummary) -> None:
    if not summary.exact:
        raise ValueError("group order is only a lower bound")


def check_motion_bound(summary: GroupSummary, d: int = 2) -> MotionVerdict:
    """cn(G) log d >= log|Aut| and m(G) >= 2 log|Aut|, with margins (lhs - rhs).

    For the trivial group both hold vacuously and the margins are ``None``.
    """
    _require_exact(summary)
    if d < 2:
        raise ValueError("need at least 2 labels")
    log_order = math.log2(summary.order)
    if summary.order == 1:
        return MotionVerdict(1, d, None, None, True, None, True, None)
    cn_margin = summary.cycle_norm * math.log2(d) - log_order
    m_margin = summary.motion - 2 * log_order
    return MotionVerdict(
        summary.order, d, summary.cycle_norm, summary.motion,
        cn_margin >= 0, cn_margin, m_margin >= 0, m_margin,
    )


@dataclass
class SurvivorEstimate:
    bound: Fraction
    exact: Optional[Fraction]

    def to_json(self) -> dict:
        return {
            "union_bound": float(self.bound),
            "exact_sum": None if self.exact is None else float(self.exact),
            "union_bound_fraction": str(self.bound),
            "exact_sum_fraction": None if self.exact is None else str(self.exact),
        }


def expected_survivors(summary: GroupSummary, d: int = 2) -> SurvivorEstimate:
    """Expected number of nontrivial automorphisms preserving a uniform d-coloring.

    ``bound`` is (|Aut| - 1) d^-cn(G); ``exact`` is the sum of d^-cn(phi) over
    nontrivial elements when they are listed.
    """
    _require_exact(summary)
    if summary.order == 1:
        return SurvivorEstimate(Fraction(0), Fraction(0))
    bound = Fraction(summary.order - 1, d ** summary.cycle_norm)
    exact = None
    if summary.elements is not None:
        exact = sum((Fraction(1, d ** p.cycle_norm) for p in summary.nontrivial()), Fraction(0))
    return SurvivorEstimate(bound, exact)


def preserved_count(images, d: int) -> int:
    """Number of d-labelings preserved by the permutation (exhaustive)."""
    return kernels.backend.count_preserved(images, d)


@dataclass
class RandomSearchResult:
    coloring: Optional[dict[str, int]]
    trials: int
    seed: int

    @property
    def found(self) -> bool:
        return self.coloring is not None

    def to_json(self) -> dict:
        return {"found": self.found, "trials": self.trials, "seed": self.seed, "labels": self.coloring}


def find_distinguishing_coloring(
    g: RootedGraph,
    summary: Optional[GroupSummary],
    d: int = 2,
    budget: int = 10_000,
    seed: int = 0,
) -> RandomSearchResult:
    """Sample uniform d-labelings until one is verified distinguishing.

    Trial t uses the t-th block of ``g.n`` draws from a PCG64 stream seeded
    with ``seed``; vertex i (in sorted order) gets the i-th draw. ``summary``
    only short-circuits the trivial group.
    """
    if d < 2:
        raise ValueError("need at least 2 labels")
    if budget < 1:
        raise ValueError("budget must be >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    if summary is not None and summary.exact and summary.order == 1:
        return RandomSearchResult({v: 0 for v in g.vertices}, 0, seed)
    for t in range(1, budget + 1):
        draw = rng.integers(0, d, size=g.n)
        labels = {v: int(c) for v, c in zip(g.vertices, draw)}
        if find_color_preserving_automorphism(g, labels) is None:
            return RandomSearchResult(labels, t, seed)
    return RandomSearchResult(None, budget, seed)
