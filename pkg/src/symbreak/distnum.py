"""Exact distinguishing numbers by exhaustive search over labelings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Optional

from .autgroup import Permutation, find_color_preserving_automorphism, group_order
from .graph import RootedGraph

# candidate labelings examined per label count before giving up
GUARD = 10**7


@dataclass
class DistinguishingResult:
    d: Optional[int]
    witness: Optional[dict[str, int]]
    candidates: dict[int, int]
    exceeded: bool = False
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "distinguishing_number": self.d,
            "witness": self.witness,
            "candidates_examined": {str(k): v for k, v in self.candidates.items()},
            "exceeded": self.exceeded,
            "reason": self.reason,
        }


def _labelings(n: int, d: int, reduce: bool):
    """Mixed-radix order, vertex 0 most significant; vertex 0 pinned to 0 if reducing."""
    if n == 0:
        yield ()
        return
    first = (0,) if reduce else range(d)
    for head in first:
        for rest in itertools.product(range(d), repeat=n - 1):
            yield (head,) + rest


def distinguishing_number(
    g: RootedGraph,
    max_d: int,
    reduce: bool = True,
    guard: int = GUARD,
) -> DistinguishingResult:
    """Least d <= max_d with a distinguishing d-labeling.

    Each level d enumerates ``d**n`` labelings (``d**(n-1)`` with the
    reduction flag, which fixes vertex 0 to label 0) and fails fast with
    ``exceeded`` if that count is above ``guard``. The witness is the first
    distinguishing labeling in enumeration order.
    """
    if max_d < 1:
        raise ValueError("max_d must be >= 1")
    counts: dict[int, int] = {}
    if group_order(g) == 1:
        counts[1] = 1
        return DistinguishingResult(1, {v: 0 for v in g.vertices}, counts)
    counts[1] = 1
    for d in range(2, max_d + 1):
        size = d ** (g.n - 1 if reduce and g.n else g.n)
        if size > guard:
            return DistinguishingResult(
                None, None, counts, exceeded=True,
                reason=f"{size} labelings with {d} labels exceed the guard of {guard}",
            )
        seen = 0
        for lab in _labelings(g.n, d, reduce):
            seen += 1
            labels = dict(zip(g.vertices, lab))
            if find_color_preserving_automorphism(g, labels) is None:
                counts[d] = seen
                return DistinguishingResult(d, labels, counts)
        counts[d] = seen
    return DistinguishingResult(None, None, counts, reason=f"no distinguishing labeling with at most {max_d} labels")


@dataclass
class DistinguishingVerdict:
    distinguishing: bool
    witness: Optional[Permutation]

    def __bool__(self):
        return self.distinguishing

    def to_json(self) -> dict:
        return {
            "distinguishing": self.distinguishing,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def is_distinguishing(g: RootedGraph, coloring: Mapping[str, int]) -> DistinguishingVerdict:
    phi = find_color_preserving_automorphism(g, coloring)
    return DistinguishingVerdict(phi is None, phi)
