"""Automorphisms of finite graphs: enumeration, stabilizers, motion, cycle norm.

All searches go through the kernels in :mod:`symbreak.kernels`: vertices are
first split by color refinement (which subsumes degree and, once the root
is individualized, distance to the root), then a backtracking search
assigns images cell by cell.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from . import kernels
from .graph import RootedGraph, SphereDecomposition

DEFAULT_CAP = 10**6


class Permutation:
    """A bijection of the vertex set of a fixed graph, stored as an image tuple.

    ``images[i]`` is the index of the image of vertex ``labels[i]``.
    """

    __slots__ = ("images", "labels", "__dict__")

    def __init__(self, images: Sequence[int], labels: Sequence[str]):
        self.images = tuple(images)
        self.labels = tuple(labels)
        if len(self.images) != len(self.labels) or sorted(self.images) != list(range(len(self.labels))):
            raise ValueError("images do not form a permutation of the vertex set")

    @classmethod
    def identity(cls, labels: Sequence[str]) -> "Permutation":
        return cls(range(len(labels)), labels)

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, str], labels: Sequence[str]) -> "Permutation":
        index = {v: i for i, v in enumerate(labels)}
        return cls([index[mapping.get(v, v)] for v in labels], labels)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[str]], labels: Sequence[str]) -> "Permutation":
        mapping = {}
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                mapping[a] = b
        return cls.from_mapping(mapping, labels)

    def __call__(self, v: str) -> str:
        return self.labels[self.images[self._index[v]]]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.labels)}

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images and self.labels == other.labels

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = "".join("(" + " ".join(c) + ")" for c in self.cycles() if len(c) > 1)
        return f"Permutation({cyc or 'id'})"

    @property
    def mapping(self) -> dict[str, str]:
        return {v: self.labels[j] for v, j in zip(self.labels, self.images)}

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def compose(self, other: "Permutation") -> "Permutation":
        """``self ∘ other``: apply ``other`` first."""
        return Permutation([self.images[j] for j in other.images], self.labels)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv, self.labels)

    @cached_property
    def index_cycles(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * len(self.images)
        out = []
        for s in range(len(self.images)):
            if seen[s]:
                continue
            cyc = []
            x = s
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return tuple(out)

    def cycles(self) -> list[tuple[str, ...]]:
        """All cycles including fixed points, each starting at its first vertex."""
        return [tuple(self.labels[i] for i in c) for c in self.index_cycles]

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self.labels[i] for i, j in enumerate(self.images) if i != j)

    @property
    def motion(self) -> int:
        return sum(1 for i, j in enumerate(self.images) if i != j)

    @property
    def cycle_norm(self) -> int:
        return len(self.images) - len(self.index_cycles)

    def to_json(self) -> dict[str, str]:
        return self.mapping


def motion_of(phi: Permutation) -> int:
    return phi.motion


def cycle_norm_of(phi: Permutation) -> int:
    return phi.cycle_norm


def is_automorphism(g: RootedGraph, images: Sequence[int]) -> bool:
    if sorted(images) != list(range(g.n)):
        return False
    for i, nb in enumerate(g.adjacency):
        target = g.adjacency[images[i]]
        if len(target) != len(nb):
            return False
        ts = set(target)
        if any(images[j] not in ts for j in nb):
            return False
    return True


@dataclass
class GroupSummary:
    """What is known about Aut(G) (or a subgroup) after a capped enumeration.

    ``order`` is exact when ``elements`` is present; after truncation it is a
    lower bound and ``generators_only`` is set. ``motion`` and ``cycle_norm``
    are ``None`` for the trivial group and whenever the list is truncated.
    """

    order: int
    elements: Optional[list[Permutation]]
    motion: Optional[int]
    cycle_norm: Optional[int]
    generators_only: bool = False
    labels: tuple[str, ...] = field(default=(), repr=False)

    @property
    def exact(self) -> bool:
        return not self.generators_only

    @classmethod
    def from_elements(cls, elements: list[Permutation], labels: Sequence[str]) -> "GroupSummary":
        elements = sorted(elements, key=lambda p: p.images)
        nontrivial = [p for p in elements if not p.is_identity()]
        return cls(
            order=len(elements),
            elements=elements,
            motion=min((p.motion for p in nontrivial), default=None),
            cycle_norm=min((p.cycle_norm for p in nontrivial), default=None),
            labels=tuple(labels),
        )

    def nontrivial(self) -> list[Permutation]:
        if self.elements is None:
            raise ValueError("group summary has no explicit element list")
        return [p for p in self.elements if not p.is_identity()]

    def to_json(self, with_elements: bool = False) -> dict:
        out = {
            "order": self.order,
            "exact": self.exact,
            "motion": self.motion,
            "cycle_norm": self.cycle_norm,
        }
        if with_elements and self.elements is not None:
            out["elements"] = [p.to_json() for p in self.elements]
        return out


# -- search driver -----------------------------------------------------------

def _initial_colors(g: RootedGraph, coloring: Optional[Mapping[str, int]]) -> list[int]:
    if coloring is None:
        return [0] * g.n
    missing = [v for v in g.vertices if v not in coloring]
    if missing:
        raise ValueError(f"coloring is partial: {len(missing)} vertices unlabeled, e.g. {missing[0]!r}")
    return [int(coloring[v]) for v in g.vertices]


def _refine(g: RootedGraph, colors: Sequence[int]) -> list[int]:
    indptr, indices = g.csr
    return kernels.backend.refine(indptr, indices, colors)


def _individualize(g: RootedGraph, refined: Sequence[int], v: int) -> list[int]:
    c = list(refined)
    c[v] = g.n  # larger than every refined label
    return _refine(g, c)


def _bfs_order(g: RootedGraph, start: int = 0) -> list[int]:
    seen = [False] * g.n
    order = []
    for s in [start] + list(range(g.n)):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return order


def _search(g, colp, colq, order, proj, cap):
    indptr, indices = g.csr
    return kernels.backend.search(indptr, indices, colp, colq, order, proj, cap)


def _cells(colors: Sequence[int]) -> dict[int, list[int]]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return cells


def _map_once(g: RootedGraph, cp: list[int], base: list[int], v: int, w: int, cap: int = 1):
    """Isomorphisms of the refined coloring ``base`` sending v to w."""
    cq = _individualize(g, base, w)
    if sorted(cp) != sorted(cq):
        return []
    return _search(g, cp, cq, _bfs_order(g, v), g.n, cap)


def _base_walk(g: RootedGraph, colors: list[int]):
    """Walk down a chain of point stabilizers of the colored graph.

    Yields ``(v, cell, cp, base)`` for each base point ``v``: ``cell`` is
    the cell of ``v`` in the current refined coloring ``base`` and ``cp``
    is ``base`` refined with ``v`` individualized. The caller must send back
    whether to continue.
    """
    base = _refine(g, colors)
    while True:
        cells = [c for c in _cells(base).values() if len(c) > 1]
        if not cells:
            return
        cell = min(cells, key=lambda c: (len(c), c[0]))
        v = cell[0]
        cp = _individualize(g, base, v)
        yield v, cell, cp, base
        base = cp


def find_nontrivial_index(g: RootedGraph, colors: list[int]) -> Optional[tuple[int, ...]]:
    for v, cell, cp, base in _base_walk(g, colors):
        for w in cell:
            if w == v:
                continue
            sols = _map_once(g, cp, base, v, w)
            if sols:
                return sols[0]
    return None


def find_color_preserving_automorphism(g: RootedGraph, coloring: Mapping[str, int]) -> Optional[Permutation]:
    """A nontrivial automorphism keeping every label, or ``None``.

    ``coloring`` must label every vertex. The search fixes base points one
    at a time: for a vertex ``v`` it tries each candidate image ``w`` in its
    refined cell; if none works, ``v`` is fixed by the whole color-preserving
    group and is individualized before moving on.
    """
    colors = _initial_colors(g, coloring)
    sol = find_nontrivial_index(g, colors)
    return None if sol is None else Permutation(sol, g.vertices)


def group_order(g: RootedGraph, coloring: Optional[Mapping[str, int]] = None, fix: Optional[str] = None) -> int:
    """Exact order as the product of orbit lengths along a stabilizer chain."""
    colors = _initial_colors(g, coloring)
    if fix is not None:
        colors = _individualize(g, _refine(g, colors), g.index(fix))
    order = 1
    for v, cell, cp, base in _base_walk(g, colors):
        orbit = 1 + sum(1 for w in cell if w != v and _map_once(g, cp, base, v, w))
        order *= orbit
    return order


def enumerate_automorphisms(
    g: RootedGraph,
    cap: int = DEFAULT_CAP,
    coloring: Optional[Mapping[str, int]] = None,
    fix: Optional[str] = None,
) -> GroupSummary:
    """All automorphisms (optionally color-preserving, optionally fixing a vertex).

    Beyond ``cap`` elements the list is dropped and the summary carries the
    lower bound ``cap + 1`` with ``generators_only`` set.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    colors = _refine(g, _initial_colors(g, coloring))
    start = 0
    if fix is not None:
        start = g.index(fix)
        colors = _individualize(g, colors, start)
    elif g.n:
        # start inside the smallest nontrivial cell to branch early
        cells = sorted(_cells(colors).values(), key=lambda c: (len(c) == 1, len(c), c[0]))
        start = cells[0][0]
    sols = _search(g, colors, colors, _bfs_order(g, start) if g.n else [], g.n, cap + 1)
    if len(sols) > cap:
        return GroupSummary(order=len(sols), elements=None, motion=None, cycle_norm=None,
                            generators_only=True, labels=g.vertices)
    return GroupSummary.from_elements([Permutation(s, g.vertices) for s in sols], g.vertices)


def stabilizer(g: RootedGraph, v: str, summary: GroupSummary) -> GroupSummary:
    if summary.elements is None:
        raise ValueError("stabilizer needs an explicit element list")
    i = g.index(v)
    return GroupSummary.from_elements([p for p in summary.elements if p.images[i] == i], summary.labels)


def restrict_to_ball(phi: Permutation, dec: SphereDecomposition, n: int) -> Permutation:
    """The permutation induced on B(n) by a center-fixing automorphism."""
    if n < 0 or n > dec.eccentricity:
        raise ValueError(f"radius {n} outside [0, {dec.eccentricity}]")
    if phi(dec.center) != dec.center:
        raise ValueError(f"permutation moves the center {dec.center!r}")
    ball = sorted(dec.ball(n))
    pos = {v: i for i, v in enumerate(ball)}
    images = []
    for v in ball:
        w = phi(v)
        if w not in pos:
            raise ValueError(f"{v!r} is mapped outside the ball to {w!r}")
        images.append(pos[w])
    return Permutation(images, ball)


def ball_restrictions(g: RootedGraph, root: str, ball: Sequence[str], cap: int = DEFAULT_CAP) -> Optional[list[tuple[int, ...]]]:
    """Distinct restrictions to ``ball`` of the root stabilizer of ``g``.

    Each restriction is returned as a full automorphism of ``g`` (one
    extension of it). ``ball`` must be a BFS ball around ``root``. Returns
    ``None`` when more than ``cap`` restrictions exist.
    """
    r = g.index(root)
    colors = _individualize(g, _refine(g, [0] * g.n), r)
    order = _bfs_order(g, r)
    proj = len(ball)
    if set(order[:proj]) != {g.index(v) for v in ball}:
        raise ValueError("ball is not a BFS prefix around the root")
    sols = _search(g, colors, colors, order, proj, cap + 1)
    return None if len(sols) > cap else sols


def root_movers(g: RootedGraph, root: str, cap: int = DEFAULT_CAP) -> Optional[list[tuple[int, ...]]]:
    """Every automorphism of ``g`` that moves ``root`` (``None`` beyond ``cap``)."""
    r = g.index(root)
    base = _refine(g, [0] * g.n)
    cp = _individualize(g, base, r)
    out: list[tuple[int, ...]] = []
    for w, c in enumerate(base):
        if w == r or c != base[r]:
            continue
        out.extend(_map_once(g, cp, base, r, w, cap=cap + 1 - len(out)))
        if len(out) > cap:
            return None
    return out
