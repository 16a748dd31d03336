"""Finite rooted graphs, sphere decompositions and growth-bound predicates."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence


class UnknownVertexError(KeyError):
    """Raised when a vertex identifier is not part of the graph."""

    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"unknown vertex {self.vertex!r}"


@dataclass(frozen=True)
class RootedGraph:
    """Simple undirected graph on string identifiers with an optional root.

    Vertices are kept in lexicographic order; every internal index refers
    to that order. Build instances with :meth:`from_edges`.
    """

    vertices: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    root: Optional[str] = None
    _index: dict = field(default=None, repr=False, compare=False)

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[Sequence[str]], root: Optional[str] = None):
        verts = sorted(set(vertices))
        for v in verts:
            if not isinstance(v, str):
                raise TypeError(f"vertex identifiers must be strings, got {v!r}")
        index = {v: i for i, v in enumerate(verts)}
        nbrs = [set() for _ in verts]
        for e in edges:
            if len(e) != 2:
                raise ValueError(f"edge {e!r} does not have two endpoints")
            a, b = e
            if a not in index:
                raise UnknownVertexError(a)
            if b not in index:
                raise UnknownVertexError(b)
            if a == b:
                raise ValueError(f"self-loop at {a!r}")
            nbrs[index[a]].add(index[b])
            nbrs[index[b]].add(index[a])
        if root is not None and root not in index:
            raise UnknownVertexError(root)
        return cls(tuple(verts), tuple(tuple(sorted(s)) for s in nbrs), root, index)

    def __post_init__(self):
        if self._index is None:
            object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})

    # -- basic queries -------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def __contains__(self, v) -> bool:
        return v in self._index

    def neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(self.vertices[j] for j in self.adjacency[self.index(v)])

    def degree(self, v: str) -> int:
        return len(self.adjacency[self.index(v)])

    def has_edge(self, a: str, b: str) -> bool:
        return self.index(b) in self.adjacency[self.index(a)]

    @cached_property
    def edges(self) -> tuple[tuple[str, str], ...]:
        out = []
        for i, nb in enumerate(self.adjacency):
            for j in nb:
                if i < j:
                    out.append((self.vertices[i], self.vertices[j]))
        return tuple(sorted(out))

    @cached_property
    def csr(self) -> tuple[list[int], list[int]]:
        indptr = [0]
        indices: list[int] = []
        for nb in self.adjacency:
            indices.extend(nb)
            indptr.append(len(indices))
        return indptr, indices

    def with_root(self, root: Optional[str]) -> "RootedGraph":
        if root is not None:
            self.index(root)
        return RootedGraph(self.vertices, self.adjacency, root, self._index)

    def distances_from(self, v: str, limit: Optional[int] = None) -> dict[int, int]:
        """BFS distances (by index) from ``v``, optionally cut at ``limit``."""
        s = self.index(v)
        dist = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            dx = dist[x]
            if limit is not None and dx >= limit:
                continue
            for y in self.adjacency[x]:
                if y not in dist:
                    dist[y] = dx + 1
                    queue.append(y)
        return dist

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(self.distances_from(self.vertices[0])) == self.n

    def require_connected(self) -> None:
        if not self.is_connected():
            raise ValueError("graph is not connected")

    def induced(self, keep: Iterable[str], root: Optional[str] = None) -> "RootedGraph":
        keep = set(keep)
        return RootedGraph.from_edges(keep, [e for e in self.edges if e[0] in keep and e[1] in keep], root)


@dataclass(frozen=True)
class SphereDecomposition:
    """Distance layers around a center: ``layers[r]`` is the sphere of radius r."""

    center: str
    layers: tuple[tuple[str, ...], ...]

    @property
    def eccentricity(self) -> int:
        return len(self.layers) - 1

    def sphere_size(self, r: int) -> int:
        return len(self.layers[r]) if 0 <= r < len(self.layers) else 0

    def ball_size(self, r: int) -> int:
        return sum(len(layer) for layer in self.layers[: r + 1])

    def ball(self, r: int) -> tuple[str, ...]:
        return tuple(v for layer in self.layers[: r + 1] for v in layer)

    @cached_property
    def distance(self) -> dict[str, int]:
        return {v: r for r, layer in enumerate(self.layers) for v in layer}

    @classmethod
    def from_sizes(cls, sizes: Sequence[int], center: str = "c") -> "SphereDecomposition":
        """Synthetic decomposition with prescribed sphere sizes (for bound arithmetic)."""
        layers = []
        for r, s in enumerate(sizes):
            if s < 1:
                raise ValueError("every sphere up to the eccentricity must be nonempty")
            layers.append((center,) if r == 0 else tuple(f"{r}:{j}" for j in range(s)))
        return cls(center, tuple(layers))


def bfs_decompose(g: RootedGraph, center: str) -> SphereDecomposition:
    """Spheres around ``center``; covers only the center's component."""
    dist = g.distances_from(center)
    ecc = max(dist.values())
    layers: list[list[str]] = [[] for _ in range(ecc + 1)]
    for i, r in dist.items():
        layers[r].append(g.vertices[i])
    return SphereDecomposition(center, tuple(tuple(sorted(layer)) for layer in layers))


@dataclass(frozen=True)
class SphereComponents:
    """Partition of S(n) by the components of G minus B(n-1) that contain it."""

    radius: int
    groups: tuple[tuple[str, ...], ...]


def _outer_components(g: RootedGraph, dec: SphereDecomposition, n: int) -> dict[str, int]:
    """Component label of every vertex at distance >= n in G minus B(n-1)."""
    dist = dec.distance
    label: dict[str, int] = {}
    nxt = 0
    for start in dec.layers[n]:
        if start in label:
            continue
        label[start] = nxt
        queue = deque([g.index(start)])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                w = g.vertices[y]
                if w not in label and dist.get(w, -1) >= n:
                    label[w] = nxt
                    queue.append(y)
        nxt += 1
    return label


def sphere_components(g: RootedGraph, center: str, n: int, dec: Optional[SphereDecomposition] = None) -> SphereComponents:
    if dec is None:
        dec = bfs_decompose(g, center)
    if n < 1 or n > dec.eccentricity:
        raise ValueError(f"radius {n} outside [1, {dec.eccentricity}]")
    label = _outer_components(g, dec, n)
    groups: dict[int, list[str]] = {}
    for v in dec.layers[n]:
        groups.setdefault(label[v], []).append(v)
    ordered = sorted(tuple(sorted(gr)) for gr in groups.values())
    return SphereComponents(n, tuple(ordered))


@dataclass
class ComponentNode:
    radius: int
    group: tuple[str, ...]
    parent: Optional[int]
    children: list[int] = field(default_factory=list)


@dataclass
class ComponentTree:
    """Containment tree of sphere components; node 0 is the center."""

    nodes: list[ComponentNode]

    def children_of(self, i: int) -> list[ComponentNode]:
        return [self.nodes[j] for j in self.nodes[i].children]

    def is_tree(self) -> bool:
        seen = set()
        stack = [0]
        while stack:
            i = stack.pop()
            if i in seen:
                return False
            seen.add(i)
            stack.extend(self.nodes[i].children)
        return len(seen) == len(self.nodes)


def component_tree(g: RootedGraph, center: str, radii: Sequence[int]) -> ComponentTree:
    dec = bfs_decompose(g, center)
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError(f"radii must be strictly increasing, got {list(radii)}")
    nodes = [ComponentNode(0, (center,), None)]
    prev_label: Optional[dict[str, int]] = None
    prev_node_of_label: dict[int, int] = {}
    for r in radii:
        comps = sphere_components(g, center, r, dec)
        label = _outer_components(g, dec, r)
        node_of_label: dict[int, int] = {}
        for grp in comps.groups:
            if prev_label is None:
                parent = 0
            else:
                # every vertex of the group lies in a single earlier component
                parent = prev_node_of_label[prev_label[grp[0]]]
            nodes.append(ComponentNode(r, grp, parent))
            idx = len(nodes) - 1
            nodes[parent].children.append(idx)
            node_of_label[label[grp[0]]] = idx
        prev_label, prev_node_of_label = label, node_of_label
    return ComponentTree(nodes)


def sphere_bound_holds(size: int, n: int, eps: float) -> bool:
    """``size <= n / ((1 + eps) log2 n)`` in double precision; ties qualify."""
    return size <= n / ((1.0 + eps) * math.log2(n))


def ball_bound_holds(size: int, n: int, eps: float) -> bool:
    """``size <= n**2 / ((2 + eps) log2 n)`` in double precision; ties qualify."""
    return size <= (n * n) / ((2.0 + eps) * math.log2(n))


def _bound_radii(dec: SphereDecomposition, eps: float, limit: int, size_of, pred) -> list[int]:
    if eps <= 0:
        raise ValueError("eps must be positive")
    if limit > dec.eccentricity:
        raise ValueError(f"limit {limit} exceeds eccentricity {dec.eccentricity}")
    return [n for n in range(2, limit + 1) if pred(size_of(n), n, eps)]


def sphere_bound_radii(dec: SphereDecomposition, eps: float, limit: int) -> list[int]:
    """Radii in [2, limit] whose sphere is at most n / ((1+eps) log2 n)."""
    return _bound_radii(dec, eps, limit, dec.sphere_size, sphere_bound_holds)


def ball_bound_radii(dec: SphereDecomposition, eps: float, limit: int) -> list[int]:
    """Radii in [2, limit] whose ball is at most n^2 / ((2+eps) log2 n)."""
    return _bound_radii(dec, eps, limit, dec.ball_size, ball_bound_holds)
