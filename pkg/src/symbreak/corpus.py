"""A fixed set of small named graphs used by tests and acceptance runs."""

from __future__ import annotations

import itertools
from typing import Callable

from .graph import RootedGraph


def _names(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


def from_pairs(n: int, pairs, root: int | None = None) -> RootedGraph:
    names = _names(n)
    return RootedGraph.from_edges(names, [(names[a], names[b]) for a, b in pairs],
                                  None if root is None else names[root])


def path(n: int) -> RootedGraph:
    return from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> RootedGraph:
    return from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> RootedGraph:
    return from_pairs(n, itertools.combinations(range(n), 2))


def star(leaves: int) -> RootedGraph:
    return from_pairs(leaves + 1, [(0, i) for i in range(1, leaves + 1)], root=0)


def complete_bipartite(a: int, b: int) -> RootedGraph:
    return from_pairs(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel(n: int) -> RootedGraph:
    """Hub v0 joined to a cycle on n rim vertices."""
    return from_pairs(n + 1, [(0, i) for i in range(1, n + 1)] + [(i, i % n + 1) for i in range(1, n + 1)])


def petersen() -> RootedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_pairs(10, outer + spokes + inner)


def cube() -> RootedGraph:
    return from_pairs(8, [(a, b) for a in range(8) for b in range(a + 1, 8) if bin(a ^ b).count("1") == 1])


def prism(n: int) -> RootedGraph:
    return from_pairs(2 * n, [(i, (i + 1) % n) for i in range(n)]
                      + [(n + i, n + (i + 1) % n) for i in range(n)] + [(i, n + i) for i in range(n)])


def frucht() -> RootedGraph:
    """Cubic graph on 12 vertices with trivial automorphism group."""
    pairs = [(0, 1), (0, 2), (0, 11), (1, 3), (1, 6), (2, 5), (2, 10), (3, 4), (3, 6), (4, 8),
             (4, 11), (5, 9), (5, 10), (6, 7), (7, 8), (7, 9), (8, 9), (10, 11)]
    return from_pairs(12, pairs)


def asymmetric_tree() -> RootedGraph:
    """Smallest tree with trivial automorphism group (7 vertices)."""
    return from_pairs(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)])


def _small() -> dict[str, Callable[[], RootedGraph]]:
    g = {
        "K1": lambda: complete(1),
        "K2": lambda: complete(2),
        "P3": lambda: path(3),
        "K3": lambda: complete(3),
        "P4": lambda: path(4),
        "K1,3": lambda: star(3),
        "C4": lambda: cycle(4),
        "paw": lambda: from_pairs(4, [(0, 1), (1, 2), (2, 0), (2, 3)]),
        "diamond": lambda: from_pairs(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        "K4": lambda: complete(4),
        "P5": lambda: path(5),
        "C5": lambda: cycle(5),
        "K1,4": lambda: star(4),
        "bull": lambda: from_pairs(5, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 4)]),
        "house": lambda: from_pairs(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)]),
        "chair": lambda: from_pairs(5, [(0, 1), (1, 2), (2, 3), (1, 4)]),
        "K2,3": lambda: complete_bipartite(2, 3),
        "W4": lambda: wheel(4),
        "K5": lambda: complete(5),
        "P6": lambda: path(6),
        "C6": lambda: cycle(6),
        "K1,5": lambda: star(5),
        "K3,3": lambda: complete_bipartite(3, 3),
        "prism3": lambda: prism(3),
        "W5": lambda: wheel(5),
        "octahedron": lambda: from_pairs(6, [(a, b) for a, b in itertools.combinations(range(6), 2) if b - a != 3]),
        "K6": lambda: complete(6),
        "spider": lambda: from_pairs(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]),
        "tadpole": lambda: from_pairs(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]),
        "lollipop": lambda: from_pairs(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]),
    }
    return g


def _large() -> dict[str, Callable[[], RootedGraph]]:
    return {
        "asym7": asymmetric_tree,
        "C7": lambda: cycle(7),
        "C8": lambda: cycle(8),
        "cube": cube,
        "petersen": petersen,
        "prism5": lambda: prism(5),
        "K3,4": lambda: complete_bipartite(3, 4),
        "frucht": frucht,
        "P10": lambda: path(10),
        "C12": lambda: cycle(12),
    }


def small_corpus() -> dict[str, RootedGraph]:
    """The 30 connected graphs on at most 6 vertices used for exhaustive checks."""
    return {name: make() for name, make in _small().items()}


def corpus(max_vertices: int | None = None) -> dict[str, RootedGraph]:
    out = small_corpus()
    out.update({name: make() for name, make in _large().items()})
    if max_vertices is not None:
        out = {k: v for k, v in out.items() if v.n <= max_vertices}
    return out
