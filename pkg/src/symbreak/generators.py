"""Infinite graph families as neighbor oracles, and their ball truncations.

Vertex naming:

* two-sided path: integers, ``"-2"``, ``"0"``, ``"3"``;
* square grid: ``"x,y"``;
* homogeneous tree: the root-path of child indices joined by ``"."``, the
  root being the empty string;
* stretched tree: tree vertices named as in the homogeneous tree of degree
  3; the interior vertices of the path that replaces the edge into tree
  vertex ``c`` are ``"c/1"``, ..., ``"c/(L-1)"`` counted from the parent end.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .graph import RootedGraph, bfs_decompose

# consecutive radii past the first solution that must also satisfy the bound
SCAN_GUARD = 64
# relative distance from equality below which a power comparison is refused
AMBIGUITY = 1e-9


@dataclass(frozen=True)
class GraphFamily:
    name: str
    params: dict
    root: str
    neighbors: Callable[[str], tuple[str, ...]] = field(repr=False, compare=False)

    def describe(self) -> str:
        if self.name == "path":
            return "path"
        if self.name == "grid":
            return "grid"
        if self.name == "tree":
            return f"tree:{self.params['degree']}"
        return f"stretched:{self.params['eps']:g}"


# -- subdivision lengths ----------------------------------------------------

def _overflow(i: int, n: int, eps: float) -> OverflowError:
    return OverflowError(f"double precision overflows at level {i} (n={n}, eps={eps})")


def _holds(i: int, n: int, eps: float) -> bool:
    try:
        lhs = float(3 * 2**i * n + 1)
        rhs = float(n) ** (1.0 + eps)
    except OverflowError:
        raise _overflow(i, n, eps) from None
    if lhs == float("inf") or rhs == float("inf"):
        raise _overflow(i, n, eps)
    if rhs != 0 and abs(lhs - rhs) / rhs < AMBIGUITY:
        raise ValueError(
            f"level {i}: 3*2^{i}*{n}+1 and {n}^(1+{eps}) agree to within {AMBIGUITY:g}; "
            "refusing an ambiguous comparison"
        )
    return lhs <= rhs


def subdivision_length(i: int, eps: float) -> int:
    """Least N such that ``3 * 2**i * n + 1 <= n**(1+eps)`` for every n >= N."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    # the difference n^(1+eps) - (3*2^i*n + 1) changes sign once,
    # so doubling followed by bisection finds the first radius that holds
    hi = 1
    while not _holds(i, hi, eps):
        hi *= 2
    lo = hi // 2  # fails, or is 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _holds(i, mid, eps):
            hi = mid
        else:
            lo = mid
    for n in range(hi, hi + SCAN_GUARD + 1):
        if not _holds(i, n, eps):
            raise ArithmeticError(f"level {i}: bound holds at {hi} but fails again at {n}")
    if hi > 1 and _holds(i, hi - 1, eps):
        raise ArithmeticError(f"level {i}: {hi} is not minimal")
    return hi


@dataclass(frozen=True)
class StretchedTreePlan:
    eps: float
    subdivision_lengths: dict[int, int]
    base_degree: int = 3

    def to_json(self) -> dict:
        return {
            "eps": self.eps,
            "base_degree": self.base_degree,
            "subdivision_lengths": {str(i): n for i, n in sorted(self.subdivision_lengths.items())},
        }


def plan_stretched_tree(eps: float, depth: int) -> StretchedTreePlan:
    """Subdivision lengths ``n_0 .. n_{depth-1}``."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    return StretchedTreePlan(eps, {i: subdivision_length(i, eps) for i in range(depth)})


# -- families ---------------------------------------------------------------

def two_sided_path() -> GraphFamily:
    def nb(v: str) -> tuple[str, ...]:
        x = int(v)
        return (str(x - 1), str(x + 1))

    return GraphFamily("path", {}, "0", nb)


def grid_2d() -> GraphFamily:
    def nb(v: str) -> tuple[str, ...]:
        x, y = map(int, v.split(","))
        return (f"{x - 1},{y}", f"{x + 1},{y}", f"{x},{y - 1}", f"{x},{y + 1}")

    return GraphFamily("grid", {}, "0,0", nb)


def _child(v: str, j: int) -> str:
    return f"{v}.{j}" if v else str(j)


def _parent(v: str) -> str:
    return v.rpartition(".")[0]


def _level(v: str) -> int:
    return 0 if v == "" else v.count(".") + 1


def homogeneous_tree(degree: int) -> GraphFamily:
    if degree < 2:
        raise ValueError("tree degree must be >= 2")

    def nb(v: str) -> tuple[str, ...]:
        kids = degree if v == "" else degree - 1
        out = [] if v == "" else [_parent(v)]
        out.extend(_child(v, j) for j in range(kids))
        return tuple(out)

    return GraphFamily("tree", {"degree": degree}, "", nb)


def stretched_tree(eps: float) -> GraphFamily:
    """Degree-3 tree whose level-i to level-(i+1) edges become paths of length n_{i+1}."""
    if eps <= 0:
        raise ValueError("eps must be positive")

    @lru_cache(maxsize=None)
    def length(i: int) -> int:
        return subdivision_length(i, eps)

    def into(c: str) -> int:
        # length of the path ending at tree vertex c (level >= 1)
        return length(_level(c))

    def tree_nb(v: str) -> list[str]:
        out = []
        if v != "":
            L = into(v)
            out.append(_parent(v) if L == 1 else f"{v}/{L - 1}")
        kids = 3 if v == "" else 2
        for j in range(kids):
            c = _child(v, j)
            out.append(c if into(c) == 1 else f"{c}/1")
        return out

    def nb(v: str) -> tuple[str, ...]:
        if "/" not in v:
            return tuple(tree_nb(v))
        c, _, js = v.partition("/")
        j = int(js)
        L = into(c)
        down = _parent(c) if j == 1 else f"{c}/{j - 1}"
        up = c if j == L - 1 else f"{c}/{j + 1}"
        return (down, up)

    return GraphFamily("stretched", {"eps": eps, "lengths": length}, "", nb)


def parse_family(text: str) -> GraphFamily:
    """``path``, ``grid``, ``tree:D`` or ``stretched:EPS``."""
    head, _, arg = text.partition(":")
    if head == "path" and not arg:
        return two_sided_path()
    if head == "grid" and not arg:
        return grid_2d()
    if head == "tree" and arg:
        return homogeneous_tree(int(arg))
    if head == "stretched" and arg:
        return stretched_tree(float(arg))
    raise ValueError(f"unknown family {text!r}")


def plan_for(family: GraphFamily, radius: int) -> StretchedTreePlan | None:
    """The subdivision table actually used inside a ball of the given radius."""
    if family.name != "stretched":
        return None
    eps = family.params["eps"]
    length = family.params["lengths"]
    table = {0: length(0)}
    reach, i = 0, 1
    while reach <= radius:
        table[i] = length(i)
        reach += table[i]
        i += 1
    return StretchedTreePlan(eps, table)


def truncate(family: GraphFamily, radius: int) -> RootedGraph:
    """The induced ball of the given radius around the family's root."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    dist = {family.root: 0}
    queue = deque([family.root])
    while queue:
        v = queue.popleft()
        if dist[v] == radius:
            continue
        for w in family.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    edges = []
    for v in dist:
        for w in family.neighbors(v):
            if w in dist and v < w:
                edges.append((v, w))
    return RootedGraph.from_edges(dist.keys(), edges, family.root)


def growth_profile(family: GraphFamily, limit: int) -> list[tuple[int, int, int]]:
    """``(r, |B(r)|, |S(r)|)`` for r = 0..limit."""
    if limit < 0:
        raise ValueError("limit must be >= 0")
    dec = bfs_decompose(truncate(family, limit), family.root)
    out = []
    ball = 0
    for r in range(limit + 1):
        s = dec.sphere_size(r)
        ball += s
        out.append((r, ball, s))
    return out
