"""Constructive 2-coloring procedures that break automorphisms.

Labels: 0 is white, 1 is black. A :class:`Coloring` may be partial; a
vertex in ``frozen`` keeps its label through every later stage.

An automorphism ``phi`` is *broken* by a (partial) coloring when some
colored vertex ``u`` has a colored image ``phi(u)`` with a different label.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from . import autgroup
from .autgroup import GroupSummary, Permutation, is_automorphism
from .graph import RootedGraph, bfs_decompose, sphere_bound_holds

WHITE, BLACK = 0, 1

SURROGATE = (
    "surrogate group: the root stabilizer of the infinite graph is replaced by "
    "the root stabilizer of the finite truncation"
)
STRUCTURAL = (
    "a neighbor v of the root adjacent to every other vertex of B(1) and to nothing "
    "in S(2) is ruled out because swapping v with the root would have finite support"
)


@dataclass
class Coloring:
    labels: dict[str, int] = field(default_factory=dict)
    frozen: set[str] = field(default_factory=set)

    def __post_init__(self):
        stray = self.frozen - self.labels.keys()
        if stray:
            raise ValueError(f"frozen vertices without a label: {sorted(stray)[:3]}")

    def copy(self) -> "Coloring":
        return Coloring(dict(self.labels), set(self.frozen))

    def assign(self, v: str, label: int, freeze: bool = False) -> None:
        if v in self.frozen and self.labels[v] != label:
            raise ValueError(f"vertex {v!r} is frozen")
        self.labels[v] = label
        if freeze:
            self.frozen.add(v)

    def is_total(self, g: RootedGraph) -> bool:
        return all(v in self.labels for v in g.vertices)

    def completed(self, g: RootedGraph, label: int = WHITE) -> "Coloring":
        out = self.copy()
        for v in g.vertices:
            out.labels.setdefault(v, label)
        return out

    def array(self, g: RootedGraph, frozen_only: bool = False) -> np.ndarray:
        """Label per vertex index, -1 where uncolored."""
        col = np.full(g.n, -1, dtype=np.int64)
        for v, c in self.labels.items():
            if not frozen_only or v in self.frozen:
                col[g.index(v)] = c
        return col

    def to_json(self) -> dict:
        return {"labels": dict(sorted(self.labels.items())), "frozen": sorted(self.frozen)}

    @classmethod
    def from_json(cls, data: Mapping) -> "Coloring":
        return cls({str(k): int(v) for k, v in data["labels"].items()}, set(data.get("frozen", [])))


@dataclass
class BreakReport:
    stages: list[dict] = field(default_factory=list)
    outcome: str = "partial"
    assumptions: list[str] = field(default_factory=list)
    diagnostics: dict = field(default_factory=dict)

    def log(self, where, broken: int, survivors: int, **extra) -> None:
        if self.stages and self.stages[-1]["survivors"] is not None and survivors is not None:
            if survivors > self.stages[-1]["survivors"]:
                raise AssertionError("survivor count increased")
        self.stages.append({"where": where, "broken": broken, "survivors": survivors, **extra})

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "stages": self.stages,
            "assumptions": list(self.assumptions),
            "diagnostics": self.diagnostics,
        }


# -- breaking bookkeeping ----------------------------------------------------

def _rows(perms, n: int) -> np.ndarray:
    if isinstance(perms, np.ndarray):
        return perms
    rows = [p.images if isinstance(p, Permutation) else tuple(p) for p in perms]
    return np.asarray(rows, dtype=np.int64).reshape(len(rows), n)


def broken_mask(rows: np.ndarray, col: np.ndarray) -> np.ndarray:
    """Which permutation rows are broken by the partial labeling ``col``."""
    if len(rows) == 0:
        return np.zeros(0, dtype=bool)
    img = col[rows]
    src = col[None, :]
    return ((src >= 0) & (img >= 0) & (src != img)).any(axis=1)


def _nontrivial(rows: np.ndarray, where: Optional[np.ndarray] = None) -> np.ndarray:
    ident = np.arange(rows.shape[1])
    moved = rows != ident[None, :]
    if where is not None:
        moved = moved[:, where]
    return moved.any(axis=1)


# -- greedy half breaking ----------------------------------------------------

def greedy_half_break(
    g: RootedGraph,
    targets: Sequence[Permutation],
    free: Iterable[str],
    coloring: Optional[Coloring] = None,
) -> tuple[Coloring, BreakReport]:
    """Color the free vertices one at a time so that at least half the targets break.

    Free vertices are processed in lexicographic order. When a free vertex
    ``v`` is colored, every still-unbroken target that pairs ``v`` with an
    already colored vertex (``phi(v)`` or ``phi^-1(v)``) becomes decided:
    one of the two colors breaks it. The color that breaks more of the newly
    decided targets wins (ties keep the current label, else white), so at
    least half of every batch, and hence of all eligible targets, is broken.
    Targets already broken by the input coloring count as eligible; targets
    that never become decided are reported as ineligible.
    """
    rows = _rows(targets, g.n)
    for idx, row in enumerate(rows):
        if not is_automorphism(g, row):
            raise ValueError(f"target {idx} is not an automorphism of the graph")
        if (row == np.arange(g.n)).all():
            raise ValueError(f"target {idx} is the identity")
    out = coloring.copy() if coloring is not None else Coloring()
    free = sorted(set(free))
    bad = [v for v in free if v in out.frozen]
    if bad:
        raise ValueError(f"free vertices are frozen: {bad[:3]}")
    col = out.array(g)
    for v in free:
        col[g.index(v)] = -1
    t = len(rows)
    inv = np.empty_like(rows)
    if t:
        inv[np.arange(t)[:, None], rows] = np.arange(g.n)[None, :]
    broken = broken_mask(rows, col)
    pre_broken = int(broken.sum())
    decided = broken.copy()
    report = BreakReport()
    for v in free:
        i = g.index(v)
        fwd = col[rows[:, i]] if t else np.zeros(0, dtype=np.int64)
        bwd = col[inv[:, i]] if t else np.zeros(0, dtype=np.int64)
        fwd = np.where(rows[:, i] == i, -1, fwd) if t else fwd
        bwd = np.where(inv[:, i] == i, -1, bwd) if t else bwd
        live = ~broken & ((fwd >= 0) | (bwd >= 0))
        # a target is broken by color c when one colored partner differs from c
        by_white = live & ((fwd == BLACK) | (bwd == BLACK))
        by_black = live & ((fwd == WHITE) | (bwd == WHITE))
        nw, nb = int(by_white.sum()), int(by_black.sum())
        current = coloring.labels.get(v, WHITE) if coloring is not None else WHITE
        if nw > nb or (nw == nb and current == WHITE):
            c, hit = WHITE, by_white
        else:
            c, hit = BLACK, by_black
        col[i] = c
        out.labels[v] = c
        decided |= live
        broken |= hit
        report.log(v, int(hit.sum()), int(t - broken.sum()), decided=int(live.sum()))
    eligible = int(decided.sum())
    n_broken = int(broken.sum())
    report.diagnostics = {
        "targets": t,
        "eligible": eligible,
        "ineligible": t - eligible,
        "pre_broken": pre_broken,
        "broken": n_broken,
        "guarantee": math.ceil(eligible / 2),
    }
    if n_broken < math.ceil(eligible / 2):
        raise AssertionError("greedy guarantee violated")
    report.outcome = "distinguishing" if n_broken == t else "partial"
    return out, report


# -- root fixing --------------------------------------------------------------

def black_spheres(k: int, radius: int) -> list[int]:
    """Sphere radii colored black by the root-fixing pattern (k >= 2)."""
    black = {0, 1, k + 2}
    lam = 1
    while lam * k + 4 <= radius:
        black.add(lam * k + 4)
        lam += 1
    return sorted(r for r in black if r <= radius)


def frozen_spheres(k: int, radius: int) -> set[int]:
    """Radii whose every vertex the root-fixing pattern colors."""
    if k == 1:
        return set(range(radius + 1))
    return set(range(min(k + 3, radius) + 1)) | set(black_spheres(k, radius))


def _require_root(g: RootedGraph) -> str:
    if g.root is None:
        raise ValueError("graph has no root")
    return g.root


def fixroot_pattern(g: RootedGraph, k: int) -> Coloring:
    """Partial coloring that fixes the root under every completion.

    For ``k = 1`` the root is black and everything else white. For
    ``k >= 2`` spheres 0, 1, k+2 and every ``lam*k + 4`` (lam >= 1) are
    black, the rest of B(k+3) is white, and the remaining vertices are left
    uncolored. Every colored vertex is frozen.
    """
    root = _require_root(g)
    g.require_connected()
    if k < 1:
        raise ValueError("k must be >= 1")
    dec = bfs_decompose(g, root)
    R = dec.eccentricity
    out = Coloring()
    if k == 1:
        for v in g.vertices:
            out.assign(v, BLACK if v == root else WHITE, freeze=True)
        return out
    if R < k + 3:
        raise ValueError(f"truncation radius {R} is below k+3 = {k + 3}")
    black = set(black_spheres(k, R))
    for r, layer in enumerate(dec.layers):
        if r in black:
            lab = BLACK
        elif r <= k + 3:
            lab = WHITE
        else:
            continue
        for v in layer:
            out.assign(v, lab, freeze=True)
    return out


def _pattern_present(g: RootedGraph, coloring: Coloring, k: int) -> bool:
    try:
        want = fixroot_pattern(g, k)
    except ValueError:
        return False
    return all(coloring.labels.get(v) == c and v in coloring.frozen for v, c in want.labels.items())


@dataclass
class RootVerdict:
    unique: bool
    candidates: list[str]
    reasons: dict[str, str]
    assumptions: list[str]

    def to_json(self) -> dict:
        return {"root_unique": self.unique, "candidates": self.candidates, "assumptions": self.assumptions}


def verify_root_signature(g: RootedGraph, coloring: Coloring, k: int) -> RootVerdict:
    """Check that no vertex other than the root can show the root's signature.

    The signature is: black, only black neighbors, only white vertices at
    distances 2..k+1. A vertex is ruled out only by frozen labels, so the
    verdict holds for every completion of the coloring.
    """
    root = _require_root(g)
    if not _pattern_present(g, coloring, k):
        raise ValueError("coloring does not contain the root-fixing pattern")
    col = coloring.array(g, frozen_only=True)
    dec = bfs_decompose(g, root)
    s2 = set(dec.layers[2]) if dec.eccentricity >= 2 else set()
    b1 = set(dec.ball(1))
    reasons: dict[str, str] = {}
    candidates = []
    assumptions = []
    for v in g.vertices:
        if v == root:
            continue
        i = g.index(v)
        if col[i] == WHITE:
            reasons[v] = "white"
            continue
        if any(col[j] == WHITE for j in g.adjacency[i]):
            reasons[v] = "white neighbor"
            continue
        dist = g.distances_from(v, limit=k + 1)
        if any(2 <= d <= k + 1 and col[j] == BLACK for j, d in dist.items()):
            reasons[v] = "black vertex at distance 2..k+1"
            continue
        nb = set(g.neighbors(v))
        if dec.distance.get(v) == 1 and nb >= b1 - {v} and not (nb & s2):
            reasons[v] = "structural"
            if STRUCTURAL not in assumptions:
                assumptions.append(STRUCTURAL)
            continue
        candidates.append(v)
    return RootVerdict(not candidates, candidates, reasons, assumptions)


def unbroken_root_movers(g: RootedGraph, coloring: Coloring, cap: int = autgroup.DEFAULT_CAP) -> Optional[list[Permutation]]:
    """Automorphisms moving the root that the frozen labels leave unbroken."""
    root = _require_root(g)
    movers = autgroup.root_movers(g, root, cap)
    if movers is None:
        return None
    rows = _rows(movers, g.n)
    col = coloring.array(g, frozen_only=True)
    mask = ~broken_mask(rows, col)
    return [Permutation(r, g.vertices) for r in rows[mask]]


# -- sphere by sphere breaking -------------------------------------------------

def _check_k(k: int, eps: float) -> None:
    if eps <= 0:
        raise ValueError("eps must be positive")
    if not (k - 1) / k > 1 / (1 + eps):
        raise ValueError(f"k = {k} is too small for eps = {eps:g}: need (k-1)/k > 1/(1+eps)")


def min_admissible_k(eps: float) -> int:
    k = 1
    while not (k - 1) / k > 1 / (1 + eps):
        k += 1
    return k


def first_spacious_radius(m: int, k: int, eps: float) -> int:
    """Least n with (n - m)(k-1)/k >= n/(1+eps) + 1; it then holds for all larger n."""
    _check_k(k, eps)
    n = m + 1
    while (n - m) * (k - 1) / k < n / (1 + eps) + 1:
        n += 1
    return n


def _restriction_rows(g: RootedGraph, dec, n: int, cap: int) -> np.ndarray:
    """One full automorphism per distinct restriction of the root stabilizer to B(n)."""
    sols = autgroup.ball_restrictions(g, dec.center, dec.ball(n), cap)
    if sols is None:
        raise OverflowError(f"more than {cap} restrictions to B({n})")
    return np.asarray(sols, dtype=np.int64).reshape(len(sols), g.n)


def _mask(g: RootedGraph, verts) -> np.ndarray:
    out = np.zeros(g.n, dtype=bool)
    out[[g.index(v) for v in verts]] = True
    return out


def break_ball_actors(
    g: RootedGraph,
    k: int,
    m: int,
    eps: float,
    coloring: Coloring,
    cap: int = autgroup.DEFAULT_CAP,
) -> tuple[Coloring, BreakReport]:
    """Break every root-fixing automorphism that moves something in B(m).

    The target radius n is the smallest radius that is at least the
    spacing threshold and satisfies the small-sphere bound; if none exists
    within the truncation the procedure runs in degraded mode with n = R.
    The group acting is the set of distinct restrictions of the root
    stabilizer to B(n). Survivors are halved sphere by sphere from S(m+1)
    on, skipping the frozen black spheres.
    """
    _check_k(k, eps)
    root = _require_root(g)
    g.require_connected()
    dec = bfs_decompose(g, root)
    R = dec.eccentricity
    if not 0 <= m < R:
        raise ValueError(f"m = {m} must lie in [0, {R})")
    report = BreakReport(assumptions=[SURROGATE])
    n0 = first_spacious_radius(m, k, eps)
    qualifying = [n for n in range(max(n0, 2), R + 1) if sphere_bound_holds(dec.sphere_size(n), n, eps)]
    guaranteed = bool(qualifying)
    n = qualifying[0] if guaranteed else R
    report.diagnostics.update({
        "m": m, "k": k, "eps": eps, "spacing_threshold": n0, "target_radius": n,
        "mode": "guaranteed" if guaranteed else "degraded",
        "radius_choice": "smallest qualifying radius" if guaranteed else "truncation radius",
    })
    if not guaranteed:
        report.diagnostics["note"] = (
            f"no radius in [{n0}, {R}] satisfies the small-sphere bound; "
            "halving over all available spheres"
        )

    # elements of A are compared on B(n) only: labels outside the ball are hidden
    rows = _restriction_rows(g, dec, n, cap)
    inball = _mask(g, dec.ball(n))
    acting = rows[_nontrivial(rows, _mask(g, dec.ball(m)))]
    out = coloring.copy()

    def ball_labels() -> np.ndarray:
        col = out.array(g)
        col[~inball] = -1
        return col

    alive = acting[~broken_mask(acting, ball_labels())]
    report.diagnostics.update({"group_size": int(len(rows)), "acting": int(len(acting)), "unbroken_at_start": int(len(alive))})
    bound = math.ceil(math.log2(len(alive))) + 1 if len(alive) else 0
    consumed = 0
    last = m
    skip = frozen_spheres(k, R)
    for r in range(m + 1, n + 1):
        if not len(alive):
            break
        layer = dec.layers[r]
        free = [v for v in layer if v not in out.labels]
        if r in skip or not free:
            continue
        movers = _nontrivial(alive, _mask(g, layer))
        if not movers.any():
            continue
        inner = Coloring({v: c for v, c in out.labels.items() if inball[g.index(v)]},
                         {v for v in out.frozen if inball[g.index(v)]})
        targets = [Permutation(row, g.vertices) for row in alive[movers]]
        inner, _ = greedy_half_break(g, targets, free, inner)
        for v in free:
            out.labels[v] = inner.labels[v]
        before = len(alive)
        alive = alive[~broken_mask(alive, ball_labels())]
        consumed += 1
        last = r
        report.log(r, before - len(alive), int(len(alive)))
    for v in sorted(x for r in range(m + 1, last + 1) for x in dec.layers[r]):
        out.labels.setdefault(v, WHITE)
    report.diagnostics.update({"spheres_consumed": consumed, "round_bound": bound, "survivors": int(len(alive))})
    if consumed > bound:
        raise AssertionError(f"consumed {consumed} spheres, more than the halving bound {bound}")
    if not report.diagnostics["unbroken_at_start"]:
        # nothing to do at this m: move on to the first radius an unbroken element acts on
        rest = rows[_nontrivial(rows, inball)]
        rest = rest[~broken_mask(rest, ball_labels())]
        end = n
        if len(rest):
            ident = np.arange(g.n)
            moved = [min(dec.distance[g.vertices[j]] for j in np.nonzero((row != ident) & inball)[0]) for row in rest]
            end = min(moved)
        report.diagnostics["end_radius"] = max(m + 1, min(end, R))
    else:
        report.diagnostics["end_radius"] = n if guaranteed else max(last, m + 1)
    if not len(alive):
        report.outcome = "distinguishing"
    else:
        report.outcome = "partial" if guaranteed else "failed"
    report.diagnostics["outcome_scope"] = "root-fixing automorphisms acting on B(m)"
    return out, report


def full_pipeline(
    g: RootedGraph,
    k: int,
    eps: float,
    cap: int = autgroup.DEFAULT_CAP,
) -> tuple[Coloring, BreakReport]:
    """Root fixing followed by repeated sphere halving; the result is total."""
    root = _require_root(g)
    g.require_connected()
    dec = bfs_decompose(g, root)
    R = dec.eccentricity
    report = BreakReport(assumptions=[SURROGATE])
    coloring = fixroot_pattern(g, k)
    if k > 1:
        _check_k(k, eps)
    verdict = verify_root_signature(g, coloring, k)
    for a in verdict.assumptions:
        if a not in report.assumptions:
            report.assumptions.append(a)
    stab = autgroup.ball_restrictions(g, root, dec.ball(R), cap)
    rows = None if stab is None else _rows(stab, g.n)
    rows = rows[_nontrivial(rows)] if rows is not None else None

    def unbroken() -> Optional[int]:
        if rows is None:
            return None
        return int((~broken_mask(rows, coloring.array(g))).sum())

    report.log("fixroot", 0, unbroken(), root_unique=verdict.unique)
    iterations = []
    m = k + 3
    while k > 1 and m < R:
        left = unbroken()
        if left == 0:
            break
        before = left
        coloring, sub = break_ball_actors(g, k, m, eps, coloring, cap)
        iterations.append(sub.to_json())
        left = unbroken()
        report.log(f"iteration {len(iterations)}", None if before is None else before - left, left,
                   m=m, n=sub.diagnostics["target_radius"], mode=sub.diagnostics["mode"],
                   spheres=sub.diagnostics["spheres_consumed"])
        nxt = sub.diagnostics["end_radius"]
        m = max(nxt, m + 1)
    coloring = coloring.completed(g, WHITE)
    left = unbroken()
    report.diagnostics.update({
        "k": k, "eps": eps, "radius": R, "iterations": iterations,
        "root_unique": verdict.unique, "root_candidates": verdict.candidates,
        "stabilizer_nontrivial": None if rows is None else int(len(rows)),
        "unbroken_stabilizer_elements": left,
    })
    if left is None:
        report.outcome = "partial"
    elif left == 0 and verdict.unique:
        report.outcome = "distinguishing"
    else:
        report.outcome = "partial"
    return coloring, report


# -- sequential pair breaking --------------------------------------------------

def sequential_pair_break(g: RootedGraph, summary: GroupSummary) -> tuple[Coloring, BreakReport]:
    """Break the nontrivial automorphisms one by one with disjoint vertex pairs.

    For each automorphism still unbroken by the reserved vertices, pick the
    first moved vertex ``v`` such that neither ``v`` nor its image is
    reserved; ``v`` becomes black and its image stays white, and both are
    reserved. Every other vertex ends white.
    """
    if summary.elements is None:
        raise ValueError("pair breaking needs an explicit element list")
    elements = summary.nontrivial()
    label: dict[str, int] = {}
    report = BreakReport()
    left = len(elements)
    for phi in elements:
        if any(u in label and phi(u) in label and label[u] != label[phi(u)] for u in label):
            left -= 1
            report.log(repr(phi), 1, left, pair=None)
            continue
        pick = next((v for v in g.vertices if phi(v) != v and v not in label and phi(v) not in label), None)
        if pick is None:
            report.outcome = "failed"
            report.diagnostics = {"exhausted_at": phi.to_json(), "reserved": len(label)}
            return Coloring({v: label.get(v, WHITE) for v in g.vertices}), report
        label[pick] = BLACK
        label[phi(pick)] = WHITE
        left -= 1
        report.log(repr(phi), 1, left, pair=[pick, phi(pick)])
    report.outcome = "distinguishing"
    report.diagnostics = {"reserved": len(label), "black": sorted(v for v, c in label.items() if c == BLACK)}
    return Coloring({v: label.get(v, WHITE) for v in g.vertices}), report
