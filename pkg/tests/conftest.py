import itertools
import sys
import json
from pathlib import Path

import networkx as nx
import pytest

from symbreak import kernels

GOLDEN = Path(__file__).parent / "golden"


def golden(name):
    return json.loads((GOLDEN / name).read_text())


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def brute_automorphisms(g):
    """Every adjacency-preserving bijection, by trying all of them."""
    edges = {frozenset(e) for e in g.edges}
    out = []
    for perm in itertools.permutations(range(g.n)):
        if all(frozenset((g.vertices[perm[g.index(a)]], g.vertices[perm[g.index(b)]])) in edges for a, b in g.edges):
            out.append(perm)
    return out


def vf2_automorphisms(g):
    h = to_nx(g)
    idx = {v: i for i, v in enumerate(g.vertices)}
    out = []
    for m in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter():
        out.append(tuple(idx[m[v]] for v in g.vertices))
    return sorted(out)


@pytest.fixture(params=kernels.available())
def backend(request, monkeypatch):
    b = kernels.load(request.param)
    monkeypatch.setattr(kernels, "backend", b)
    return b


def random_symmetric_graph(rng, n_max=10, tries=200):
    """A random connected graph on <= n_max vertices with a nontrivial group."""
    from symbreak.autgroup import enumerate_automorphisms
    from symbreak.corpus import from_pairs

    for _ in range(tries):
        n = rng.randint(3, n_max)
        edges = [(rng.randrange(i), i) for i in range(1, n)]
        edges += [(a, b) for a, b in (rng.sample(range(n), 2) for _ in range(rng.randint(0, n))) if a != b]
        g = from_pairs(n, edges)
        s = enumerate_automorphisms(g)
        if s.order > 1:
            return g, s
    raise RuntimeError("no symmetric graph found")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
