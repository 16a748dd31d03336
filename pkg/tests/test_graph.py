import math

import pytest
from hypothesis import given, settings, strategies as st

from symbreak import generators
from symbreak.corpus import complete, from_pairs, path
from symbreak.graph import (
    RootedGraph,
    SphereDecomposition,
    UnknownVertexError,
    ball_bound_radii,
    bfs_decompose,
    component_tree,
    sphere_bound_radii,
    sphere_components,
)


def test_from_edges_validates():
    with pytest.raises(UnknownVertexError, match="'z'"):
        RootedGraph.from_edges(["a"], [("a", "z")])
    with pytest.raises(ValueError, match="self-loop"):
        RootedGraph.from_edges(["a"], [("a", "a")])
    with pytest.raises(UnknownVertexError):
        RootedGraph.from_edges(["a"], [], root="b")
    with pytest.raises(TypeError):
        RootedGraph.from_edges([1, 2], [])


def test_adjacency_symmetric_and_edges_canonical():
    g = RootedGraph.from_edges(["c", "a", "b"], [("c", "a"), ("b", "a")])
    assert g.vertices == ("a", "b", "c")
    assert g.edges == (("a", "b"), ("a", "c"))
    assert g.has_edge("b", "a") and g.has_edge("a", "b")


def test_bfs_path_center():
    g = RootedGraph.from_edges("abc", [("a", "b"), ("b", "c")])
    assert bfs_decompose(g, "b").layers == (("b",), ("a", "c"))


def test_bfs_single_vertex():
    g = RootedGraph.from_edges(["v"], [])
    assert bfs_decompose(g, "v").layers == (("v",),)


def test_bfs_unknown_center():
    with pytest.raises(UnknownVertexError, match="'q'"):
        bfs_decompose(path(3), "q")


def test_bfs_grid_spheres_match_explicit_grid():
    g = generators.truncate(generators.grid_2d(), 3)
    dec = bfs_decompose(g, "0,0")
    # oracle: lattice points by L1 norm
    expect = [sum(1 for x in range(-3, 4) for y in range(-3, 4) if abs(x) + abs(y) == r) for r in range(4)]
    assert [dec.sphere_size(r) for r in range(4)] == expect == [1, 4, 8, 12]


def test_bfs_covers_only_center_component():
    g = RootedGraph.from_edges("abcd", [("a", "b"), ("c", "d")])
    assert bfs_decompose(g, "a").ball(5) == ("a", "b")


def test_sphere_components_tree():
    g = generators.truncate(generators.homogeneous_tree(3), 4)
    assert len(sphere_components(g, "", 2).groups) == 6


def test_sphere_components_path_and_complete():
    g = generators.truncate(generators.two_sided_path(), 5)
    groups = sphere_components(g, "0", 3).groups
    assert sorted(map(len, groups)) == [1, 1]
    k4 = complete(4)
    assert [len(x) for x in sphere_components(k4, "v0", 1).groups] == [3]


def test_sphere_components_range():
    g = path(4)
    with pytest.raises(ValueError):
        sphere_components(g, "v0", 0)
    with pytest.raises(ValueError):
        sphere_components(g, "v0", 4)


def test_sphere_components_joined_beyond_ball():
    # C6 from v0: S(2) = {v2, v4} joined through v3 outside B(1)
    g = from_pairs(6, [(i, (i + 1) % 6) for i in range(6)])
    assert sphere_components(g, "v0", 2).groups == (("v2", "v4"),)


def test_component_tree_shapes():
    g = generators.truncate(generators.homogeneous_tree(3), 6)
    t = component_tree(g, "", [2, 4])
    assert len(t.children_of(0)) == 6
    # each radius-2 subtree of T_3 has 2^2 = 4 descendants at radius 4
    assert all(len(t.nodes[i].children) == 4 for i in t.nodes[0].children)
    t = component_tree(g, "", [2, 3])
    assert all(len(t.nodes[i].children) == 2 for i in t.nodes[0].children)
    assert t.is_tree()


def test_component_tree_path_and_empty():
    g = generators.truncate(generators.two_sided_path(), 5)
    t = component_tree(g, "0", [1, 2, 3])
    assert len(t.children_of(0)) == 2
    for c in t.nodes[0].children:
        chain = [c]
        while t.nodes[chain[-1]].children:
            (nxt,) = t.nodes[chain[-1]].children
            chain.append(nxt)
        assert [t.nodes[i].radius for i in chain] == [1, 2, 3]
    assert len(component_tree(g, "0", []).nodes) == 1


def test_component_tree_rejects_non_increasing():
    g = path(5)
    with pytest.raises(ValueError):
        component_tree(g, "v0", [2, 2])
    with pytest.raises(ValueError):
        component_tree(g, "v0", [3, 1])


def test_sphere_bound_examples():
    sizes = [1] * 1025
    sizes[1024] = 51
    dec = SphereDecomposition.from_sizes(sizes)
    assert 1024 in sphere_bound_radii(dec, 1.0, 1024)
    sizes[1024] = 52
    assert 1024 not in sphere_bound_radii(SphereDecomposition.from_sizes(sizes), 1.0, 1024)


def test_sphere_bound_full_spheres_empty():
    dec = SphereDecomposition.from_sizes([1] + list(range(1, 65)))
    assert sphere_bound_radii(dec, 1.0, 64) == []


def test_sphere_bound_path_tie_qualifies():
    dec = bfs_decompose(generators.truncate(generators.two_sided_path(), 40), "0")
    radii = sphere_bound_radii(dec, 1.0, 40)
    assert 16 in radii
    assert radii == [n for n in range(2, 41) if 2 * 2 * math.log2(n) <= n]


def test_ball_bound_examples():
    sizes = [1] * 65
    dec = SphereDecomposition.from_sizes(sizes[:64] + [113 - 64])
    assert dec.ball_size(64) == 113
    assert 64 in ball_bound_radii(dec, 1.0, 64)
    path_dec = bfs_decompose(generators.truncate(generators.two_sided_path(), 60), "0")
    radii = ball_bound_radii(path_dec, 0.5, 60)
    # oracle: 2n+1 <= n^2 / (2.5 log2 n), and once true it stays true
    assert radii == [n for n in range(2, 61) if 2 * n + 1 <= n * n / (2.5 * math.log2(n))]
    assert radii and radii == list(range(radii[0], 61))
    assert ball_bound_radii(path_dec, 1.0, 1) == []


def test_bound_argument_checks():
    dec = SphereDecomposition.from_sizes([1, 2, 2])
    with pytest.raises(ValueError):
        sphere_bound_radii(dec, 0.0, 2)
    with pytest.raises(ValueError):
        ball_bound_radii(dec, 1.0, 3)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 50), min_size=3, max_size=40), st.floats(0.05, 3), st.floats(0.05, 3))
def test_bound_radii_monotone_in_eps(sizes, e1, e2):
    lo, hi = sorted((e1, e2))
    dec = SphereDecomposition.from_sizes([1] + sizes)
    lim = dec.eccentricity
    assert set(sphere_bound_radii(dec, hi, lim)) <= set(sphere_bound_radii(dec, lo, lim))
    assert set(ball_bound_radii(dec, hi, lim)) <= set(ball_bound_radii(dec, lo, lim))


@st.composite
def connected_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    edges = [(draw(st.integers(0, i - 1)), i) for i in range(1, n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n))
    edges += [(a, b) for a, b in extra if a != b]
    return from_pairs(n, edges)


@settings(max_examples=80, deadline=None)
@given(connected_graphs(), st.data())
def test_layers_partition_and_parent_property(g, data):
    c = data.draw(st.sampled_from(g.vertices))
    dec = bfs_decompose(g, c)
    assert sum(len(l) for l in dec.layers) == g.n
    assert all(dec.layers[r] for r in range(dec.eccentricity + 1))
    for r in range(1, dec.eccentricity + 1):
        for v in dec.layers[r]:
            assert any(dec.distance[w] == r - 1 for w in g.neighbors(v))


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.data())
def test_component_groups_refine(g, data):
    c = data.draw(st.sampled_from(g.vertices))
    dec = bfs_decompose(g, c)
    for n in range(1, dec.eccentricity):
        outer = sphere_components(g, c, n, dec).groups
        inner = sphere_components(g, c, n + 1, dec).groups
        assert sorted(v for grp in outer for v in grp) == sorted(dec.layers[n])
        # all vertices of an outer group reachable avoiding B(n); each inner group sits in one outer component
        t = component_tree(g, c, [n, n + 1])
        assert t.is_tree()
        assert len(t.nodes) == 1 + len(outer) + len(inner)
