import itertools
import math
from fractions import Fraction

import pytest

from symbreak import autgroup as A
from symbreak import motion as M
from symbreak.corpus import complete, corpus, cycle, path
from symbreak.distnum import is_distinguishing


def test_bound_p4():
    v = M.check_motion_bound(A.enumerate_automorphisms(path(4)), 2)
    assert v.cycle_norm_holds and v.cycle_norm_margin == 1.0
    assert v.motion_holds and v.motion_margin == 2.0


def test_bound_c6_motion_fails():
    s = A.enumerate_automorphisms(cycle(6))
    assert (s.order, s.motion) == (12, 4)
    v = M.check_motion_bound(s, 2)
    assert not v.motion_holds
    assert v.motion_margin == pytest.approx(4 - 2 * math.log2(12))


def test_bound_rigid_vacuous():
    v = M.check_motion_bound(A.enumerate_automorphisms(corpus()["frucht"]), 2)
    assert v.cycle_norm_holds and v.motion_holds and v.motion_margin is None


def test_bound_equality_counts():
    # K2: m = 2 = 2 log2 2 and cn = 1 = log2 2
    v = M.check_motion_bound(A.enumerate_automorphisms(complete(2)), 2)
    assert v.motion_margin == 0 and v.motion_holds
    assert v.cycle_norm_margin == 0 and v.cycle_norm_holds


def test_bound_errors():
    with pytest.raises(ValueError):
        M.check_motion_bound(A.enumerate_automorphisms(complete(6), cap=5), 2)
    with pytest.raises(ValueError):
        M.check_motion_bound(A.enumerate_automorphisms(path(3)), 1)


def test_expected_survivors_examples():
    e = M.expected_survivors(A.enumerate_automorphisms(path(4)), 2)
    assert e.bound == e.exact == Fraction(1, 4)
    e = M.expected_survivors(A.enumerate_automorphisms(complete(3)), 2)
    assert e.exact == Fraction(2) and e.bound == Fraction(5, 2)
    e = M.expected_survivors(A.enumerate_automorphisms(corpus()["frucht"]), 2)
    assert e.bound == e.exact == 0


def test_union_bound_dominates_exact():
    for name, g in corpus().items():
        s = A.enumerate_automorphisms(g)
        for d in (2, 3):
            e = M.expected_survivors(s, d)
            assert e.exact <= e.bound


@pytest.mark.parametrize("name", ["P4", "C5", "K1,3", "bull", "C6"])
def test_preserved_counts(name, backend):
    g = corpus()[name]
    for p in A.enumerate_automorphisms(g).elements:
        for d in (2, 3):
            brute = sum(1 for lab in itertools.product(range(d), repeat=g.n) if all(lab[i] == lab[j] for i, j in enumerate(p.images)))
            assert M.preserved_count(p.images, d) == brute == d ** (g.n - p.cycle_norm)


def test_random_p4():
    g = path(4)
    r = M.find_distinguishing_coloring(g, A.enumerate_automorphisms(g), 2, 100, seed=7)
    assert r.found and is_distinguishing(g, r.coloring)


def test_random_k3():
    g = complete(3)
    s = A.enumerate_automorphisms(g)
    r = M.find_distinguishing_coloring(g, s, 2, 200, seed=1)
    assert not r.found and r.trials == 200
    r = M.find_distinguishing_coloring(g, s, 3, 200, seed=1)
    assert r.found and sorted(r.coloring.values()) == [0, 1, 2]


def test_random_deterministic_per_seed():
    g = corpus()["cube"]
    a = M.find_distinguishing_coloring(g, None, 3, 500, seed=11)
    b = M.find_distinguishing_coloring(g, None, 3, 500, seed=11)
    assert a == b and a.found


def test_random_argument_checks():
    with pytest.raises(ValueError):
        M.find_distinguishing_coloring(path(3), None, 1, 10)
    with pytest.raises(ValueError):
        M.find_distinguishing_coloring(path(3), None, 2, 0)


def test_motion_bound_implies_cycle_norm_bound():
    for g in corpus().values():
        v = M.check_motion_bound(A.enumerate_automorphisms(g), 2)
        if v.motion_holds:
            assert v.cycle_norm_holds
