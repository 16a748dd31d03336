import pytest

from symbreak import autgroup as A
from symbreak import distnum as D
from symbreak import motion as M
from symbreak.corpus import complete, corpus, cycle, path
from tests.conftest import golden


@pytest.mark.parametrize("name,want", sorted(golden("distinguishing_numbers.json").items()))
def test_golden_values(name, want):
    assert D.distinguishing_number(corpus()[name], 5).d == want


def test_rigid_is_one():
    r = D.distinguishing_number(corpus()["frucht"], 3)
    assert r.d == 1


def test_witness_is_distinguishing_and_first():
    g = cycle(6)
    r = D.distinguishing_number(g, 3)
    assert D.is_distinguishing(g, r.witness)
    # the witness is the first distinguishing labeling in mixed-radix order
    import itertools

    for lab in itertools.product((0, 1), repeat=6):
        if lab[0] != 0:
            continue
        labels = dict(zip(g.vertices, lab))
        if D.is_distinguishing(g, labels):
            assert labels == r.witness
            break


def test_reduction_does_not_change_answer():
    for name in ["K4", "C5", "P4", "bull", "cube"]:
        g = corpus()[name]
        assert D.distinguishing_number(g, 5, reduce=True).d == D.distinguishing_number(g, 5, reduce=False).d


def test_guard_exceeded_is_explicit():
    r = D.distinguishing_number(corpus()["C12"], 3, guard=100)
    assert r.exceeded and r.d is None and "guard" in r.reason


def test_max_d_too_small():
    r = D.distinguishing_number(complete(4), 3)
    assert r.d is None and not r.exceeded


def test_is_distinguishing_examples():
    k2 = complete(2)
    assert D.is_distinguishing(k2, {"v0": 0, "v1": 1})
    c6 = cycle(6)
    v = D.is_distinguishing(c6, {x: 0 for x in c6.vertices})
    assert not v and v.witness is not None and not v.witness.is_identity()
    p4 = path(4)
    assert D.is_distinguishing(p4, {"v0": 1, "v1": 0, "v2": 0, "v3": 0})
    with pytest.raises(ValueError):
        D.is_distinguishing(p4, {"v0": 1})


def test_padding_monotone():
    for name in ["C5", "P4", "C6"]:
        g = corpus()[name]
        r = D.distinguishing_number(g, 4)
        padded = dict(r.witness)
        assert D.is_distinguishing(g, padded)
        assert D.distinguishing_number(g, r.d + 1).d == r.d


def test_motion_bound_implies_two():
    for g in corpus(max_vertices=10).values():
        s = A.enumerate_automorphisms(g)
        if M.check_motion_bound(s, 2).motion_holds:
            assert D.distinguishing_number(g, 2).d <= 2
