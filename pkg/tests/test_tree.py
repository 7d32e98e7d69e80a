import itertools
import math

import pytest
from hypothesis import given, strategies as st

from weakorder.combinat.perm import (Permutation, enumerate_perms, leq_weak,
                                     over_perm, under_perm, up_covers)
from weakorder.combinat.tree import (
    LEAF, Tree, down_covers_tree, enumerate_trees, fiber, graft, left_comb,
    leq_tree, max_perm, min_perm, over_tree, parse_tree, psi, psi_preimage,
    right_comb, tree_interval, under_tree, up_covers_tree)

Y1 = Tree(LEAF, LEAF)


def trees(max_grade=5):
    return st.integers(min_value=0, max_value=max_grade).flatmap(
        lambda n: st.sampled_from(enumerate_trees(n)))


def test_tree_structure():
    assert LEAF.grade == 0 and LEAF.is_leaf
    assert Y1.grade == 1
    assert graft(Y1, LEAF) == left_comb(2)
    assert graft(LEAF, Y1) == right_comb(2)
    t = graft(left_comb(2), Y1)
    assert t.grade == 4
    assert (t.left, t.right) == (left_comb(2), Y1)
    with pytest.raises(ValueError):
        Tree(LEAF, None)


@pytest.mark.parametrize('text, serialized', [
    ('|', '|'),
    ('(|,|)', '(|,|)'),
    (' ( (| , |) , | ) ', '((|,|),|)'),
])
def test_parse_tree(text, serialized):
    assert parse_tree(text).serialized == serialized


@pytest.mark.parametrize('text', ['', '(|,|', '(|)', '(|,|)|', 'x', '(|;|)'])
def test_parse_tree_rejects(text):
    with pytest.raises(ValueError):
        parse_tree(text)


@pytest.mark.parametrize('n', range(6))
def test_text_round_trip(n):
    for t in enumerate_trees(n):
        assert parse_tree(str(t)) == t


@pytest.mark.parametrize('n', range(11))
def test_catalan_count(n):
    assert len(enumerate_trees(n)) == math.comb(2 * n, n) // (n + 1)


def test_enumerate_trees_is_sorted():
    found = enumerate_trees(4)
    assert [t.serialized for t in found] == sorted(t.serialized for t in found)
    assert len(set(found)) == len(found)


def test_over_under_examples():
    assert over_tree(Y1, Y1) == graft(Y1, LEAF)
    assert under_tree(Y1, Y1) == graft(LEAF, Y1)
    t = right_comb(3)
    assert over_tree(t, LEAF) == t == over_tree(LEAF, t)
    assert under_tree(t, LEAF) == t == under_tree(LEAF, t)


@given(trees(3), trees(3), trees(3))
def test_over_under_associative(u, v, w):
    assert over_tree(over_tree(u, v), w) == over_tree(u, over_tree(v, w))
    assert under_tree(under_tree(u, v), w) == under_tree(u, under_tree(v, w))


@given(trees(4), trees(3))
def test_over_below_under(u, v):
    assert leq_tree(over_tree(u, v), under_tree(u, v))


def test_rotation_covers():
    assert up_covers_tree(left_comb(2)) == (right_comb(2),)
    assert down_covers_tree(right_comb(2)) == (left_comb(2),)
    assert up_covers_tree(right_comb(4)) == ()


@pytest.mark.parametrize('n', range(1, 7))
def test_combs_are_extremes(n):
    for t in enumerate_trees(n):
        assert leq_tree(left_comb(n), t)
        assert leq_tree(t, right_comb(n))


def test_rotation_generator():
    u, v, w = Y1, LEAF, left_comb(2)
    assert leq_tree(graft(graft(u, v), w), graft(u, graft(v, w)))
    assert leq_tree(left_comb(2), right_comb(2))
    assert not leq_tree(right_comb(2), left_comb(2))
    with pytest.raises(ValueError):
        leq_tree(Y1, left_comb(2))


@pytest.mark.parametrize('n', range(1, 6))
def test_leq_tree_is_partial_order(n):
    found = enumerate_trees(n)
    for a, b in itertools.product(found, repeat=2):
        if leq_tree(a, b) and leq_tree(b, a):
            assert a == b
        for c in found:
            if leq_tree(a, b) and leq_tree(b, c):
                assert leq_tree(a, c)


def test_tree_interval():
    assert tree_interval(left_comb(3), right_comb(3)) == enumerate_trees(3)
    assert tree_interval(right_comb(3), left_comb(3)) == ()
    assert tree_interval(Y1, Y1) == (Y1,)


def test_psi_examples():
    assert psi(Permutation((1,))) == Y1
    assert psi(Permutation((1, 2))) == left_comb(2)
    assert psi(Permutation((2, 1))) == right_comb(2)
    assert psi(Permutation((3, 4, 1, 6, 2, 5))) == graft(psi(Permutation((2, 3, 1))),
                                                        psi(Permutation((1, 2))))


def test_min_max_perm_examples():
    assert min_perm(left_comb(2)) == Permutation((1, 2)) == max_perm(left_comb(2))
    assert min_perm(right_comb(2)) == Permutation((2, 1))
    assert min_perm(graft(Y1, Y1)) == Permutation((1, 3, 2))
    assert max_perm(graft(Y1, Y1)) == Permutation((2, 3, 1))
    with pytest.raises(ValueError):
        min_perm(LEAF)
    with pytest.raises(ValueError):
        max_perm(LEAF)


@pytest.mark.parametrize('n', range(1, 7))
def test_fibers_are_intervals(n):
    total = 0
    for t in enumerate_trees(n):
        found = fiber(t)
        assert found == psi_preimage(t)
        assert min_perm(t) in found and max_perm(t) in found
        assert all(leq_weak(min_perm(t), s) and leq_weak(s, max_perm(t)) for s in found)
        total += len(found)
    assert total == math.factorial(n)


def test_fiber_of_single_node():
    assert fiber(Y1) == (Permutation((1,)),)


@pytest.mark.parametrize('n', range(1, 6))
def test_psi_is_monotone(n):
    for sigma in enumerate_perms(n):
        for cover in up_covers(sigma):
            assert leq_tree(psi(sigma), psi(cover))


@pytest.mark.parametrize('p, q', [(p, q) for p in range(5) for q in range(5) if p + q <= 5])
def test_psi_preserves_over_under(p, q):
    for sigma in enumerate_perms(p):
        for tau in enumerate_perms(q):
            assert psi(over_perm(sigma, tau)) == over_tree(psi(sigma), psi(tau))
            assert psi(under_perm(sigma, tau)) == under_tree(psi(sigma), psi(tau))
