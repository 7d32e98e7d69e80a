import math

import pytest
from hypothesis import given, strategies as st

from weakorder.algebra import (ZERO, FreeElement, bilinear_extend,
                               linear_extend, phi_star, prec_S,
                               prec_S_interval, prec_Y, products, psi_star,
                               star_Q, star_Q_interval, star_S,
                               star_S_interval, star_Y, star_Y_interval,
                               succ_S, succ_S_interval, succ_Y)
from weakorder.algebra.products import phi_star_of, psi_star_of
from weakorder.combinat import perm
from weakorder.combinat.cube import (UNIT, enumerate_sign_vectors, minus,
                                     parse_sign_vector, phi)
from weakorder.combinat.perm import Permutation, enumerate_perms
from weakorder.combinat.tree import (LEAF, Tree, enumerate_trees, left_comb,
                                     over_tree, psi, right_comb,
                                     tree_interval, under_tree)

Y1 = Tree(LEAF, LEAF)


def P(*word):
    return Permutation(word)


def perms(min_size=0, max_size=3):
    return st.integers(min_value=min_size, max_value=max_size).flatmap(
        lambda n: st.sampled_from(enumerate_perms(n)))


def trees(min_grade=0, max_grade=3):
    return st.integers(min_value=min_grade, max_value=max_grade).flatmap(
        lambda n: st.sampled_from(enumerate_trees(n)))


def vectors(min_grade=1, max_grade=4):
    return st.integers(min_value=min_grade, max_value=max_grade).flatmap(
        lambda n: st.sampled_from(enumerate_sign_vectors(n)))


def pairs(family, n, lowest=0):
    return [(a, b) for p in range(lowest, n - lowest + 1)
            for a in family(p) for b in family(n - p)]


# =============================================================================
# FreeElement
# =============================================================================

def test_free_element_arithmetic():
    a = FreeElement({P(1, 2): 2, P(2, 1): 1})
    b = FreeElement({P(2, 1): -1})
    assert a + b == FreeElement.of(P(1, 2)) * 2
    assert a - a == ZERO
    assert -b == FreeElement.of(P(2, 1))
    assert 3 * b == b * 3 == FreeElement({P(2, 1): -3})
    assert len(ZERO) == 0 and a.coefficient_sum() == 3


def test_free_element_drops_zero_terms():
    element = FreeElement([(P(1), 1), (P(1), -1), (P(), 2)])
    assert dict(element) == {P(): 2}
    with pytest.raises(ValueError):
        FreeElement({P(1): 0.5})


def test_free_element_is_hashable_and_ordered():
    a = FreeElement({P(2, 1): 1, P(1): 1, P(1, 2): 1})
    assert list(a) == [P(1), P(1, 2), P(2, 1)]
    assert hash(a) == hash(FreeElement({P(1, 2): 1, P(1): 1, P(2, 1): 1}))
    assert a.render() == '1\t1\n1\t1 2\n1\t2 1'


def test_extensions():
    a = FreeElement({P(1): 2})
    b = FreeElement({P(1): 1, P(1, 2): -1})
    product = bilinear_extend(star_S, a, b)
    assert product == 2 * star_S(P(1), P(1)) - 2 * star_S(P(1), P(1, 2))
    assert bilinear_extend(star_S, FreeElement.of(P(1)), FreeElement.of(P(1))) == star_S(P(1), P(1))
    assert linear_extend(lambda s: s, b) == b


# =============================================================================
# Permutations
# =============================================================================

def test_star_S_examples():
    assert star_S(P(1), P(1)) == FreeElement.sum_of([P(1, 2), P(2, 1)])
    assert star_S(P(2, 1), P(1)) == FreeElement.sum_of([P(2, 1, 3), P(3, 1, 2), P(3, 2, 1)])
    assert star_S(P(), P(2, 1)) == FreeElement.of(P(2, 1)) == star_S(P(2, 1), P())


@pytest.mark.parametrize('n', range(6))
def test_star_S_is_interval(n):
    for sigma, tau in pairs(enumerate_perms, n):
        direct = star_S(sigma, tau)
        assert direct == star_S_interval(sigma, tau)
        assert set(direct.values()) == {1}
        assert len(direct) == math.comb(n, sigma.grade)


def test_dendriform_examples():
    assert succ_S(P(1), P(1)) == FreeElement.of(P(1, 2))
    assert prec_S(P(1), P(1)) == FreeElement.of(P(2, 1))
    with pytest.raises(ValueError):
        prec_S(P(), P(1))
    with pytest.raises(ValueError):
        succ_S(P(1), P())


@pytest.mark.parametrize('n', range(2, 6))
def test_dendriform_interval_forms(n):
    for sigma, tau in pairs(enumerate_perms, n, lowest=1):
        assert prec_S(sigma, tau) == prec_S_interval(sigma, tau)
        assert succ_S(sigma, tau) == succ_S_interval(sigma, tau)
        assert prec_S(sigma, tau) + succ_S(sigma, tau) == star_S(sigma, tau)


def _dendriform_relations(star, prec, succ, a, b, c):
    x, y, z = FreeElement.of(a), FreeElement.of(b), FreeElement.of(c)

    def mul(f):
        return lambda u, v: bilinear_extend(f, u, v)

    m, left, right = mul(star), mul(prec), mul(succ)
    assert left(left(x, y), z) == left(x, m(y, z))
    assert left(right(x, y), z) == right(x, left(y, z))
    assert right(m(x, y), z) == right(x, right(y, z))
    assert m(m(x, y), z) == m(x, m(y, z))


@given(perms(1), perms(1), perms(1))
def test_permutation_dendriform(a, b, c):
    _dendriform_relations(star_S, prec_S, succ_S, a, b, c)


@given(trees(1), trees(1), trees(1))
def test_tree_dendriform(a, b, c):
    _dendriform_relations(star_Y, prec_Y, succ_Y, a, b, c)


# =============================================================================
# Trees
# =============================================================================

def test_star_Y_examples():
    assert star_Y(Y1, Y1) == FreeElement.sum_of([left_comb(2), right_comb(2)])
    assert prec_Y(Y1, Y1) == FreeElement.of(right_comb(2))
    assert succ_Y(Y1, Y1) == FreeElement.of(left_comb(2))
    assert star_Y(LEAF, right_comb(3)) == FreeElement.of(right_comb(3))
    assert star_Y_interval(right_comb(3), LEAF) == FreeElement.of(right_comb(3))
    with pytest.raises(ValueError):
        prec_Y(LEAF, Y1)


@pytest.mark.parametrize('n', range(7))
def test_star_Y_is_interval(n):
    for t, w in pairs(enumerate_trees, n):
        direct = star_Y(t, w)
        assert direct == star_Y_interval(t, w)
        assert set(direct.values()) == {1}
        # each term u stands for the |fiber(u)| permutations psi* sends it to
        weighted = sum(c * psi_star(u).coefficient_sum() for u, c in direct.items())
        expected = (math.comb(n, t.grade) * psi_star(t).coefficient_sum()
                    * psi_star(w).coefficient_sum())
        assert weighted == expected


def test_star_Y_term_count_is_interval_size():
    t, w = Y1, right_comb(2)
    assert star_Y(t, w) == FreeElement.sum_of(tree_interval(over_tree(t, w), under_tree(t, w)))
    assert len(star_Y(t, w)) == 2


@given(trees(), trees())
def test_psi_star_preserves_star(t, w):
    lhs = linear_extend(psi_star, star_Y(t, w))
    rhs = bilinear_extend(star_S, psi_star(t), psi_star(w))
    assert lhs == rhs


@given(trees(1), trees(1))
def test_psi_star_preserves_dendriform(t, w):
    assert linear_extend(psi_star, prec_Y(t, w)) == bilinear_extend(prec_S, psi_star(t), psi_star(w))
    assert linear_extend(psi_star, succ_Y(t, w)) == bilinear_extend(succ_S, psi_star(t), psi_star(w))


def test_psi_star_values():
    assert psi_star(Y1) == FreeElement.of(P(1))
    assert psi_star(LEAF) == FreeElement.of(P())
    images = [psi_star(t) for t in enumerate_trees(4)]
    assert sum((img.coefficient_sum() for img in images)) == 24
    supports = [img.support() for img in images]
    assert all(not a & b for i, a in enumerate(supports) for b in supports[i + 1:])


# =============================================================================
# Cube vertices
# =============================================================================

def test_star_Q_examples():
    plus_, minus_ = parse_sign_vector('+'), parse_sign_vector('-')
    assert star_Q(plus_, minus_) == FreeElement.sum_of(
        [parse_sign_vector('+--'), parse_sign_vector('++-')])
    empty = parse_sign_vector('')
    assert star_Q(empty, empty) == FreeElement.sum_of([minus_, plus_])
    assert star_Q(UNIT, plus_) == FreeElement.of(plus_)


@given(vectors(), vectors())
def test_star_Q_two_terms(eps, delta):
    product = star_Q(eps, delta)
    assert len(product) == 2
    assert product == star_Q_interval(eps, delta)


@given(vectors(0), vectors(0))
def test_phi_star_preserves_star(eps, delta):
    lhs = linear_extend(phi_star, star_Q(eps, delta))
    rhs = bilinear_extend(star_Y, phi_star(eps), phi_star(delta))
    assert lhs == rhs


def test_phi_star_values():
    assert phi_star(minus(5)) == FreeElement.of(left_comb(5))
    assert phi_star(UNIT) == FreeElement.of(LEAF)
    supports = [phi_star(e).support() for e in enumerate_sign_vectors(5)]
    assert all(not a & b for i, a in enumerate(supports) for b in supports[i + 1:])
    assert sum(len(s) for s in supports) == 42


@pytest.mark.parametrize('n', range(1, 6))
def test_composite_embedding_counts_fibers(n):
    for eps in enumerate_sign_vectors(n):
        image = psi_star_of(phi_star(eps))
        expected = FreeElement.sum_of(s for s in enumerate_perms(n) if phi(psi(s)) == eps)
        assert image == expected
        assert set(image.values()) == {1}


def test_embeddings_on_sums():
    a = FreeElement({parse_sign_vector('+'): 2, parse_sign_vector('-'): -1})
    assert phi_star_of(a) == 2 * phi_star(parse_sign_vector('+')) - phi_star(parse_sign_vector('-'))
    assert psi_star_of(phi_star_of(a)) == 2 * FreeElement.of(P(2, 1)) - FreeElement.of(P(1, 2))
    assert psi_star_of(ZERO) == ZERO


def test_star_S_rejects_repeated_terms(monkeypatch):
    monkeypatch.setattr(products, 'shuffles', lambda p, q: perm.shuffles(p, q) * 2)
    with pytest.raises(RuntimeError):
        star_S(P(1), P(1))
