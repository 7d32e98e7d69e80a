# -*- coding: utf-8 -*-
"""
Associative and dendriform products on Q[S], Q[Y] and Q[Q], their weak-order
interval forms, and the algebra maps psi* : Q[Y] -> Q[S], phi* : Q[Q] -> Q[Y].

Basis products return :class:`FreeElement`; use :func:`bilinear_extend` to
multiply sums.
"""
import logging
from functools import lru_cache

from ..combinat.perm import (Permutation, compose, direct_product, graft_perm,
                             identity, interval, over_perm, shuffle_first,
                             shuffle_last, shuffles, under_perm, xi)
from ..combinat.tree import (LEAF, Tree, fiber, over_tree, tree_interval,
                             under_tree)
from ..combinat.cube import (SignVector, cube_interval, max_tree, min_tree,
                             over_cube, under_cube)
from .free import FreeElement, linear_extend

logger = logging.getLogger(__name__)


def _check_augmented(x, y) -> None:
    if x.grade == 0 or y.grade == 0:
        raise ValueError('Dendriform products need operands of positive grade, '
                         'got grades {} and {}'.format(x.grade, y.grade))


# =============================================================================
# Permutations
# =============================================================================

def _shuffle_sum(carrier, sigma: Permutation, tau: Permutation) -> FreeElement:
    base = direct_product(sigma, tau)
    terms = [compose(x, base) for x in carrier]
    element = FreeElement.sum_of(terms)
    if len(element) != len(terms):
        raise RuntimeError('Shuffle product of {} and {} has repeated terms'.format(sigma, tau))
    return element


def star_S(sigma: Permutation, tau: Permutation) -> FreeElement:
    """``sigma * tau``: every (p, q)-shuffle applied to ``sigma x tau``."""
    return _shuffle_sum(shuffles(sigma.grade, tau.grade), sigma, tau)


def star_S_interval(sigma: Permutation, tau: Permutation) -> FreeElement:
    """``sigma * tau`` as the interval ``[sigma / tau, sigma \\ tau]``."""
    return FreeElement.sum_of(interval(over_perm(sigma, tau), under_perm(sigma, tau)))


def prec_S(sigma: Permutation, tau: Permutation) -> FreeElement:
    """Shuffles sending p to p + q: the last value comes from sigma."""
    _check_augmented(sigma, tau)
    return _shuffle_sum(shuffle_first(sigma.grade, tau.grade), sigma, tau)


def succ_S(sigma: Permutation, tau: Permutation) -> FreeElement:
    """Shuffles fixing p + q: the last value comes from tau."""
    _check_augmented(sigma, tau)
    return _shuffle_sum(shuffle_last(sigma.grade, tau.grade), sigma, tau)


def prec_S_interval(sigma: Permutation, tau: Permutation) -> FreeElement:
    _check_augmented(sigma, tau)
    p, q = sigma.grade, tau.grade
    low = compose(graft_perm(identity(p - 1), identity(q)), direct_product(sigma, tau))
    return FreeElement.sum_of(interval(low, under_perm(sigma, tau)))


def succ_S_interval(sigma: Permutation, tau: Permutation) -> FreeElement:
    _check_augmented(sigma, tau)
    p, q = sigma.grade, tau.grade
    high = compose(direct_product(xi(p, q - 1), identity(1)), direct_product(sigma, tau))
    return FreeElement.sum_of(interval(over_perm(sigma, tau), high))


# =============================================================================
# Trees
# =============================================================================

def _succ_Y(t: Tree, w: Tree) -> FreeElement:
    return linear_extend(lambda u: Tree(u, w.right), star_Y(t, w.left))


def _prec_Y(t: Tree, w: Tree) -> FreeElement:
    return linear_extend(lambda u: Tree(t.left, u), star_Y(t.right, w))


@lru_cache(maxsize=None)
def star_Y(t: Tree, w: Tree) -> FreeElement:
    """``t * w = (t * w^l) v w^r + t^l v (t^r * w)``, with the leaf as unit."""
    if t.is_leaf:
        return FreeElement.of(w)
    if w.is_leaf:
        return FreeElement.of(t)
    return _succ_Y(t, w) + _prec_Y(t, w)


def star_Y_interval(t: Tree, w: Tree) -> FreeElement:
    return FreeElement.sum_of(tree_interval(over_tree(t, w), under_tree(t, w)))


def prec_Y(t: Tree, w: Tree) -> FreeElement:
    _check_augmented(t, w)
    return _prec_Y(t, w)


def succ_Y(t: Tree, w: Tree) -> FreeElement:
    _check_augmented(t, w)
    return _succ_Y(t, w)


# =============================================================================
# Cube vertices
# =============================================================================

def star_Q(eps: SignVector, delta: SignVector) -> FreeElement:
    """``eps * delta = eps / delta + eps \\ delta``; the grade 0 vector is the unit."""
    if eps.grade == 0:
        return FreeElement.of(delta)
    if delta.grade == 0:
        return FreeElement.of(eps)
    return FreeElement.sum_of((over_cube(eps, delta), under_cube(eps, delta)))


def star_Q_interval(eps: SignVector, delta: SignVector) -> FreeElement:
    return FreeElement.sum_of(cube_interval(over_cube(eps, delta), under_cube(eps, delta)))


# =============================================================================
# Algebra maps
# =============================================================================

def psi_star(t: Tree) -> FreeElement:
    """Sum of the permutations in the psi-fiber of t."""
    if t.is_leaf:
        return FreeElement.of(Permutation(()))
    return FreeElement.sum_of(fiber(t))


def phi_star(eps: SignVector) -> FreeElement:
    """Sum of the trees in the phi-fiber of eps."""
    if eps.grade == 0:
        return FreeElement.of(LEAF)
    return FreeElement.sum_of(tree_interval(min_tree(eps), max_tree(eps)))


def psi_star_of(a: FreeElement) -> FreeElement:
    return linear_extend(psi_star, a)


def phi_star_of(a: FreeElement) -> FreeElement:
    return linear_extend(phi_star, a)
