# -*- coding: utf-8 -*-
"""
Vertices of the cube Q_n = {-1, +1}^(n-1) and the map phi: Y_n -> Q_n.

phi records the orientation of the interior leaves of a tree, left to right:
``+1`` for a leaf hanging to the left of its parent, ``-1`` for one hanging
to the right.
"""
import itertools
import logging
import numbers
from dataclasses import dataclass
from typing import Optional, Tuple

from .tree import (LEAF, Tree, enumerate_trees, left_comb, over_tree,
                   right_comb, tree_interval, under_tree)

logger = logging.getLogger(__name__)

_SYMBOLS = {'+': 1, '-': -1}


@dataclass(frozen=True)
class SignVector:
    """
    A vertex of Q_n. ``grade`` is ``len(signs) + 1``, except for the unit of
    the algebra which has grade 0 and no signs.
    """

    signs: Tuple[int, ...]
    grade: Optional[int] = None

    def __post_init__(self):
        if any(isinstance(s, bool) or not isinstance(s, numbers.Integral) or s not in (-1, 1)
               for s in self.signs):
            raise ValueError('Signs must be -1 or +1, got {!r}'.format(self.signs))
        signs = tuple(int(s) for s in self.signs)
        grade = len(signs) + 1 if self.grade is None else self.grade
        if grade != len(signs) + 1 and not (grade == 0 and not signs):
            raise ValueError('{} signs do not describe a vertex of Q_{}'.format(
                len(signs), grade))
        object.__setattr__(self, 'signs', signs)
        object.__setattr__(self, 'grade', grade)

    @property
    def sort_key(self) -> Tuple[int, ...]:
        return self.signs

    def __str__(self) -> str:
        if self.grade == 0:
            return '()'
        return ''.join('+' if s > 0 else '-' for s in self.signs)

    def __repr__(self) -> str:
        return 'SignVector({!r})'.format(str(self))


UNIT = SignVector((), 0)


def parse_sign_vector(text: str) -> SignVector:
    """``'+-+'`` is (+1, -1, +1) in Q_4, ``''`` is Q_1 and ``'()'`` the unit."""
    body = text.strip()
    if body == '()':
        return UNIT
    try:
        return SignVector(tuple(_SYMBOLS[c] for c in body))
    except KeyError:
        raise ValueError('Invalid sign vector {!r}: use "+" and "-" only'.format(text))


def minus(n: int) -> SignVector:
    """``(-1)_n``."""
    return SignVector((-1,) * (n - 1))


def plus(n: int) -> SignVector:
    """``(+1)_n``."""
    return SignVector((1,) * (n - 1))


def enumerate_sign_vectors(n: int) -> Tuple[SignVector, ...]:
    if n == 0:
        return (UNIT,)
    if n < 0:
        raise ValueError('Grade must be non-negative, got {}'.format(n))
    return tuple(SignVector(s) for s in itertools.product((-1, 1), repeat=n - 1))


def _check_grades(eps: SignVector, eta: SignVector) -> None:
    if eps.grade != eta.grade:
        raise ValueError('Grade mismatch: {!r} has grade {} but {!r} has grade {}'.format(
            str(eps), eps.grade, str(eta), eta.grade))


def _check_positive(*vectors: SignVector) -> None:
    if any(v.grade == 0 for v in vectors):
        raise ValueError('Operation is not defined on the grade 0 unit')


# =============================================================================
# Order
# =============================================================================

def leq_cube(eps: SignVector, eta: SignVector) -> bool:
    _check_grades(eps, eta)
    return all(a <= b for a, b in zip(eps.signs, eta.signs))


def up_covers_cube(eps: SignVector) -> Tuple[SignVector, ...]:
    signs = eps.signs
    return tuple(sorted(
        (SignVector(signs[:i] + (1,) + signs[i + 1:]) for i, s in enumerate(signs) if s < 0),
        key=lambda v: v.sort_key))


def cube_interval(low: SignVector, high: SignVector) -> Tuple[SignVector, ...]:
    """Boolean interval: free coordinates are those where low and high differ."""
    _check_grades(low, high)
    if not leq_cube(low, high):
        return ()
    if low.grade == 0:
        return (low,)
    choices = [(a,) if a == b else (-1, 1) for a, b in zip(low.signs, high.signs)]
    return tuple(SignVector(s) for s in itertools.product(*choices))


# =============================================================================
# Grafting, over and under
# =============================================================================

def graft_cube(eps: SignVector, eta: SignVector) -> SignVector:
    _check_positive(eps, eta)
    return SignVector(eps.signs + (-1, 1) + eta.signs)


def _insert(eps: SignVector, eta: SignVector, sign: int) -> SignVector:
    if eps.grade == 0:
        return eta
    if eta.grade == 0:
        return eps
    return SignVector(eps.signs + (sign,) + eta.signs)


def over_cube(eps: SignVector, eta: SignVector) -> SignVector:
    return _insert(eps, eta, -1)


def under_cube(eps: SignVector, eta: SignVector) -> SignVector:
    return _insert(eps, eta, 1)


# =============================================================================
# phi and its fibers
# =============================================================================

def _leaf_orientations(t: Tree, side: int):
    if t.is_leaf:
        return [side]
    return _leaf_orientations(t.left, 1) + _leaf_orientations(t.right, -1)


def phi(t: Tree) -> SignVector:
    if t.grade == 0:
        raise ValueError('phi is not defined on the leaf')
    return SignVector(tuple(_leaf_orientations(t, 0)[1:-1]))


def _leading_run(signs: Tuple[int, ...], sign: int) -> int:
    run = 0
    for s in signs:
        if s != sign:
            break
        run += 1
    return run


def min_tree(eps: SignVector) -> Tree:
    """Smallest tree of the phi-fiber of eps."""
    _check_positive(eps)
    n, signs = eps.grade, eps.signs
    if all(s < 0 for s in signs):
        return left_comb(n)
    if all(s > 0 for s in signs):
        return right_comb(n)
    if signs[0] < 0:
        # eps = (-1)_r / rest
        r = _leading_run(signs, -1)
        rest = SignVector(signs[r:])
        return over_tree(left_comb(r), min_tree(rest))
    # eps = (+1)_k / rest with k = r + 1
    r = _leading_run(signs, 1)
    rest = SignVector(signs[r + 1:])
    return over_tree(right_comb(r + 1), min_tree(rest))


def max_tree(eps: SignVector) -> Tree:
    """Largest tree of the phi-fiber of eps."""
    _check_positive(eps)
    n, signs = eps.grade, eps.signs
    if all(s < 0 for s in signs):
        return left_comb(n)
    if all(s > 0 for s in signs):
        return right_comb(n)
    reverse = signs[::-1]
    if signs[-1] < 0:
        # eps = rest \ (-1)_k with k = r + 1
        r = _leading_run(reverse, -1)
        rest = SignVector(signs[:len(signs) - r - 1])
        return under_tree(max_tree(rest), left_comb(r + 1))
    r = _leading_run(reverse, 1)
    rest = SignVector(signs[:len(signs) - r])
    return under_tree(max_tree(rest), right_comb(r))


def phi_fiber(eps: SignVector) -> Tuple[Tree, ...]:
    """``{t : phi(t) = eps}`` as the tree interval [min(eps), max(eps)]."""
    if eps.grade == 0:
        return (LEAF,)
    return tree_interval(min_tree(eps), max_tree(eps))


def phi_preimage(eps: SignVector) -> Tuple[Tree, ...]:
    """Same set as :func:`phi_fiber` by exhaustive search over Y_n."""
    if eps.grade == 0:
        return (LEAF,)
    return tuple(t for t in enumerate_trees(eps.grade) if phi(t) == eps)
