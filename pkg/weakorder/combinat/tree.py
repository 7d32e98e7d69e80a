# -*- coding: utf-8 -*-
"""
Planar binary trees Y_n and the map psi: S_n -> Y_n.

A tree is either the leaf ``|`` or a node ``(L,R)``; its grade is the number
of internal nodes. The order on Y_n is generated by right rotations
``((a,b),c) -> (a,(b,c))`` applied at any subtree, so the left comb is the
minimum and the right comb the maximum.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Callable, FrozenSet, List, Optional, Tuple

from .perm import (Permutation, compose, decompose_max, direct_product,
                   enumerate_perms, graft_perm, identity, interval, xi)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tree:
    """Leaf when both children are ``None``, otherwise the graft ``left v right``."""

    left: Optional['Tree'] = None
    right: Optional['Tree'] = None
    grade: int = field(init=False, repr=False, compare=False)
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError('A node needs both a left and a right subtree')
        grade = 0 if self.left is None else self.left.grade + self.right.grade + 1
        object.__setattr__(self, 'grade', grade)
        object.__setattr__(self, '_hash', hash((self.left, self.right)))

    def __hash__(self) -> int:
        return self._hash

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @cached_property
    def serialized(self) -> str:
        if self.is_leaf:
            return '|'
        return '({},{})'.format(self.left.serialized, self.right.serialized)

    @property
    def sort_key(self) -> str:
        return self.serialized

    def __str__(self) -> str:
        return self.serialized

    def __repr__(self) -> str:
        return 'Tree({!r})'.format(self.serialized)


LEAF = Tree()


def parse_tree(text: str) -> Tree:
    """
    Parses ``T ::= "|" | "(" T "," T ")"``, ignoring whitespace.

    :raises ValueError: on malformed input.
    """
    source = ''.join(text.split())

    def parse_at(pos: int) -> Tuple[Tree, int]:
        if pos >= len(source):
            raise ValueError('Unexpected end of tree text {!r}'.format(text))
        if source[pos] == '|':
            return LEAF, pos + 1
        if source[pos] != '(':
            raise ValueError('Unexpected {!r} at offset {} in {!r}'.format(
                source[pos], pos, text))
        left, pos = parse_at(pos + 1)
        if pos >= len(source) or source[pos] != ',':
            raise ValueError('Expected "," at offset {} in {!r}'.format(pos, text))
        right, pos = parse_at(pos + 1)
        if pos >= len(source) or source[pos] != ')':
            raise ValueError('Expected ")" at offset {} in {!r}'.format(pos, text))
        return Tree(left, right), pos + 1

    tree, end = parse_at(0)
    if end != len(source):
        raise ValueError('Trailing characters in tree text {!r}'.format(text))
    return tree


def _check_grades(t: Tree, w: Tree) -> None:
    if t.grade != w.grade:
        raise ValueError('Grade mismatch: {} is in Y_{} but {} is in Y_{}'.format(
            t, t.grade, w, w.grade))


# =============================================================================
# Construction
# =============================================================================

def graft(u: Tree, v: Tree) -> Tree:
    return Tree(u, v)


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> Tuple[Tree, ...]:
    """All trees of grade n ordered by their text form (Catalan many)."""
    if n < 0:
        raise ValueError('Grade must be non-negative, got {}'.format(n))
    if n == 0:
        return (LEAF,)
    trees = [Tree(left, right)
             for i in range(n)
             for left in enumerate_trees(i)
             for right in enumerate_trees(n - 1 - i)]
    logger.debug('Enumerated %s trees of grade %s', len(trees), n)
    return tuple(sorted(trees, key=lambda t: t.serialized))


def left_comb(n: int) -> Tree:
    """``a_n``: every interior leaf points right. Minimum of Y_n."""
    t = LEAF
    for _ in range(n):
        t = Tree(t, LEAF)
    return t


def right_comb(n: int) -> Tree:
    """``z_n``: every interior leaf points left. Maximum of Y_n."""
    t = LEAF
    for _ in range(n):
        t = Tree(LEAF, t)
    return t


def over_tree(u: Tree, v: Tree) -> Tree:
    """``u / v``: the root of u is glued onto the leftmost leaf of v."""
    if v.is_leaf:
        return u
    if u.is_leaf:
        return v
    return Tree(over_tree(u, v.left), v.right)


def under_tree(u: Tree, v: Tree) -> Tree:
    """``u \\ v``: the root of v is glued onto the rightmost leaf of u."""
    if u.is_leaf:
        return v
    if v.is_leaf:
        return u
    return Tree(u.left, under_tree(u.right, v))


# =============================================================================
# Rotation order
# =============================================================================

def _rotate_right(t: Tree) -> Optional[Tree]:
    if t.is_leaf or t.left.is_leaf:
        return None
    return Tree(t.left.left, Tree(t.left.right, t.right))


def _rotate_left(t: Tree) -> Optional[Tree]:
    if t.is_leaf or t.right.is_leaf:
        return None
    return Tree(Tree(t.left, t.right.left), t.right.right)


def _rotations(t: Tree, rotate: Callable[[Tree], Optional[Tree]]) -> List[Tree]:
    if t.is_leaf:
        return []
    result = []
    own = rotate(t)
    if own is not None:
        result.append(own)
    result.extend(Tree(left, t.right) for left in _rotations(t.left, rotate))
    result.extend(Tree(t.left, right) for right in _rotations(t.right, rotate))
    return result


def up_covers_tree(t: Tree) -> Tuple[Tree, ...]:
    return tuple(sorted(_rotations(t, _rotate_right), key=lambda u: u.serialized))


def down_covers_tree(t: Tree) -> Tuple[Tree, ...]:
    return tuple(sorted(_rotations(t, _rotate_left), key=lambda u: u.serialized))


def _closure(start: Tree, step: Callable[[Tree], Tuple[Tree, ...]]) -> FrozenSet[Tree]:
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in step(queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


@lru_cache(maxsize=None)
def _up_set(t: Tree) -> FrozenSet[Tree]:
    return _closure(t, up_covers_tree)


@lru_cache(maxsize=None)
def _down_set(t: Tree) -> FrozenSet[Tree]:
    return _closure(t, down_covers_tree)


def leq_tree(t: Tree, w: Tree) -> bool:
    """True iff w is reachable from t by right rotations."""
    _check_grades(t, w)
    return w in _up_set(t)


def tree_interval(low: Tree, high: Tree) -> Tuple[Tree, ...]:
    _check_grades(low, high)
    members = _up_set(low) & _down_set(high)
    return tuple(sorted(members, key=lambda u: u.serialized))


# =============================================================================
# psi and its fibers
# =============================================================================

def psi(sigma: Permutation) -> Tree:
    """Splits sigma at its maximum, relabels both sides and grafts their images."""
    if sigma.grade == 0:
        return LEAF
    _, sigma_l, sigma_r = decompose_max(sigma)
    return Tree(psi(sigma_l), psi(sigma_r))


def _min_perm(t: Tree) -> Permutation:
    if t.is_leaf:
        return Permutation(())
    return graft_perm(_min_perm(t.left), _min_perm(t.right))


def _max_perm(t: Tree) -> Permutation:
    if t.is_leaf:
        return Permutation(())
    p, q = t.left.grade, t.right.grade
    shift = direct_product(xi(p, q), identity(1))
    return compose(shift, graft_perm(_max_perm(t.left), _max_perm(t.right)))


def min_perm(t: Tree) -> Permutation:
    """Smallest permutation of the psi-fiber of t."""
    if t.is_leaf:
        raise ValueError('The leaf has no minimal permutation')
    return _min_perm(t)


def max_perm(t: Tree) -> Permutation:
    """Largest permutation of the psi-fiber of t."""
    if t.is_leaf:
        raise ValueError('The leaf has no maximal permutation')
    return _max_perm(t)


def fiber(t: Tree) -> Tuple[Permutation, ...]:
    """``{sigma : psi(sigma) = t}`` as the weak-order interval [Min(t), Max(t)]."""
    return interval(min_perm(t), max_perm(t))


def psi_preimage(t: Tree) -> Tuple[Permutation, ...]:
    """Same set as :func:`fiber` by exhaustive search over S_n."""
    return tuple(sigma for sigma in enumerate_perms(t.grade) if psi(sigma) == t)
