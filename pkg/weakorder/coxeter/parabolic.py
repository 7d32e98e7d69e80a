# -*- coding: utf-8 -*-
"""
Parabolic subgroups W_J, minimal coset representatives X_J and the weak order,
written against :class:`CoxeterSystem` only.
"""
import logging
from collections import deque
from typing import Iterable, Tuple

from .base import CoxeterSystem, Element

logger = logging.getLogger(__name__)


def x_j_set(W: CoxeterSystem, J: Iterable[int]) -> Tuple[Element, ...]:
    """``X_J``: elements w with ``l(w . s) > l(w)`` for every s in J."""
    J = W.check_subset(J)
    return tuple(w for w in W.elements()
                 if all(W.length(W.multiply_right(w, j)) > W.length(w) for j in J))


def parabolic_subgroup(W: CoxeterSystem, J: Iterable[int]) -> Tuple[Element, ...]:
    """``W_J``, generated from the unit by the generators in J."""
    J = W.check_subset(J)
    unit = W.unit()
    seen = {unit}
    queue = deque([unit])
    while queue:
        w = queue.popleft()
        for j in J:
            nxt = W.multiply_right(w, j)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return tuple(sorted(seen, key=lambda w: (W.length(w), W.sort_key(w))))


def parabolic_factor(W: CoxeterSystem, w: Element, J: Iterable[int]
                     ) -> Tuple[Element, Element]:
    """
    Returns the unique ``(x, y)`` with ``w = x . y``, x in X_J and y in W_J.
    Lengths add: ``l(w) = l(x) + l(y)``.
    """
    J = W.check_subset(J)
    representatives = set(x_j_set(W, J))
    for y in parabolic_subgroup(W, J):
        x = W.multiply(w, W.inverse(y))
        if x in representatives:
            return x, y
    raise RuntimeError('{!r} has no parabolic factorization for J={}'.format(w, sorted(J)))


def weak_leq(W: CoxeterSystem, a: Element, b: Element) -> bool:
    """``a <= b`` iff ``b = y . a`` with ``l(b) = l(y) + l(a)``."""
    y = W.multiply(b, W.inverse(a))
    return W.length(y) + W.length(a) == W.length(b)


def longest_element(W: CoxeterSystem) -> Element:
    return max(W.elements(), key=W.length)


def w_j_0(W: CoxeterSystem, J: Iterable[int]) -> Element:
    """Longest element of W_J."""
    return max(parabolic_subgroup(W, J), key=W.length)


def x_j_0(W: CoxeterSystem, J: Iterable[int]) -> Element:
    """The X_J factor of the longest element, ``w^0 = x_J^0 . w_J^0``."""
    return W.multiply(longest_element(W), W.inverse(w_j_0(W, J)))
