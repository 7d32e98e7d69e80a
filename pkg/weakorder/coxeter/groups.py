# -*- coding: utf-8 -*-
"""
Concrete finite Coxeter systems: S_n (type A_{n-1}), signed permutations
(type B_n) and the dihedral groups I_2(m).
"""
from typing import Tuple

import numpy as np

from .base import CoxeterSystem
from ..combinat import perm


def _inversions(window) -> int:
    if len(window) < 2:
        return 0
    w = np.asarray(window)
    return int(np.count_nonzero(np.triu(w[:, None] > w[None, :], k=1)))


class SymmetricGroup(CoxeterSystem):
    """S_n on :class:`~weakorder.combinat.perm.Permutation`; index i is ``s_{i+1}``."""

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError('S_n needs n >= 1, got {}'.format(n))
        super().__init__()
        self.n = n

    def __repr__(self) -> str:
        return '<SymmetricGroup({})>'.format(self.n)

    @property
    def rank(self) -> int:
        return self.n - 1

    def unit(self):
        return perm.identity(self.n)

    def generator(self, i):
        if not 0 <= i < self.rank:
            raise ValueError('S_{} has no generator with index {}'.format(self.n, i))
        return perm.simple_transposition(i + 1, self.n)

    def multiply(self, a, b):
        return perm.compose(a, b)

    def inverse(self, a):
        return perm.inverse(a)

    def length(self, a):
        return perm.length(a)


class HyperoctahedralGroup(CoxeterSystem):
    """
    Signed permutations of 1..n in window notation ``(w(1), ..., w(n))`` with
    ``w(-i) = -w(i)``. Index 0 is ``s_0``, which negates the first entry when
    acting on the right; index i >= 1 swaps positions i and i + 1.
    """

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError('B_n needs n >= 1, got {}'.format(n))
        super().__init__()
        self.n = n

    def __repr__(self) -> str:
        return '<HyperoctahedralGroup({})>'.format(self.n)

    @property
    def rank(self) -> int:
        return self.n

    def unit(self) -> Tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def generator(self, i):
        if not 0 <= i < self.rank:
            raise ValueError('B_{} has no generator with index {}'.format(self.n, i))
        word = list(range(1, self.n + 1))
        if i == 0:
            word[0] = -1
        else:
            word[i - 1], word[i] = word[i], word[i - 1]
        return tuple(word)

    def multiply(self, a, b):
        """``(a . b)(j) = a(b(j))``."""
        return tuple(a[abs(v) - 1] if v > 0 else -a[abs(v) - 1] for v in b)

    def inverse(self, a):
        word = [0] * len(a)
        for position, value in enumerate(a, start=1):
            word[abs(value) - 1] = position if value > 0 else -position
        return tuple(word)

    def length(self, a):
        """Window inversions plus the sum of the absolute values of negative entries."""
        return _inversions(a) - sum(v for v in a if v < 0)


class DihedralGroup(CoxeterSystem):
    """
    I_2(m) with elements ``(k, flag)`` standing for ``r^k a^flag``, where
    ``a`` and ``b = r^-1 a`` are the simple reflections and ``r = a . b``.
    """

    def __init__(self, m: int) -> None:
        if m < 2:
            raise ValueError('I_2(m) needs m >= 2, got {}'.format(m))
        super().__init__()
        self.m = m

    def __repr__(self) -> str:
        return '<DihedralGroup({})>'.format(self.m)

    @property
    def rank(self) -> int:
        return 2

    def unit(self):
        return 0, 0

    def generator(self, i):
        if i == 0:
            return 0, 1
        if i == 1:
            return self.m - 1, 1
        raise ValueError('I_2({}) has no generator with index {}'.format(self.m, i))

    def multiply(self, a, b):
        k1, f1 = a
        k2, f2 = b
        # a r a = r^-1
        k = (k1 - k2 if f1 else k1 + k2) % self.m
        return k, f1 ^ f2

    def inverse(self, a):
        k, flag = a
        return a if flag else ((-k) % self.m, 0)

    def length(self, a):
        k, flag = a
        m = self.m
        if flag:
            return min(2 * k + 1, 2 * (m - k) - 1)
        return min(2 * k, 2 * (m - k))
