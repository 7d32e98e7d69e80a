# -*- coding: utf-8 -*-
"""
Symmetric groups S_n in one-line notation.

Composition acts on values: ``compose(sigma, tau)(i) == sigma(tau(i))``. Under
this convention the weak order ``omega <= sigma`` (``sigma = tau . omega`` with
lengths adding) is containment of the position inversion sets, and left
multiplication by ``s_i`` swaps the values ``i`` and ``i + 1`` in a word.

Every function returning a collection returns a tuple sorted by one-line word.
"""
import re
import itertools
import logging
import numbers
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

_SEPARATORS = re.compile(r'[,\s]+')


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of ``{1, ..., n}`` given by its word ``(sigma(1), ..., sigma(n))``."""

    word: Tuple[int, ...]

    def __post_init__(self):
        if any(isinstance(x, bool) or not isinstance(x, numbers.Integral) for x in self.word):
            raise ValueError('Permutation entries must be integers, got {!r}'.format(self.word))
        word = tuple(int(x) for x in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError('Not a permutation of 1..{}: {}'.format(len(word), word))
        object.__setattr__(self, 'word', word)

    @property
    def grade(self) -> int:
        return len(self.word)

    @property
    def sort_key(self) -> Tuple[int, ...]:
        return self.word

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return ' '.join(str(x) for x in self.word) if self.word else '()'

    def __repr__(self) -> str:
        return 'Permutation({})'.format(self.word)


def parse_permutation(text: str) -> Permutation:
    """
    Parses one-line notation, e.g. ``'3 1 2'`` or ``'3,1,2'``. The empty string
    and ``'()'`` give the empty permutation.

    :raises ValueError: if the text is not a bijective word on 1..n.
    """
    body = text.strip()
    if body.startswith('(') and body.endswith(')'):
        body = body[1:-1].strip()
    if not body:
        return Permutation(())
    try:
        word = tuple(int(token) for token in _SEPARATORS.split(body) if token)
    except ValueError:
        raise ValueError('Invalid permutation: {!r}'.format(text))
    return Permutation(word)


def _check_grades(sigma: Permutation, tau: Permutation) -> None:
    if sigma.grade != tau.grade:
        raise ValueError('Grade mismatch: {} is in S_{} but {} is in S_{}'.format(
            sigma, sigma.grade, tau, tau.grade))


# =============================================================================
# Group law
# =============================================================================

def identity(n: int) -> Permutation:
    if n < 0:
        raise ValueError('Size must be non-negative, got {}'.format(n))
    return Permutation(tuple(range(1, n + 1)))


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """Returns ``sigma . tau``, i.e. ``i -> sigma(tau(i))``."""
    _check_grades(sigma, tau)
    return Permutation(tuple(sigma.word[t - 1] for t in tau.word))


def inverse(sigma: Permutation) -> Permutation:
    word = [0] * sigma.grade
    for position, value in enumerate(sigma.word, start=1):
        word[value - 1] = position
    return Permutation(tuple(word))


def simple_transposition(i: int, n: int) -> Permutation:
    """The generator ``s_i`` of S_n, ``1 <= i <= n - 1``."""
    if not 1 <= i <= n - 1:
        raise ValueError('s_{} is not a generator of S_{}'.format(i, n))
    word = list(range(1, n + 1))
    word[i - 1], word[i] = word[i], word[i - 1]
    return Permutation(tuple(word))


def cycle(i: int, j: int, n: int) -> Permutation:
    """``c_{i,j} = s_i . s_{i+1} . ... . s_j`` in S_n."""
    result = identity(n)
    for k in range(i, j + 1):
        result = compose(result, simple_transposition(k, n))
    return result


def longest_perm(n: int) -> Permutation:
    """The maximal element ``(n n-1 ... 1)`` of the weak order."""
    return Permutation(tuple(range(n, 0, -1)))


def enumerate_perms(n: int) -> Tuple[Permutation, ...]:
    return tuple(Permutation(w) for w in itertools.permutations(range(1, n + 1)))


def standardize(values: Sequence[int]) -> Permutation:
    """Relabels distinct integers by their ranks, e.g. ``(3, 4, 1) -> (2, 3, 1)``."""
    ranks = {v: r for r, v in enumerate(sorted(values), start=1)}
    return Permutation(tuple(ranks[v] for v in values))


# =============================================================================
# Length, descents, weak order
# =============================================================================

def length(sigma: Permutation) -> int:
    """Number of inversions, which equals the Coxeter length in S_n."""
    if sigma.grade < 2:
        return 0
    w = np.asarray(sigma.word)
    return int(np.count_nonzero(np.triu(w[:, None] > w[None, :], k=1)))


def reduced_word_length(sigma: Permutation) -> int:
    """Length by breadth-first search over products of generators (small n only)."""
    n = sigma.grade
    target = sigma.word
    start = identity(n).word
    distance = {start: 0}
    queue = deque([start])
    while queue:
        word = queue.popleft()
        if word == target:
            return distance[word]
        for i in range(n - 1):
            nxt = word[:i] + (word[i + 1], word[i]) + word[i + 2:]
            if nxt not in distance:
                distance[nxt] = distance[word] + 1
                queue.append(nxt)
    raise RuntimeError('unreachable permutation {}'.format(sigma))


def descents(sigma: Permutation) -> Tuple[int, ...]:
    w = sigma.word
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def leq_weak(omega: Permutation, sigma: Permutation) -> bool:
    """
    Weak order: ``omega <= sigma`` iff ``sigma = tau . omega`` with
    ``l(sigma) = l(tau) + l(omega)``. The only candidate is
    ``tau = sigma . omega^-1``.

    :raises ValueError: if the grades differ.
    """
    _check_grades(omega, sigma)
    tau = compose(sigma, inverse(omega))
    return length(tau) + length(omega) == length(sigma)


def _swap_values(word: Tuple[int, ...], i: int) -> Tuple[int, ...]:
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in word)


def up_covers(omega: Permutation) -> Tuple[Permutation, ...]:
    """``s_i . omega`` for every i raising the length by one."""
    positions = inverse(omega).word
    return tuple(sorted(
        Permutation(_swap_values(omega.word, i))
        for i in range(1, omega.grade) if positions[i - 1] < positions[i]
    ))


def down_covers(omega: Permutation) -> Tuple[Permutation, ...]:
    positions = inverse(omega).word
    return tuple(sorted(
        Permutation(_swap_values(omega.word, i))
        for i in range(1, omega.grade) if positions[i - 1] > positions[i]
    ))


def interval(low: Permutation, high: Permutation) -> Tuple[Permutation, ...]:
    """
    All ``omega`` with ``low <= omega <= high``, found by walking up the cover
    graph from ``low`` and pruning anything not below ``high``.
    """
    _check_grades(low, high)
    if not leq_weak(low, high):
        return ()
    seen = {low}
    queue = deque([low])
    while queue:
        omega = queue.popleft()
        for cover in up_covers(omega):
            if cover not in seen and leq_weak(cover, high):
                seen.add(cover)
                queue.append(cover)
    return tuple(sorted(seen))


# =============================================================================
# Shuffles and parabolic factorization
# =============================================================================

@lru_cache(maxsize=None)
def shuffles(p: int, q: int) -> Tuple[Permutation, ...]:
    """Sh(p, q): permutations of S_{p+q} whose only possible descent is at p."""
    if p < 0 or q < 0:
        raise ValueError('Shuffle sizes must be non-negative')
    values = range(1, p + q + 1)
    result = []
    for first in itertools.combinations(values, p):
        rest = tuple(v for v in values if v not in first)
        result.append(Permutation(first + rest))
    return tuple(sorted(result))


def shuffle_last(p: int, q: int) -> Tuple[Permutation, ...]:
    """Shuffles fixing ``p + q``, i.e. ``omega(p + q) = p + q``."""
    n = p + q
    return tuple(x for x in shuffles(p, q) if n and x(n) == n)


def shuffle_first(p: int, q: int) -> Tuple[Permutation, ...]:
    """Shuffles sending ``p`` to ``p + q``."""
    return tuple(x for x in shuffles(p, q) if p and x(p) == p + q)


def xi(p: int, q: int) -> Permutation:
    """The longest (p, q)-shuffle ``(q+1 ... q+p 1 ... q)``."""
    return Permutation(tuple(range(q + 1, q + p + 1)) + tuple(range(1, q + 1)))


def direct_product(sigma: Permutation, tau: Permutation) -> Permutation:
    """``sigma x tau``: sigma acts on 1..p and tau on p+1..p+q."""
    p = sigma.grade
    return Permutation(sigma.word + tuple(p + t for t in tau.word))


def factorize_parabolic(sigma: Permutation, p: int, q: int
                        ) -> Tuple[Permutation, Permutation]:
    """
    Splits ``sigma`` into ``(xi, omega)`` with ``xi`` a (p, q)-shuffle,
    ``omega`` in ``S_p x S_q`` and ``sigma = xi . omega``.
    """
    if sigma.grade != p + q:
        raise ValueError('{} is not in S_{}'.format(sigma, p + q))
    shuffle = Permutation(tuple(sorted(sigma.word[:p])) + tuple(sorted(sigma.word[p:])))
    return shuffle, compose(inverse(shuffle), sigma)


# =============================================================================
# Grafting, over and under
# =============================================================================

def graft_perm(sigma: Permutation, tau: Permutation) -> Permutation:
    """``sigma v tau``: sigma, then the new maximum, then tau shifted by p."""
    p, q = sigma.grade, tau.grade
    return Permutation(sigma.word + (p + q + 1,) + tuple(t + p for t in tau.word))


def decompose_max(sigma: Permutation) -> Tuple[Permutation, Permutation, Permutation]:
    """
    Returns ``(gamma, sigma_l, sigma_r)`` with
    ``sigma = (gamma x 1_1) . (sigma_l v sigma_r)``, where ``sigma_l`` and
    ``sigma_r`` are the relabelled subwords left and right of the maximum.
    """
    n = sigma.grade
    if n < 1:
        raise ValueError('The empty permutation has no maximum')
    i = sigma.word.index(n)
    left, right = sigma.word[:i], sigma.word[i + 1:]
    gamma = Permutation(tuple(sorted(left)) + tuple(sorted(right)))
    return gamma, standardize(left), standardize(right)


def over_perm(sigma: Permutation, tau: Permutation) -> Permutation:
    """``sigma / tau = sigma x tau``."""
    return direct_product(sigma, tau)


def under_perm(sigma: Permutation, tau: Permutation) -> Permutation:
    """``sigma \\ tau = xi_{p,q} . (sigma x tau)``."""
    return compose(xi(sigma.grade, tau.grade), direct_product(sigma, tau))


def product_of(factors: Iterable[Permutation], n: int) -> Permutation:
    """Left-to-right product of ``factors`` in S_n (the unit if empty)."""
    result = identity(n)
    for factor in factors:
        result = compose(result, factor)
    return result
