# -*- coding: utf-8 -*-
"""
Abstract interface for finite Coxeter systems (W, S).

Generators are addressed by index ``0 .. rank - 1``. Concrete systems supply
the group law and a closed-form length; the carrier, the Coxeter matrix and
breadth-first word lengths are derived here.
"""
import threading
import logging
from abc import ABC, abstractmethod
from collections import deque
from typing import Any, Dict, Hashable, List, Tuple

logger = logging.getLogger(__name__)

Element = Hashable


class CoxeterSystem(ABC):

    def __init__(self) -> None:
        self._lock = threading.RLock()
        self._elements = None
        self._word_lengths = None

    def __repr__(self) -> str:
        return '<{}(rank={})>'.format(type(self).__name__, self.rank)

    def generators(self) -> Tuple[Element, ...]:
        return tuple(self.generator(i) for i in range(self.rank))

    def multiply_right(self, w: Element, i: int) -> Element:
        """``w . s_i``."""
        return self.multiply(w, self.generator(i))

    def multiply_left(self, i: int, w: Element) -> Element:
        """``s_i . w``."""
        return self.multiply(self.generator(i), w)

    def check_subset(self, J) -> frozenset:
        """
        Validates a set of generator indices.

        :raises ValueError: if an index is out of range.
        """
        J = frozenset(J)
        bad = sorted(j for j in J if not 0 <= j < self.rank)
        if bad:
            raise ValueError('Generator indices {} out of range for rank {}'.format(
                bad, self.rank))
        return J

    def _breadth_first(self) -> Dict[Element, int]:
        unit = self.unit()
        distance = {unit: 0}
        queue = deque([unit])
        while queue:
            w = queue.popleft()
            for i in range(self.rank):
                nxt = self.multiply_right(w, i)
                if nxt not in distance:
                    distance[nxt] = distance[w] + 1
                    queue.append(nxt)
        return distance

    def word_lengths(self) -> Dict[Element, int]:
        """Length of a shortest word in the generators, for every element."""
        with self._lock:
            if self._word_lengths is None:
                self._word_lengths = self._breadth_first()
                logger.debug('%r has %s elements', self, len(self._word_lengths))
            return self._word_lengths

    def elements(self) -> Tuple[Element, ...]:
        """The whole carrier, ordered by length and then by element."""
        with self._lock:
            if self._elements is None:
                self._elements = tuple(sorted(self.word_lengths(),
                                              key=lambda w: (self.length(w), self.sort_key(w))))
            return self._elements

    def order(self, w: Element) -> int:
        unit = self.unit()
        power, k = w, 1
        while power != unit:
            power = self.multiply(power, w)
            k += 1
        return k

    def coxeter_matrix(self) -> List[List[int]]:
        """``m(s_i, s_j)``, the order of ``s_i . s_j``."""
        gens = self.generators()
        return [[self.order(self.multiply(a, b)) for b in gens] for a in gens]

    def sort_key(self, w: Element) -> Any:
        return w

    # ABSTRACT METHODS

    @property
    @abstractmethod
    def rank(self) -> int:
        """Number of simple generators."""
        raise NotImplementedError()

    @abstractmethod
    def unit(self) -> Element:
        raise NotImplementedError()

    @abstractmethod
    def generator(self, i: int) -> Element:
        """
        Returns the simple generator with index ``i``.

        :param int i: Index in ``0 .. rank - 1``.
        """
        raise NotImplementedError()

    @abstractmethod
    def multiply(self, a: Element, b: Element) -> Element:
        raise NotImplementedError()

    @abstractmethod
    def inverse(self, a: Element) -> Element:
        raise NotImplementedError()

    @abstractmethod
    def length(self, a: Element) -> int:
        """Coxeter length from a closed-form statistic."""
        raise NotImplementedError()
