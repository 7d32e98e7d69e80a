# -*- coding: utf-8 -*-
"""
Finite formal sums of basis elements with exact integer coefficients.
"""
from collections.abc import Mapping
from typing import Any, Callable, Iterable, Iterator, List, Tuple, Union


def _canonical(basis) -> Tuple[int, Any]:
    return basis.grade, basis.sort_key


class FreeElement(Mapping):
    """
    Immutable mapping from basis elements to nonzero ``int`` coefficients.

    Basis elements must be hashable and expose ``grade`` and ``sort_key``;
    iteration and rendering follow ``(grade, sort_key)``.
    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected = {}
        for basis, coef in items:
            if not isinstance(coef, int):
                raise ValueError('Coefficients must be integers, got {!r}'.format(coef))
            collected[basis] = collected.get(basis, 0) + coef
        self._terms = {b: c for b, c in collected.items() if c}
        self._hash = None

    @classmethod
    def of(cls, basis) -> 'FreeElement':
        """The basis element itself with coefficient 1."""
        return cls({basis: 1})

    @classmethod
    def sum_of(cls, bases: Iterable) -> 'FreeElement':
        """Sum of ``bases`` with multiplicity."""
        return cls((b, 1) for b in bases)

    def __getitem__(self, basis) -> int:
        return self._terms[basis]

    def __iter__(self) -> Iterator:
        return iter(sorted(self._terms, key=_canonical))

    def __len__(self) -> int:
        return len(self._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __eq__(self, other) -> bool:
        if isinstance(other, FreeElement):
            return self._terms == other._terms
        return NotImplemented

    def __add__(self, other: 'FreeElement') -> 'FreeElement':
        if not isinstance(other, FreeElement):
            return NotImplemented
        return FreeElement(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> 'FreeElement':
        return FreeElement({b: -c for b, c in self._terms.items()})

    def __sub__(self, other: 'FreeElement') -> 'FreeElement':
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: int) -> 'FreeElement':
        if not isinstance(scalar, int):
            return NotImplemented
        return FreeElement({b: scalar * c for b, c in self._terms.items()})

    __rmul__ = __mul__

    def terms(self) -> List[Tuple[Any, int]]:
        return [(b, self._terms[b]) for b in self]

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def render(self) -> str:
        """One ``<coefficient>\\t<basis>`` line per term, in canonical order."""
        return '\n'.join('{}\t{}'.format(c, b) for b, c in self.terms())

    def __repr__(self) -> str:
        if not self._terms:
            return 'FreeElement(0)'
        body = ' + '.join('{}*{}'.format(c, b) for b, c in self.terms())
        return 'FreeElement({})'.format(body)


ZERO = FreeElement()


def as_element(value: Union[FreeElement, Any]) -> FreeElement:
    """Wraps a bare basis element; sums pass through."""
    return value if isinstance(value, FreeElement) else FreeElement.of(value)


def linear_extend(f: Callable, a: FreeElement) -> FreeElement:
    """Extends a map on basis elements (basis- or sum-valued) linearly to ``a``."""
    result = []
    for basis, coef in a.items():
        for image, c in as_element(f(basis)).items():
            result.append((image, coef * c))
    return FreeElement(result)


def bilinear_extend(product: Callable, a: FreeElement, b: FreeElement) -> FreeElement:
    """Extends a product of basis elements bilinearly to ``a`` and ``b``."""
    result = []
    for x, cx in a.items():
        for y, cy in b.items():
            for z, cz in as_element(product(x, y)).items():
                result.append((z, cx * cy * cz))
    return FreeElement(result)
