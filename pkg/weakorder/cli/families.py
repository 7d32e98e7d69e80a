# -*- coding: utf-8 -*-
"""
The three basis families as seen from the command line: how to parse an
operand, enumerate a grade, walk covers and multiply.
"""
from typing import Callable, Dict, NamedTuple

from ..algebra import products
from ..combinat import cube, perm, tree


class Family(NamedTuple):
    name: str
    parse: Callable
    enumerate: Callable
    up_covers: Callable
    leq: Callable
    interval: Callable
    operations: Dict[str, Callable]


FAMILIES = {
    'perm': Family(
        name='perm',
        parse=perm.parse_permutation,
        enumerate=perm.enumerate_perms,
        up_covers=perm.up_covers,
        leq=perm.leq_weak,
        interval=perm.interval,
        operations={
            'star': products.star_S,
            'prec': products.prec_S,
            'succ': products.succ_S,
            'over': perm.over_perm,
            'under': perm.under_perm,
        }),
    'tree': Family(
        name='tree',
        parse=tree.parse_tree,
        enumerate=tree.enumerate_trees,
        up_covers=tree.up_covers_tree,
        leq=tree.leq_tree,
        interval=tree.tree_interval,
        operations={
            'star': products.star_Y,
            'prec': products.prec_Y,
            'succ': products.succ_Y,
            'over': tree.over_tree,
            'under': tree.under_tree,
        }),
    'cube': Family(
        name='cube',
        parse=cube.parse_sign_vector,
        enumerate=cube.enumerate_sign_vectors,
        up_covers=cube.up_covers_cube,
        leq=cube.leq_cube,
        interval=cube.cube_interval,
        operations={
            'star': products.star_Q,
            'over': cube.over_cube,
            'under': cube.under_cube,
        }),
}

OPERATIONS = ('star', 'prec', 'succ', 'over', 'under')


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError('Unknown family {!r}, choose from {}'.format(
            name, ', '.join(FAMILIES)))


def get_operation(family: Family, op: str) -> Callable:
    try:
        return family.operations[op]
    except KeyError:
        raise ValueError('Operation {!r} is not available for family {!r}'.format(
            op, family.name))
