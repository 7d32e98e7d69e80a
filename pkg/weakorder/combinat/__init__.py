# -*- coding: utf-8 -*-
"""Basis families: permutations, planar binary trees and cube vertices."""
from .perm import Permutation, parse_permutation
from .tree import LEAF, Tree, parse_tree
from .cube import UNIT, SignVector, parse_sign_vector

__all__ = ['Permutation', 'parse_permutation', 'LEAF', 'Tree', 'parse_tree',
           'UNIT', 'SignVector', 'parse_sign_vector']
