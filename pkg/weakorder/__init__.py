from .combinat import (LEAF, UNIT, Permutation, SignVector, Tree,
                       parse_permutation, parse_sign_vector, parse_tree)
from .algebra import FreeElement

__version__ = '0.1.0'
__author__ = 'weakorder developers'
