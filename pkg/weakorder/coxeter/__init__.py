# -*- coding: utf-8 -*-
from .base import CoxeterSystem
from .groups import DihedralGroup, HyperoctahedralGroup, SymmetricGroup
from .parabolic import (longest_element, parabolic_factor, parabolic_subgroup,
                        w_j_0, weak_leq, x_j_0, x_j_set)
