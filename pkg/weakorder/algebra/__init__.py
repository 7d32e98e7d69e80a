# -*- coding: utf-8 -*-
"""Graded free modules on the three bases and their products."""
from .free import ZERO, FreeElement, as_element, bilinear_extend, linear_extend
from .products import (phi_star, prec_S, prec_S_interval, prec_Y, psi_star,
                       star_Q, star_Q_interval, star_S, star_S_interval,
                       star_Y, star_Y_interval, succ_S, succ_S_interval,
                       succ_Y)
