# -*- coding: utf-8 -*-
"""
Monodromy Lab - Hurwitz moves on tuples of Dehn twists.

Integer-exact homology computations for twist tuples of genus-2
Lefschetz fibrations: Hurwitz moves at the tuple and intersection-matrix
levels, checks of the shipped certificates and monodromy identities, a
seeded search for new certificates, and the closed-form hyperbolic
constants that accompany them.
"""

from .constants import APP_NAME, APP_VERSION, APP_AUTHOR

__version__ = APP_VERSION
__author__ = APP_AUTHOR

__all__ = [
    'APP_NAME',
    'APP_VERSION',
    'APP_AUTHOR',
]
