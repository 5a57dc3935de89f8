# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.arithfun
============

Arithmetical functions on the positive integers, their Dirichlet and
unitary convolutions, and (complete) multiplicativity and additivity
tests.

"""

from .core import *
