# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.series
==========

Truncated formal power series with the Cauchy product and the
B-weighted products.

"""

from .core import *
