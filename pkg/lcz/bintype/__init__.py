# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.bintype
===========

Binomial types B(n), their binomial coefficients and t(n), the weighted
convolution algebra on 0, 1, 2, ..., and the embeddings of power series
into arithmetical function algebras.

"""

from .core import *
